#include "qmac/weights.hpp"

#include <algorithm>

namespace qmac {

TruncSeries TruncSeries::constant(const KScalar& c, Rat order) {
    TruncSeries s(order);
    s.add_term(Rat(0), c);
    return s;
}

TruncSeries TruncSeries::monomial(Rat d, const KScalar& c, Rat order) {
    TruncSeries s(order);
    s.add_term(d, c);
    return s;
}

KScalar TruncSeries::at(Rat d) const {
    auto it = c_.find(d);
    return it == c_.end() ? KScalar() : it->second;
}

bool TruncSeries::zero_to_order(Rat n) const {
    if (order_ < n) throw Error("internal", "series not accurate to requested order");
    for (auto& [d, v] : c_)
        if (d <= n && !v.is_zero()) return false;
    return true;
}

void TruncSeries::add_term(Rat d, const KScalar& v) {
    if (d > order_ || v.is_zero()) return;
    auto it = c_.find(d);
    if (it == c_.end()) {
        c_.emplace(d, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

void TruncSeries::prune() {
    for (auto it = c_.begin(); it != c_.end();)
        it = (it->first > order_) ? c_.erase(it) : std::next(it);
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order_, b.order_));
    for (auto& [d, v] : a.c_) r.add_term(d, v);
    for (auto& [d, v] : b.c_) r.add_term(d, v);
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order_, b.order_));
    for (auto& [d, v] : a.c_) r.add_term(d, v);
    for (auto& [d, v] : b.c_) r.add_term(d, -v);
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    Rat order = std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
    order = std::min(order, TruncSeries::inf());
    TruncSeries r(order);
    for (auto& [da, va] : a.c_) {
        for (auto& [db, vb] : b.c_) {
            Rat d = da + db;
            if (d > r.order()) break;
            r.add_term(d, va * vb);
        }
    }
    return r;
}

TruncSeries operator*(const KScalar& s, const TruncSeries& a) {
    TruncSeries r(a.order_);
    for (auto& [d, v] : a.c_) r.add_term(d, s * v);
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(order_);
    for (auto& [d, v] : c_) r.add_term(d, -v);
    return r;
}

TruncSeries TruncSeries::inverse(Rat to_order) const {
    if (c_.empty()) throw Error("division-by-zero", "inverse of zero series");
    Rat v0 = valuation();
    KScalar c0 = c_.begin()->second;
    // this = c0 q^{v0} (1 + S) with S of positive valuation
    Rat target = std::min(std::min(to_order + v0, order_ - v0), TruncSeries::inf());
    TruncSeries S(target);
    for (auto it = std::next(c_.begin()); it != c_.end(); ++it)
        S.add_term(it->first - v0, it->second / c0);
    TruncSeries acc = TruncSeries::constant(KScalar(1), target);
    if (!S.c_.empty()) {
        TruncSeries pow = TruncSeries::constant(KScalar(1), target);
        Rat sval = S.valuation();
        for (Rat deg = sval; deg <= target; deg += sval) {
            pow = pow * (-S);
            if (pow.c_.empty()) break;
            acc += pow;
        }
    }
    TruncSeries r(target - v0);
    KScalar ci = c0.inverse();
    for (auto& [d, v] : acc.c_) r.add_term(d - v0, ci * v);
    return r;
}

TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) {
    Rat want = std::min(a.order_ - b.valuation(), TruncSeries::inf());
    return a * b.inverse(want);
}

bool TruncSeries::equal_to_order(const TruncSeries& other, Rat n) const {
    if (order_ < n || other.order_ < n)
        throw Error("internal", "series not accurate to requested order");
    return (*this - other).zero_to_order(n);
}

bool hermitian_pair(const TruncSeries& fg, const TruncSeries& gf, Rat n) {
    for (auto& [d, v] : fg.coeffs()) {
        if (d > n || -d > gf.order()) continue;
        if (v != gf.at(-d).star()) return false;
    }
    for (auto& [d, v] : gf.coeffs()) {
        if (d > n || -d > fg.order()) continue;
        if (v != fg.at(-d).star()) return false;
    }
    return true;
}

TruncSeries series_expand(const KScalar& a, Rat N) {
    if (a.is_zero()) return TruncSeries(N);
    auto graded_num = a.num().unit_graded();
    auto graded_den = a.den().unit_graded();
    Rat vnum = graded_num.begin()->first;
    Rat vden = graded_den.begin()->first;
    KScalar c0 = KScalar(graded_den.begin()->second);
    TruncSeries S(TruncSeries::inf());
    for (auto it = std::next(graded_den.begin()); it != graded_den.end(); ++it)
        S.add_term(it->first - vden, KScalar(it->second) / c0);
    Rat target = N - vnum + vden;
    TruncSeries inv = TruncSeries::constant(KScalar(1), target);
    if (!S.coeffs().empty()) {
        TruncSeries pow = TruncSeries::constant(KScalar(1), target);
        Rat sval = S.valuation();
        for (Rat deg = sval; deg <= target; deg += sval) {
            pow = pow * (-S);
            if (pow.coeffs().empty()) break;
            inv += pow;
        }
    }
    TruncSeries out(N);
    KScalar ci = c0.inverse();
    for (auto& [dn, cn] : graded_num) {
        KScalar cnum = KScalar(cn) * ci;
        for (auto& [di, vi] : inv.coeffs()) {
            Rat d = dn - vden + di;
            if (d > N) continue;
            out.add_term(d, cnum * vi);
        }
    }
    return out;
}

const KScalar& WeightContext::ConeFactor::coeff(int m) const {
    // pref * (u_m - u_{m-2}) with u_m = sum_{i+j=m} A^i B^j
    while (static_cast<int>(d.size()) <= m) {
        int n = static_cast<int>(d.size());
        std::vector<KScalar> u(n + 1);
        u[0] = KScalar(1);
        KScalar bpow(1);
        for (int i = 1; i <= n; ++i) {
            bpow *= B;
            u[i] = A * u[i - 1] + bpow;
        }
        KScalar val = u[n];
        if (n >= 2) val -= u[n - 2];
        d.push_back(pref * val);
    }
    return d[m];
}

Rat WeightContext::height(const LVec& nu) const {
    return rs_.pairing(nu, hvec_);
}

WeightContext::WeightContext(const RootSystem& rs, const Labelling& k, int N)
    : rs_(rs), k_(k), N_(N) {
    hvec_ = (rs.rank == 2) ? VecQ{Rat(1), Rat(1)} : VecQ{Rat(1), Rat(0)};

    auto AB = [&](const AffineRoot& a) {
        KScalar A = q_pow(rs_.label_value(a, k_));
        AffineRoot twice{lvec(2 * a.grad[0], 2 * a.grad[1]), a.cnst * Rat(2)};
        KScalar B = rs_.in_system(twice) ? -q_pow(rs_.label_value(twice, k_)) : KScalar(-1);
        return std::pair<KScalar, KScalar>(A, B);
    };

    // linear factors; delta0 as an exact fraction in e(-alpha)
    LaurentPoly num(KScalar(1)), den(KScalar(1));
    for (auto& alpha : rs.pos_linear_indiv) {
        auto [A, B] = AB(AffineRoot{alpha, Rat(0)});
        linear_.push_back(ConeFactor{alpha, A, B, KScalar(1), {}});
        LVec ma{-alpha[0], -alpha[1]};
        LVec m2a{-2 * alpha[0], -2 * alpha[1]};
        num = num * (LaurentPoly(KScalar(1)) - LaurentPoly::monomial(m2a));
        den = den * ((LaurentPoly(KScalar(1)) - A * LaurentPoly::monomial(ma)) *
                     (LaurentPoly(KScalar(1)) - B * LaurentPoly::monomial(ma)));
    }
    delta0_ = LaurentFraction(num, den);

    // Fourier data of (1-y^2)(1-y^{-2}) / ((1-Ay)(1-By)(1-Ay^{-1})(1-By^{-1}))
    // along one root line; the labels agree across directions in each catalog
    // type, so a single record serves all of them.
    {
        auto [A, B] = AB(AffineRoot{rs.pos_linear_indiv.front(), Rat(0)});
        // represented as num(y) / prod over outer (1-p y) and inner (y-p)
        std::map<std::int64_t, KScalar> fnum;
        std::vector<KScalar> outer, inner;
        if (B == KScalar(-1)) {
            // reduced: -(1-y)^2 / ((1-Ay)(y-A))
            fnum[0] = KScalar(-1);
            fnum[1] = KScalar(2);
            fnum[2] = KScalar(-1);
            outer = {A};
            inner = {A};
        } else {
            // -(1-y^2)^2 / ((1-Ay)(1-By)(y-A)(y-B))
            fnum[0] = KScalar(-1);
            fnum[2] = KScalar(2);
            fnum[4] = KScalar(-1);
            outer = {A, B};
            inner = {A, B};
        }
        auto eval_num = [&](const KScalar& y) {
            KScalar v, ypow(1);
            std::int64_t at = 0;
            for (auto& [e, c] : fnum) {
                while (at < e) { ypow *= y; ++at; }
                v += c * ypow;
            }
            return v;
        };
        // constant term at infinity: ratio of top coefficients
        KScalar topden(1);
        for (auto& p : outer) topden *= -p;
        // deg(inner part) adds nothing to the leading coefficient product
        line_.C = fnum.rbegin()->second / topden;
        for (std::size_t i = 0; i < outer.size(); ++i) {
            KScalar p = outer[i];
            KScalar y = p.inverse();
            KScalar denv(1);
            for (std::size_t j = 0; j < outer.size(); ++j)
                if (j != i) denv *= KScalar(1) - outer[j] * y;
            for (auto& pp : inner) denv *= y - pp;
            line_.plus.push_back({eval_num(y) / denv, p});
        }
        for (std::size_t i = 0; i < inner.size(); ++i) {
            KScalar p = inner[i];
            KScalar denv(1);
            for (auto& pp : outer) denv *= KScalar(1) - pp * p;
            for (std::size_t j = 0; j < inner.size(); ++j)
                if (j != i) denv *= p - inner[j];
            line_.minus.push_back({eval_num(p) / denv, p});
        }
    }

    // truncated product over positive indivisible roots with constant > 0
    affine_[{0, 0}][Rat(0)] = KScalar(1);
    for (auto& alpha : rs.pos_linear_indiv) {
        for (int sgn : {1, -1}) {
            LVec g{sgn * alpha[0], sgn * alpha[1]};
            for (Rat kap = rs_.r; kap <= Rat(N_); kap += rs_.r) {
                if (!rs_.in_system(AffineRoot{g, kap})) continue;
                auto [Ak, Bk] = AB(AffineRoot{g, kap});
                ConeFactor fk{g, Ak, Bk, KScalar(1), {}};
                std::map<LVec, std::map<Rat, KScalar>> next;
                for (auto& [mu, ser] : affine_) {
                    for (int m = 0; Rat(m) * kap <= Rat(N_); ++m) {
                        const KScalar& cm = fk.coeff(m);
                        if (cm.is_zero()) continue;
                        LVec nu{mu[0] + m * g[0], mu[1] + m * g[1]};
                        auto& slot = next[nu];
                        for (auto& [d, v] : ser) {
                            Rat nd = d + Rat(m) * kap;
                            if (nd > Rat(N_)) break;
                            auto it = slot.find(nd);
                            if (it == slot.end()) {
                                slot.emplace(nd, v * cm);
                            } else {
                                it->second += v * cm;
                                if (it->second.is_zero()) slot.erase(it);
                            }
                        }
                    }
                }
                for (auto it = next.begin(); it != next.end();)
                    it = it->second.empty() ? next.erase(it) : std::next(it);
                affine_ = std::move(next);
            }
        }
    }
}

KScalar WeightContext::LineFourier::phi(std::int64_t n) const {
    KScalar v;
    if (n >= 0) {
        if (n == 0) v += C;
        for (auto& [r, b] : plus) {
            KScalar bp(1);
            for (std::int64_t i = 0; i < n; ++i) bp *= b;
            v += r * bp;
        }
    } else {
        for (auto& [s, b] : minus) {
            KScalar bp(1);
            for (std::int64_t i = 0; i < -n - 1; ++i) bp *= b;
            v += s * bp;
        }
    }
    return v;
}

KScalar WeightContext::LineFourier::phi_exp(std::int64_t n) const {
    KScalar v = phi(n);
    if (n == 0) v -= C;
    return v;
}

KScalar WeightContext::fourier_linear(const LVec& nu) const {
    auto it = fourier_memo_.find(nu);
    if (it != fourier_memo_.end()) return it->second;
    KScalar out;
    if (rs_.rank == 1) {
        std::int64_t step = rs_.pos_linear_indiv.front()[0];
        if (nu[0] % step == 0) out = line_.phi(nu[0] / step);
    } else {
        // alpha-coordinates of nu; zero off the root lattice
        std::int64_t t1 = 2 * nu[0] + nu[1], t2 = nu[0] + 2 * nu[1];
        if (t1 % 3 == 0 && t2 % 3 == 0) {
            std::int64_t c1 = t1 / 3, c2 = t2 / 3;
            const KScalar& C = line_.C;
            auto pe = [&](std::int64_t n) { return line_.phi_exp(n); };
            // single atom per factor
            out += C * pe(c1) * pe(c2);            // n = 0
            out += C * pe(c2 - c1) * pe(c1);       // n = c1
            out += C * pe(c1 - c2) * pe(c2);       // n = c2
            // two atoms
            if (c1 == c2) out += C * C * pe(c1);
            if (c1 == 0) out += C * C * pe(c2);
            if (c2 == 0) out += C * C * pe(c1);
            // three atoms
            if (c1 == 0 && c2 == 0) out += C * C * C;
            // pure exponential part: rho^3 sum over n of A^{|c1-n|+|c2-n|+|n|}
            const KScalar& rho = line_.plus.front().first;
            const KScalar& A = line_.plus.front().second;
            auto apow = [&](std::int64_t e) {
                KScalar v(1);
                for (std::int64_t i = 0; i < e; ++i) v *= A;
                return v;
            };
            std::int64_t b1 = std::min({std::int64_t(0), c1, c2});
            std::int64_t b3 = std::max({std::int64_t(0), c1, c2});
            KScalar tail_den = (KScalar(1) - apow(3)).inverse();
            KScalar S = apow(c1 + c2 - 3 * b1) * tail_den;      // n <= b1
            S += apow(3 * b3 - c1 - c2) * tail_den;             // n >= b3
            for (std::int64_t n = b1 + 1; n <= b3 - 1; ++n)
                S += apow(std::abs(c1 - n) + std::abs(c2 - n) + std::abs(n));
            out += rho * rho * rho * S;
        }
    }
    return fourier_memo_.emplace(nu, out).first->second;
}

KScalar WeightContext::cone_coeff(const std::vector<ConeFactor>& factors, std::size_t idx,
                                  const LVec& nu,
                                  std::map<std::pair<std::size_t, LVec>, KScalar>& memo) const {
    if (height(nu) < Rat(0)) return KScalar();
    if (idx == factors.size()) return nu == LVec{0, 0} ? KScalar(1) : KScalar();
    auto key = std::make_pair(idx, nu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const ConeFactor& f = factors[idx];
    Rat ha = height(f.alpha);
    KScalar acc;
    LVec rem = nu;
    for (int m = 0; Rat(m) * ha <= height(nu); ++m) {
        const KScalar& cm = f.coeff(m);
        if (!cm.is_zero()) {
            KScalar sub = cone_coeff(factors, idx + 1, rem, memo);
            if (!sub.is_zero()) acc += cm * sub;
        }
        rem = {rem[0] - f.alpha[0], rem[1] - f.alpha[1]};
    }
    return memo.emplace(key, acc).first->second;
}

TruncSeries WeightContext::delta_coeff(const LVec& nu) const {
    auto it = delta_memo_.find(nu);
    if (it != delta_memo_.end()) return it->second;
    TruncSeries out{Rat(N_)};
    for (auto& [mu, ser] : affine_) {
        LVec rest{nu[0] - mu[0], nu[1] - mu[1]};
        KScalar lc = cone_coeff(linear_, 0, rest, linear_memo_);
        if (lc.is_zero()) continue;
        for (auto& [d, v] : ser) out.add_term(d, lc * v);
    }
    delta_memo_[nu] = out;
    return out;
}

TruncSeries WeightContext::nabla_coeff(const LVec& nu) const {
    auto it = nabla_memo_.find(nu);
    if (it != nabla_memo_.end()) return it->second;
    TruncSeries out{Rat(N_)};
    Rat hbound = height(nu) - min_affine_h_;
    std::vector<LVec> basis;
    basis.push_back(rs_.pos_linear_indiv[0]);
    if (rs_.rank == 2) basis.push_back(rs_.pos_linear_indiv[1]);
    Rat h0 = height(basis[0]);
    for (int m0 = 0; Rat(m0) * h0 <= hbound; ++m0) {
        if (basis.size() == 1) {
            LVec mu{m0 * basis[0][0], m0 * basis[0][1]};
            KScalar dc = cone_coeff(delta0_cone_, 0, mu, d0_memo_);
            if (dc.is_zero()) continue;
            out += dc * delta_coeff({nu[0] - mu[0], nu[1] - mu[1]});
        } else {
            Rat h1 = height(basis[1]);
            for (int m1 = 0; Rat(m0) * h0 + Rat(m1) * h1 <= hbound; ++m1) {
                LVec mu{m0 * basis[0][0] + m1 * basis[1][0],
                        m0 * basis[0][1] + m1 * basis[1][1]};
                KScalar dc = cone_coeff(delta0_cone_, 0, mu, d0_memo_);
                if (dc.is_zero()) continue;
                out += dc * delta_coeff({nu[0] - mu[0], nu[1] - mu[1]});
            }
        }
    }
    out.set_order(Rat(N_));
    nabla_memo_[nu] = out;
    return out;
}

TruncSeries WeightContext::ct_delta(const LaurentPoly& h) const {
    TruncSeries out{Rat(N_)};
    for (auto& [mu, c] : h.terms())
        out += series_expand(c, Rat(N_)) * delta_coeff({-mu[0], -mu[1]});
    out.set_order(Rat(N_));
    return out;
}

TruncSeries WeightContext::ct_nabla(const LaurentPoly& h) const {
    TruncSeries out{Rat(N_)};
    for (auto& [mu, c] : h.terms())
        out += series_expand(c, Rat(N_)) * nabla_coeff({-mu[0], -mu[1]});
    out.set_order(Rat(N_));
    return out;
}

TruncSeries WeightContext::inner(const LaurentPoly& f, const LaurentPoly& g) const {
    return ct_delta(f * star(g));
}

TruncSeries WeightContext::inner1(const LaurentPoly& f, const LaurentPoly& g) const {
    TruncSeries one = ct_delta(LaurentPoly(KScalar(1)));
    return inner(f, g) / one;
}

} // namespace qmac
