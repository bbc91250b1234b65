#include "qmac/laurent.hpp"

#include <algorithm>

namespace qmac {

void LaurentPoly::add_term(const LVec& mu, const KScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mu);
    if (it == terms_.end()) {
        terms_.emplace(mu, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (auto& [mu, c] : b.terms_) r.add_term(mu, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (auto& [mu, c] : b.terms_) r.add_term(mu, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_)
            r.add_term({ma[0] + mb[0], ma[1] + mb[1]}, ca * cb);
    return r;
}

LaurentPoly operator*(const KScalar& c, const LaurentPoly& a) {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (auto& [mu, v] : a.terms_) r.add_term(mu, c * v);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [mu, c] : terms_) r.terms_.emplace(mu, -c);
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (ia->second != ib->second) return false;
    }
    return true;
}

LaurentPoly star(const LaurentPoly& f) {
    LaurentPoly r;
    for (auto& [mu, c] : f.terms()) r.add_term({-mu[0], -mu[1]}, c.star());
    return r;
}

LaurentPoly weyl_act(const RootSystem& rs, const AffineMap& w, const LaurentPoly& f) {
    LaurentPoly r;
    for (auto& [mu, c] : f.terms()) {
        LVec nu = w.apply_linear(mu);
        Rat shift = -rs.pairing(nu, w.trans);
        if (shift.is_zero())
            r.add_term(nu, c);
        else
            r.add_term(nu, c * q_pow(Exponent::unit_of(shift)));
    }
    return r;
}

LaurentPoly root_monomial(const RootSystem& rs, const AffineRoot& a) {
    (void)rs;
    KScalar c = a.cnst.is_zero() ? KScalar(1) : q_pow(Exponent::unit_of(a.cnst));
    return LaurentPoly::monomial(a.grad, c);
}

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw Error("division-by-zero", "laurent divisor is zero");
    if (f.is_zero()) return LaurentPoly();
    LVec mf{INT64_MAX, INT64_MAX}, mg{INT64_MAX, INT64_MAX};
    for (auto& [mu, c] : f.terms())
        for (int i = 0; i < 2; ++i) mf[i] = std::min(mf[i], mu[i]);
    for (auto& [mu, c] : g.terms())
        for (int i = 0; i < 2; ++i) mg[i] = std::min(mg[i], mu[i]);

    // shift to N^2 exponents and divide by the lex-leading term
    std::map<LVec, KScalar> R, G;
    for (auto& [mu, c] : f.terms()) R[{mu[0] - mf[0], mu[1] - mf[1]}] = c;
    for (auto& [mu, c] : g.terms()) G[{mu[0] - mg[0], mu[1] - mg[1]}] = c;
    const LVec eg = G.rbegin()->first;
    const KScalar cg = G.rbegin()->second;

    LaurentPoly h;
    while (!R.empty()) {
        LVec er = R.rbegin()->first;
        KScalar cr = R.rbegin()->second;
        if (er[0] < eg[0] || er[1] < eg[1]) throw Error("not-divisible");
        LVec et{er[0] - eg[0], er[1] - eg[1]};
        KScalar ct = cr / cg;
        h.add_term({et[0] + mf[0] - mg[0], et[1] + mf[1] - mg[1]}, ct);
        for (auto& [mu, c] : G) {
            LVec key{et[0] + mu[0], et[1] + mu[1]};
            auto it = R.find(key);
            KScalar delta = ct * c;
            if (it == R.end()) {
                if (!delta.is_zero()) R.emplace(key, -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero()) R.erase(it);
            }
        }
    }
    return h;
}

LaurentPoly orbit_sum(const RootSystem& rs, const std::vector<int>& J, const LVec& lam0) {
    if (!rs.is_j_dominant(lam0, J)) throw Error("not-J-dominant");
    LaurentPoly r;
    for (auto& mu : rs.orbit_j(lam0, J)) r.add_term(mu, KScalar(1));
    return r;
}

static LVec half_sum_positive(const RootSystem& rs) {
    LVec s{0, 0};
    for (auto& g : rs.pos_finite) {
        s[0] += g[0];
        s[1] += g[1];
    }
    if (s[0] % 2 != 0 || s[1] % 2 != 0) throw Error("internal", "rho not in lattice");
    return {s[0] / 2, s[1] / 2};
}

LaurentPoly weyl_denominator(const RootSystem& rs) {
    if (rs.type == RootType::C1vC1)
        throw Error("unsupported-type", "Weyl denominator closed form needs a reduced type");
    LVec rho = half_sum_positive(rs);
    LaurentPoly d;
    for (auto& w : rs.w0_elements()) {
        KScalar sign = (w.length() % 2 == 0) ? KScalar(1) : KScalar(-1);
        d.add_term(w.map.apply_linear(rho), sign);
    }
    return d;
}

LaurentPoly f_poly(const RootSystem& rs, const KScalar& tau_sq) {
    if (rs.type == RootType::C1vC1)
        throw Error("unsupported-type", "F closed form needs a reduced type");
    LVec rho = half_sum_positive(rs);
    LaurentPoly d;
    for (auto& w : rs.w0_elements()) {
        KScalar c(1);
        for (int i = 0; i < w.length(); ++i) c *= -tau_sq;
        d.add_term(w.map.apply_linear(rho), c);
    }
    return d;
}

std::pair<LVec, KScalar> leading_term(const RootSystem& rs, const LaurentPoly& f) {
    if (f.is_zero()) throw Error("no-unique-maximum", "zero polynomial");
    for (auto& [mu, c] : f.terms()) {
        bool top = true;
        for (auto& [nu, c2] : f.terms())
            if (!rs.order_leq(nu, mu)) { top = false; break; }
        if (top) return {mu, c};
    }
    throw Error("no-unique-maximum");
}

LaurentFraction::LaurentFraction(LaurentPoly n, LaurentPoly d)
    : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw Error("division-by-zero", "zero denominator");
    normalize();
}

void LaurentFraction::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(KScalar(1));
        return;
    }
    LVec lead = den_.terms().rbegin()->first;
    KScalar c = den_.terms().rbegin()->second;
    LaurentPoly shift = LaurentPoly::monomial({-lead[0], -lead[1]}, c.inverse());
    num_ = shift * num_;
    den_ = shift * den_;
}

LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b) {
    if (a.den_ == b.den_) return LaurentFraction(a.num_ + b.num_, a.den_);
    return LaurentFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b) {
    if (a.den_ == b.den_) return LaurentFraction(a.num_ - b.num_, a.den_);
    return LaurentFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b) {
    return LaurentFraction(a.num_ * b.num_, a.den_ * b.den_);
}

LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b) {
    if (b.is_zero()) throw Error("division-by-zero");
    return LaurentFraction(a.num_ * b.den_, a.den_ * b.num_);
}

LaurentFraction LaurentFraction::operator-() const {
    LaurentFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

bool operator==(const LaurentFraction& a, const LaurentFraction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

LaurentFraction star(const LaurentFraction& f) {
    return LaurentFraction(star(f.num()), star(f.den()));
}

LaurentFraction weyl_act(const RootSystem& rs, const AffineMap& w, const LaurentFraction& f) {
    return LaurentFraction(weyl_act(rs, w, f.num()), weyl_act(rs, w, f.den()));
}

} // namespace qmac
