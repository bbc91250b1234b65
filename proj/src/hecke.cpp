#include "qmac/hecke.hpp"

namespace qmac {

void validate_epsilon(const RootSystem& rs, const std::vector<int>& J, const EpsilonChar& eps) {
    for (int i : J)
        for (int j : J) {
            if (i >= j) continue;
            int m = rs.coxeter[i][j];
            if (m != 0 && m % 2 == 1 && eps(i) != eps(j))
                throw Error("invalid-character",
                            "odd Coxeter exponent forces equal signs on " + std::to_string(i) +
                                "," + std::to_string(j));
        }
}

KScalar poincare(const std::vector<WeylElement>& elts, const MultLabel& label) {
    KScalar s;
    for (auto& w : elts) s += label.value(w.word);
    return s;
}

HeckeContext::HeckeContext(const RootSystem& rs, const Labelling& k)
    : rs_(rs), k_(k), kd_(rs.dual_label(k)) {
    for (int i = 0; i <= rs_.rank; ++i) {
        AffineRoot a = rs_.simple_root(i);
        tau_.push_back(q_pow(rs_.tau_exp(a, k_)));
        tau_tilde_.push_back(q_pow(rs_.tau_tilde_exp(a, k_)));
        LaurentPoly num = LaurentPoly(tau_[i] - tau_[i].inverse()) +
                          (tau_tilde_[i] - tau_tilde_[i].inverse()) * root_monomial(rs_, a);
        AffineRoot twice{lvec(2 * a.grad[0], 2 * a.grad[1]), a.cnst * Rat(2)};
        LaurentPoly den = LaurentPoly(KScalar(1)) - root_monomial(rs_, twice);
        b_num_.push_back(num);
        b_den_.push_back(den);
    }
}

KScalar HeckeContext::tau_of(const WeylElement& w) const {
    KScalar v(1);
    for (int i : w.word) v *= tau_[i];
    return v;
}

KScalar HeckeContext::tau_eps_of(const WeylElement& w, const EpsilonChar& eps) const {
    KScalar v(1);
    for (int i : w.word) v *= tau_eps(i, eps);
    return v;
}

MultLabel HeckeContext::tau_label(const std::vector<int>& gens) const {
    MultLabel m;
    for (int i : gens) m.gen[i] = tau_[i];
    return m;
}

MultLabel HeckeContext::tau_sq_label(const std::vector<int>& gens) const {
    MultLabel m;
    for (int i : gens) m.gen[i] = tau_[i] * tau_[i];
    return m;
}

MultLabel HeckeContext::tau_eps_label(const std::vector<int>& gens, const EpsilonChar& eps) const {
    MultLabel m;
    for (int i : gens) m.gen[i] = tau_eps(i, eps);
    return m;
}

MultLabel HeckeContext::tau_eps_sq_label(const std::vector<int>& gens,
                                         const EpsilonChar& eps) const {
    MultLabel m;
    for (int i : gens) m.gen[i] = tau_eps(i, eps) * tau_eps(i, eps);
    return m;
}

LaurentPoly HeckeContext::apply_ti(int i, const LaurentPoly& f) const {
    LaurentPoly sf = weyl_act(rs_, rs_.act_map(i), f);
    LaurentPoly diff = f - sf;
    LaurentPoly out = tau_[i] * sf;
    if (diff.is_zero()) return out;
    LaurentPoly prod = b_num_[i] * diff;
    try {
        out += exact_div(prod, b_den_[i]);
    } catch (const Error& e) {
        throw Error("division-failure",
                    "Demazure-Lusztig division failed at i=" + std::to_string(i));
    }
    return out;
}

LaurentPoly HeckeContext::apply_ti_inv(int i, const LaurentPoly& f) const {
    // T_i^{-1} = T_i - (tau_i - tau_i^{-1})
    return apply_ti(i, f) - (tau_[i] - tau_[i].inverse()) * f;
}

LaurentPoly HeckeContext::apply_omega(int omega_idx, const LaurentPoly& f) const {
    return weyl_act(rs_, rs_.omega.at(omega_idx).map, f);
}

LaurentPoly HeckeContext::apply_t(const WeylElement& w, const LaurentPoly& f) const {
    LaurentPoly g = f;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) g = apply_ti(*it, g);
    if (w.omega != 0) g = apply_omega(w.omega, g);
    return g;
}

LaurentPoly HeckeContext::apply_t_inv(const WeylElement& w, const LaurentPoly& f) const {
    LaurentPoly g = f;
    if (w.omega != 0) g = apply_omega(rs_.omega[w.omega].inverse, g);
    for (int i : w.word) g = apply_ti_inv(i, g);
    return g;
}

LaurentPoly HeckeContext::apply_y(const LVec& lam_prime, const LaurentPoly& f) const {
    LVec plus{std::max<std::int64_t>(lam_prime[0], 0), std::max<std::int64_t>(lam_prime[1], 0)};
    LVec minus{plus[0] - lam_prime[0], plus[1] - lam_prime[1]};
    LaurentPoly g = f;
    if (minus != LVec{0, 0}) g = apply_t_inv(rs_.translation(minus), g);
    if (plus != LVec{0, 0}) g = apply_t(rs_.translation(plus), g);
    return g;
}

LaurentPoly HeckeContext::symmetrise(const std::vector<int>& J, const EpsilonChar& eps,
                                     const LaurentPoly& f) const {
    validate_epsilon(rs_, J, eps);
    LaurentPoly sum;
    for (auto& w : rs_.wj_elements(J)) sum += tau_eps_of(w, eps) * apply_t(w, f);
    WeylElement wj = rs_.longest_element(J);
    return tau_eps_of(wj, eps).inverse() * sum;
}

} // namespace qmac
