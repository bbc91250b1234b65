#pragma once

#include <map>

#include "qmac/laurent.hpp"

namespace qmac {

// Multiplicative character of W_J by signs on the generators.
struct EpsilonChar {
    std::map<int, int> sign; // J-index -> +1 / -1

    int operator()(int j) const {
        auto it = sign.find(j);
        return it == sign.end() ? 1 : it->second;
    }
    int value(const std::vector<int>& word) const {
        int s = 1;
        for (int j : word) s *= (*this)(j);
        return s;
    }
    static EpsilonChar trivial() { return EpsilonChar{}; }
    static EpsilonChar sign_char(const std::vector<int>& J) {
        EpsilonChar e;
        for (int j : J) e.sign[j] = -1;
        return e;
    }
};

// Checks well-definedness against the Coxeter matrix of W_J.
void validate_epsilon(const RootSystem& rs, const std::vector<int>& J, const EpsilonChar& eps);

// Multiplicative labelling given on generators, extended along reduced words.
struct MultLabel {
    std::map<int, KScalar> gen;
    KScalar value(const std::vector<int>& word) const {
        KScalar v(1);
        for (int i : word) v *= gen.at(i);
        return v;
    }
};

// Poincare polynomial of a subset of W for a multiplicative labelling.
KScalar poincare(const std::vector<WeylElement>& elts, const MultLabel& label);

// The basic representation's operators for a fixed type and labelling.
class HeckeContext {
public:
    HeckeContext(const RootSystem& rs, const Labelling& k);

    const RootSystem& rs() const { return rs_; }
    const Labelling& k() const { return k_; }
    const Labelling& k_dual() const { return kd_; }

    KScalar tau(int i) const { return tau_.at(i); }
    KScalar tau_tilde(int i) const { return tau_tilde_.at(i); }
    KScalar tau_eps(int j, const EpsilonChar& eps) const {
        return eps(j) == 1 ? tau(j) : -tau(j).inverse();
    }
    // tau_w along a reduced word.
    KScalar tau_of(const WeylElement& w) const;
    KScalar tau_eps_of(const WeylElement& w, const EpsilonChar& eps) const;
    MultLabel tau_label(const std::vector<int>& gens) const;
    MultLabel tau_sq_label(const std::vector<int>& gens) const;
    MultLabel tau_eps_label(const std::vector<int>& gens, const EpsilonChar& eps) const;
    MultLabel tau_eps_sq_label(const std::vector<int>& gens, const EpsilonChar& eps) const;

    // Demazure-Lusztig operator T_i and its inverse.
    LaurentPoly apply_ti(int i, const LaurentPoly& f) const;
    LaurentPoly apply_ti_inv(int i, const LaurentPoly& f) const;
    // T(u) for u in Omega.
    LaurentPoly apply_omega(int omega_idx, const LaurentPoly& f) const;
    // T(w) along the canonical reduced word; and T(w)^{-1}.
    LaurentPoly apply_t(const WeylElement& w, const LaurentPoly& f) const;
    LaurentPoly apply_t_inv(const WeylElement& w, const LaurentPoly& f) const;
    // Commuting Cherednik operators Y^{lambda'}.
    LaurentPoly apply_y(const LVec& lam_prime, const LaurentPoly& f) const;

    // U_J^{(eps)} f.
    LaurentPoly symmetrise(const std::vector<int>& J, const EpsilonChar& eps,
                           const LaurentPoly& f) const;

private:
    const RootSystem& rs_;
    Labelling k_, kd_;
    std::vector<KScalar> tau_, tau_tilde_;
    std::vector<LaurentPoly> b_num_;   // (tau_i - tau_i^{-1}) + (tilde...) e(a_i)
    std::vector<LaurentPoly> b_den_;   // 1 - e(2 a_i)
};

} // namespace qmac
