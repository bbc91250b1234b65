#pragma once

#include <map>

#include "qmac/rootdata.hpp"

namespace qmac {

// Element of A = K[L]; exponents are lattice vectors in the catalog chart.
class LaurentPoly {
public:
    using Terms = std::map<LVec, KScalar>;

    LaurentPoly() = default;
    explicit LaurentPoly(const KScalar& c) {
        if (!c.is_zero()) terms_[LVec{0, 0}] = c;
    }
    static LaurentPoly monomial(const LVec& mu, const KScalar& c = KScalar(1)) {
        LaurentPoly f;
        if (!c.is_zero()) f.terms_[mu] = c;
        return f;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    KScalar coeff(const LVec& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? KScalar() : it->second;
    }

    void add_term(const LVec& mu, const KScalar& c);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const KScalar& c, const LaurentPoly& a);
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

private:
    Terms terms_;
};

// e(mu)* = e(-mu) with coefficients through K's involution.
LaurentPoly star(const LaurentPoly& f);

// Action of w = t(lambda') v on A: e(mu) -> q(-<v mu, lambda'>) e(v mu).
LaurentPoly weyl_act(const RootSystem& rs, const AffineMap& w, const LaurentPoly& f);
inline LaurentPoly weyl_act(const RootSystem& rs, const WeylElement& w, const LaurentPoly& f) {
    return weyl_act(rs, w.map, f);
}

// e(a) for an affine root: q(cnst) e(grad).
LaurentPoly root_monomial(const RootSystem& rs, const AffineRoot& a);

// Exact quotient f / g; throws not-divisible.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

// Monomial orbit sum m_{J,lambda0} for J-dominant lambda0.
LaurentPoly orbit_sum(const RootSystem& rs, const std::vector<int>& J, const LVec& lam0);

// Weyl denominator and its tau-deformation (reduced simply-laced types only).
LaurentPoly weyl_denominator(const RootSystem& rs);
LaurentPoly f_poly(const RootSystem& rs, const KScalar& tau_sq);

// Maximal exponent under the catalog partial order, with its coefficient.
std::pair<LVec, KScalar> leading_term(const RootSystem& rs, const LaurentPoly& f);

// Fraction of Laurent polynomials; equality via cross-multiplication.
class LaurentFraction {
public:
    LaurentFraction() : num_(), den_(LaurentPoly(KScalar(1))) {}
    LaurentFraction(LaurentPoly n, LaurentPoly d);
    explicit LaurentFraction(const LaurentPoly& n) : num_(n), den_(LaurentPoly(KScalar(1))) {}

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b);
    friend LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b);
    friend LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b);
    friend LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b);
    LaurentFraction operator-() const;
    friend bool operator==(const LaurentFraction& a, const LaurentFraction& b);
    friend bool operator!=(const LaurentFraction& a, const LaurentFraction& b) {
        return !(a == b);
    }

    // Succeeds only when the fraction is a Laurent polynomial.
    LaurentPoly to_poly() const { return exact_div(num_, den_); }

private:
    LaurentPoly num_, den_;
    void normalize();
};

LaurentFraction star(const LaurentFraction& f);
LaurentFraction weyl_act(const RootSystem& rs, const AffineMap& w, const LaurentFraction& f);

} // namespace qmac
