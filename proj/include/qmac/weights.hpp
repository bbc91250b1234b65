#pragma once

#include "qmac/hecke.hpp"

namespace qmac {

// Formal series in the q-unit, truncated above `order`; coefficients are
// label-only scalars.  Exponents are rationals (the (C1v,C1) step is 1/2).
class TruncSeries {
public:
    static Rat inf() { return Rat(1 << 28); }

    TruncSeries() : order_(inf()) {}
    explicit TruncSeries(Rat order) : order_(order) {}
    static TruncSeries constant(const KScalar& c, Rat order = inf());
    static TruncSeries monomial(Rat d, const KScalar& c, Rat order = inf());

    const std::map<Rat, KScalar>& coeffs() const { return c_; }
    Rat order() const { return order_; }
    void set_order(Rat o) { order_ = o; prune(); }
    KScalar at(Rat d) const;
    Rat valuation() const { return c_.empty() ? inf() : c_.begin()->first; }
    bool zero_to_order(Rat n) const;

    void add_term(Rat d, const KScalar& v);

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const KScalar& s, const TruncSeries& a);
    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& o) { *this = *this + o; return *this; }

    // Multiplicative inverse; needs an invertible lowest coefficient.
    TruncSeries inverse(Rat to_order) const;
    friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b);

    bool equal_to_order(const TruncSeries& other, Rat n) const;

private:
    Rat order_;
    std::map<Rat, KScalar> c_;
    void prune();
};

// Laurent expansion of a scalar in the q-unit grading up to order N.
// Requires the denominator's lowest unit-graded part to be label-only
// invertible (always true in K); errors only on the zero denominator.
TruncSeries series_expand(const KScalar& a, Rat N);

// Truncated weight machinery for one (type, labelling, order).
class WeightContext {
public:
    WeightContext(const RootSystem& rs, const Labelling& k, int N);

    const RootSystem& rs() const { return rs_; }
    const Labelling& labelling() const { return k_; }
    int trunc_order() const { return N_; }

    // Coefficient of e(nu) in Delta (resp. nabla) as a series to order N.
    TruncSeries delta_coeff(const LVec& nu) const;
    TruncSeries nabla_coeff(const LVec& nu) const;

    // The finite linear-root factor as an exact rational function.
    const LaurentFraction& delta0() const { return delta0_; }

    // ct(h Delta), ct(h nabla)
    TruncSeries ct_delta(const LaurentPoly& h) const;
    TruncSeries ct_nabla(const LaurentPoly& h) const;

    // (f,g) = ct(f g* Delta), and the normalized version (f,g)/(1,1).
    TruncSeries inner(const LaurentPoly& f, const LaurentPoly& g) const;
    TruncSeries inner1(const LaurentPoly& f, const LaurentPoly& g) const;

    // Fourier coefficients (over one root line) of the symmetric pair of
    // linear factors; plus-side poles give r b^n (n >= 0), minus-side give
    // s b^{-n-1} (n <= -1), plus an atom C at n = 0.
    struct LineFourier {
        KScalar C;
        std::vector<std::pair<KScalar, KScalar>> plus;  // (r, base)
        std::vector<std::pair<KScalar, KScalar>> minus; // (s, base)
        KScalar phi(std::int64_t n) const;
        KScalar phi_exp(std::int64_t n) const; // phi minus the atom
    };

private:
    struct ConeFactor {
        LVec alpha;
        KScalar A, B, pref;
        mutable std::vector<KScalar> d; // cached e(m alpha) coefficients
        const KScalar& coeff(int m) const;
    };
    KScalar cone_coeff(const std::vector<ConeFactor>& factors, std::size_t idx, const LVec& nu,
                       std::map<std::pair<std::size_t, LVec>, KScalar>& memo) const;
    Rat height(const LVec& nu) const;
    KScalar fourier_linear(const LVec& nu) const; // invariant linear part of nabla

public:
    const LineFourier& line_fourier() const { return line_; }

private:
    const RootSystem& rs_;
    Labelling k_;
    int N_;
    VecQ hvec_{};                                     // strictly dominant functional
    std::vector<ConeFactor> linear_;
    std::map<LVec, std::map<Rat, KScalar>> affine_;    // truncated affine-root product
    LineFourier line_;
    LaurentFraction delta0_;
    mutable std::map<LVec, TruncSeries> delta_memo_, nabla_memo_;
    mutable std::map<std::pair<std::size_t, LVec>, KScalar> linear_memo_;
    mutable std::map<LVec, KScalar> fourier_memo_;
};

// ct of a plain Laurent polynomial (coefficient at e(0)).
inline KScalar ct(const LaurentPoly& f) { return f.coeff({0, 0}); }

// Hermitian symmetry helper: checks (f,g)* = (g,f) coefficient-wise to order n.
bool hermitian_pair(const TruncSeries& fg, const TruncSeries& gf, Rat n);

} // namespace qmac
