#include "qmac/kscalar.hpp"

namespace qmac {

std::map<Rat, KPoly> KPoly::unit_graded() const {
    std::map<Rat, KPoly> out;
    for (auto& [e, c] : terms_) {
        Exponent base = e;
        base.unit = Rat(0);
        out[e.unit].add_term(base, c);
    }
    return out;
}

KScalar::KScalar(KPoly n, KPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw Error("division-by-zero", "zero denominator");
    normalize();
}

void KScalar::normalize() {
    if (num_.is_zero()) {
        den_ = KPoly(mpq_class(1));
        return;
    }
    const Exponent shift = -den_.lead_exponent();
    mpq_class scale = 1 / den_.lead_coeff();
    num_ = num_.shifted(shift).scaled(scale);
    den_ = den_.shifted(shift).scaled(scale);
}

KScalar operator+(const KScalar& a, const KScalar& b) {
    if (a.den_ == b.den_) return KScalar(a.num_ + b.num_, a.den_);
    return KScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

KScalar operator-(const KScalar& a, const KScalar& b) {
    if (a.den_ == b.den_) return KScalar(a.num_ - b.num_, a.den_);
    return KScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

KScalar operator*(const KScalar& a, const KScalar& b) {
    return KScalar(a.num_ * b.num_, a.den_ * b.den_);
}

KScalar operator/(const KScalar& a, const KScalar& b) {
    if (b.is_zero()) throw Error("division-by-zero");
    return KScalar(a.num_ * b.den_, a.den_ * b.num_);
}

KScalar KScalar::operator-() const {
    KScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

KScalar KScalar::inverse() const {
    if (is_zero()) throw Error("division-by-zero", "inverse of zero");
    return KScalar(den_, num_);
}

KScalar q_pow(const Exponent& x) {
    return KScalar(KPoly::monomial(x));
}

KScalar q_pow_checked(const Exponent& x, std::int64_t denominator_bound) {
    x.check_denominators(denominator_bound);
    return q_pow(x);
}

Exponent specialize(const Exponent& x, const std::array<Rat, kMaxLabels>& assign) {
    Exponent r;
    r.unit = x.unit;
    for (int i = 0; i < kMaxLabels; ++i) r.unit += x.label[i] * assign[i];
    return r;
}

static KPoly specialize(const KPoly& p, const std::array<Rat, kMaxLabels>& assign,
                        std::int64_t bound) {
    KPoly r;
    for (auto& [e, c] : p.terms()) {
        Exponent se = specialize(e, assign);
        se.check_denominators(bound);
        r.add_term(se, c);
    }
    return r;
}

KScalar specialize(const KScalar& a, const std::array<Rat, kMaxLabels>& assign,
                   std::int64_t denominator_bound) {
    KPoly d = specialize(a.den(), assign, denominator_bound);
    if (d.is_zero())
        throw Error("division-by-zero", "specialization annihilates denominator");
    return KScalar(specialize(a.num(), assign, denominator_bound), d);
}

} // namespace qmac
