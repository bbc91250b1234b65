#pragma once

#include <array>
#include <map>
#include <vector>
#include <gmpxx.h>

#include "qmac/rat.hpp"
#include "qmac/error.hpp"

namespace qmac {

constexpr int kMaxLabels = 4;

// Element of the exponent group: a rational multiple of the real unit plus
// rational multiples of the formal labels k(o), one slot per root orbit.
// q(x) for such an x is a monomial of the coefficient field K.
struct Exponent {
    Rat unit;
    std::array<Rat, kMaxLabels> label{};

    Exponent() = default;
    static Exponent unit_of(Rat u) { Exponent e; e.unit = u; return e; }
    static Exponent label_of(int orbit, Rat c = Rat(1)) {
        Exponent e;
        e.label.at(orbit) = c;
        return e;
    }

    bool is_zero() const {
        if (!unit.is_zero()) return false;
        for (auto& l : label) if (!l.is_zero()) return false;
        return true;
    }

    friend Exponent operator+(const Exponent& a, const Exponent& b) {
        Exponent r;
        r.unit = a.unit + b.unit;
        for (int i = 0; i < kMaxLabels; ++i) r.label[i] = a.label[i] + b.label[i];
        return r;
    }
    friend Exponent operator-(const Exponent& a, const Exponent& b) {
        Exponent r;
        r.unit = a.unit - b.unit;
        for (int i = 0; i < kMaxLabels; ++i) r.label[i] = a.label[i] - b.label[i];
        return r;
    }
    Exponent operator-() const {
        Exponent r;
        r.unit = -unit;
        for (int i = 0; i < kMaxLabels; ++i) r.label[i] = -label[i];
        return r;
    }
    friend Exponent operator*(const Rat& c, const Exponent& a) {
        Exponent r;
        r.unit = c * a.unit;
        for (int i = 0; i < kMaxLabels; ++i) r.label[i] = c * a.label[i];
        return r;
    }
    Exponent& operator+=(const Exponent& o) { *this = *this + o; return *this; }

    friend bool operator==(const Exponent& a, const Exponent& b) {
        return a.unit == b.unit && a.label == b.label;
    }
    friend bool operator<(const Exponent& a, const Exponent& b) {
        if (a.unit != b.unit) return a.unit < b.unit;
        for (int i = 0; i < kMaxLabels; ++i)
            if (a.label[i] != b.label[i]) return a.label[i] < b.label[i];
        return false;
    }

    // Denominator-bound check for the catalog constant D.
    void check_denominators(std::int64_t bound) const {
        auto chk = [&](const Rat& r) {
            if (bound % r.den != 0)
                throw Error("denominator-overflow",
                            "exponent denominator " + std::to_string(r.den) +
                                " exceeds bound " + std::to_string(bound));
        };
        chk(unit);
        for (auto& l : label) chk(l);
    }
};

// Group algebra of the exponent group over Q; realizes the ring of formal
// parameters extended by the q-unit.
class KPoly {
public:
    using Terms = std::map<Exponent, mpq_class>;

    KPoly() = default;
    explicit KPoly(const mpq_class& c) {
        if (c != 0) terms_[Exponent{}] = c;
    }
    static KPoly monomial(const Exponent& e, const mpq_class& c = 1) {
        KPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponent& e, const mpq_class& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend KPoly operator+(const KPoly& a, const KPoly& b) {
        KPoly r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend KPoly operator-(const KPoly& a, const KPoly& b) {
        KPoly r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend KPoly operator*(const KPoly& a, const KPoly& b) {
        KPoly r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    KPoly operator-() const {
        KPoly r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend bool operator==(const KPoly& a, const KPoly& b) { return a.terms_ == b.terms_; }

    // q(x) -> q(-x) on every monomial.
    KPoly star() const {
        KPoly r;
        for (auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    // Largest exponent in the (unit, labels)-lexicographic order.
    const Exponent& lead_exponent() const {
        if (terms_.empty()) throw Error("internal", "lead of zero polynomial");
        return terms_.rbegin()->first;
    }
    const mpq_class& lead_coeff() const {
        if (terms_.empty()) throw Error("internal", "lead of zero polynomial");
        return terms_.rbegin()->second;
    }

    KPoly shifted(const Exponent& e) const {
        KPoly r;
        for (auto& [f, c] : terms_) r.terms_.emplace(f + e, c);
        return r;
    }
    KPoly scaled(const mpq_class& c) const {
        KPoly r;
        if (c == 0) return r;
        for (auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
        return r;
    }

    // Splits off the unit component: returns map unit-exponent -> label-only part.
    std::map<Rat, KPoly> unit_graded() const;

private:
    Terms terms_;
};

// Element of the field K: fraction of two KPoly, den != 0.  Normalized so the
// denominator's leading term is the monomial 1 with coefficient 1; equality is
// decided by cross-multiplication.
class KScalar {
public:
    KScalar() : num_(), den_(KPoly(mpq_class(1))) {}
    KScalar(std::int64_t n) : num_(KPoly(mpq_class(n))), den_(KPoly(mpq_class(1))) {}
    explicit KScalar(const mpq_class& c) : num_(KPoly(c)), den_(KPoly(mpq_class(1))) {}
    explicit KScalar(KPoly n) : num_(std::move(n)), den_(KPoly(mpq_class(1))) {}
    KScalar(KPoly n, KPoly d);

    const KPoly& num() const { return num_; }
    const KPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return *this == KScalar(1); }
    bool is_polynomial() const { return den_ == KPoly(mpq_class(1)); }

    friend KScalar operator+(const KScalar& a, const KScalar& b);
    friend KScalar operator-(const KScalar& a, const KScalar& b);
    friend KScalar operator*(const KScalar& a, const KScalar& b);
    friend KScalar operator/(const KScalar& a, const KScalar& b);
    KScalar operator-() const;
    KScalar& operator+=(const KScalar& o) { *this = *this + o; return *this; }
    KScalar& operator-=(const KScalar& o) { *this = *this - o; return *this; }
    KScalar& operator*=(const KScalar& o) { *this = *this * o; return *this; }
    KScalar& operator/=(const KScalar& o) { *this = *this / o; return *this; }

    friend bool operator==(const KScalar& a, const KScalar& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const KScalar& a, const KScalar& b) { return !(a == b); }

    KScalar inverse() const;
    KScalar star() const { return KScalar(num_.star(), den_.star()); }

private:
    KPoly num_, den_;
    void normalize();
};

// The group homomorphism q: exponent group -> K^x.
KScalar q_pow(const Exponent& x);
// Same, with the catalog denominator-bound check.
KScalar q_pow_checked(const Exponent& x, std::int64_t denominator_bound);

// Substitutes label o -> assign[o] * unit in every exponent.
Exponent specialize(const Exponent& x, const std::array<Rat, kMaxLabels>& assign);
KScalar specialize(const KScalar& a, const std::array<Rat, kMaxLabels>& assign,
                   std::int64_t denominator_bound);

} // namespace qmac
