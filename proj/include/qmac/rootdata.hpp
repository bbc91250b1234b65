#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qmac/kscalar.hpp"

namespace qmac {

enum class RootType { A1, A2, C1vC1 };

RootType parse_root_type(const std::string& name);
std::string root_type_name(RootType t);

// Lattice vector in the fundamental-weight chart (rank <= 2; unused slot 0).
using LVec = std::array<std::int64_t, 2>;
// Rational vector in the same chart.
using VecQ = std::array<Rat, 2>;

inline LVec lvec(std::int64_t a, std::int64_t b = 0) { return {a, b}; }

// Affine root: gradient (a lattice vector) plus constant multiple of c.
struct AffineRoot {
    LVec grad;
    Rat cnst;
    friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
        return a.grad == b.grad && a.cnst == b.cnst;
    }
    friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
        if (a.grad != b.grad) return a.grad < b.grad;
        return a.cnst < b.cnst;
    }
};

// Affine transformation x -> lin.x + trans of the chart.
struct AffineMap {
    std::array<std::array<std::int64_t, 2>, 2> lin{{{1, 0}, {0, 1}}};
    LVec trans{0, 0};

    static AffineMap identity() { return AffineMap{}; }
    LVec apply(const LVec& x) const {
        return {lin[0][0] * x[0] + lin[0][1] * x[1] + trans[0],
                lin[1][0] * x[0] + lin[1][1] * x[1] + trans[1]};
    }
    LVec apply_linear(const LVec& x) const {
        return {lin[0][0] * x[0] + lin[0][1] * x[1], lin[1][0] * x[0] + lin[1][1] * x[1]};
    }
    std::array<Exponent, 2> apply_linear(const std::array<Exponent, 2>& x) const;
    friend AffineMap operator*(const AffineMap& a, const AffineMap& b);
    AffineMap inverse() const;
    bool is_identity() const { return *this == identity(); }
    friend bool operator==(const AffineMap& a, const AffineMap& b) {
        return a.lin == b.lin && a.trans == b.trans;
    }
    friend bool operator<(const AffineMap& a, const AffineMap& b) {
        if (!(a.lin == b.lin)) return a.lin < b.lin;
        return a.trans < b.trans;
    }
};

// Group element in canonical form: omega part followed by a reduced word.
struct WeylElement {
    AffineMap map;
    int omega = 0;              // index into the catalog omega table
    std::vector<int> word;      // reduced, I-indices; w = u . s_{word[0]} ... s_{word.back()}
    int length() const { return static_cast<int>(word.size()); }
};

// Root-orbit labelling; values live in the exponent group so both formal
// symbols and rational specializations are covered.
struct Labelling {
    std::array<Exponent, kMaxLabels> val{};
};

// Formal evaluation point r_{k'}(lambda): chart coordinates with values in the
// exponent group (unit slot = rational vector part, label slots = k-symbols).
struct SpectralPoint {
    std::array<Exponent, 2> coord{};
};

struct OmegaElement {
    AffineMap map;
    std::array<int, 3> perm{0, 1, 2}; // conjugation action on I
    int inverse = 0;
};

// Duality data and Weyl-group combinatorics for one catalog type.
class RootSystem {
public:
    static const RootSystem& get(RootType t);

    RootType type;
    int rank = 1;
    int norbits = 1;
    std::int64_t D = 2;              // exponent denominator bound
    Rat r{1};                        // constant-step unit: e(rc) = q(r)
    std::vector<AffineRoot> simple;  // indexed by I = {0,...,rank}; 0 is the affine node
    std::vector<LVec> pos_finite;    // R^+ in chart coordinates
    std::vector<LVec> pos_finite_coroot; // alpha^vee for each entry of pos_finite
    std::vector<LVec> pos_linear_indiv;  // positive linear indivisible roots of S
    std::array<std::array<Rat, 2>, 2> gram{};
    std::vector<OmegaElement> omega; // [0] = identity
    std::array<std::array<int, 3>, 3> coxeter{}; // m_{ij}; 0 encodes infinity

    // --- basic linear algebra in the chart ---
    Rat pairing(const LVec& a, const LVec& b) const;
    Rat pairing(const LVec& a, const VecQ& b) const;
    Exponent pairing(const LVec& a, const SpectralPoint& p) const;

    // --- roots ---
    bool in_system(const AffineRoot& a) const;
    bool is_indivisible(const AffineRoot& a) const;
    int is_positive(const AffineRoot& a) const;     // +1 / -1; throws not-a-root
    int orbit_of(const AffineRoot& a) const;
    Rat label_of(const AffineRoot& a, const Labelling& k) const;      // k(a)
    Exponent label_value(const AffineRoot& a, const Labelling& k) const;
    Exponent tau_exp(const AffineRoot& a, const Labelling& k) const;  // (k(a)+k(2a))/2
    Exponent tau_tilde_exp(const AffineRoot& a, const Labelling& k) const;
    AffineRoot simple_root(int i) const { return simple.at(i); }
    Exponent eval_at(const AffineRoot& a, const SpectralPoint& p) const;

    // --- group elements ---
    AffineMap act_map(int i) const { return simple_map_.at(i); }
    AffineRoot act(const AffineMap& w, const AffineRoot& a) const;
    const WeylElement& element(const AffineMap& m) const; // cached canonical form
    const WeylElement& identity_element() const { return element(AffineMap::identity()); }
    WeylElement reduce_word(const std::vector<int>& word, int omega_idx = 0) const;
    std::vector<AffineRoot> inversion_set(const AffineMap& w) const;
    int length(const AffineMap& w) const;
    std::vector<AffineRoot> inversion_set_from_word(const WeylElement& w) const;
    bool bruhat_leq(const WeylElement& v, const WeylElement& w) const;
    std::pair<WeylElement, WeylElement> coset_decompose(const WeylElement& w,
                                                        const std::vector<int>& J) const;
    WeylElement translation(const LVec& lam) const;
    WeylElement omega_element(int idx) const;

    // --- finite Weyl group enumeration ---
    const std::vector<WeylElement>& w0_elements() const; // sorted by (length, word)
    std::vector<WeylElement> wj_elements(const std::vector<int>& J) const;
    std::vector<WeylElement> shortest_coset_reps(const std::vector<int>& J,
                                                 const std::vector<int>& sub) const; // W_J^sub
    WeylElement longest_element(const std::vector<int>& J) const;
    std::vector<int> full_I0() const;

    // --- lattice combinatorics ---
    bool is_dominant(const LVec& lam) const;
    LVec dominant_rep(const LVec& lam) const;
    WeylElement vbar(const LVec& lam) const;                 // shortest w: w.lam_+ = lam
    std::pair<WeylElement, WeylElement> uv_decompose(const LVec& lam) const;
    bool order_leq(const LVec& lam, const LVec& mu) const;
    std::vector<LVec> down_set(const LVec& lam, int cap = 14) const;

    // --- W_J-orbit combinatorics ---
    bool is_j_dominant(const LVec& lam, const std::vector<int>& J) const;
    std::pair<LVec, WeylElement> j_dominant_rep(const LVec& lam, const std::vector<int>& J) const;
    std::vector<int> stabilizer_j(const LVec& lam0, const std::vector<int>& J) const;
    std::vector<LVec> orbit_j(const LVec& lam0, const std::vector<int>& J) const;
    WeylElement vbar_j(const LVec& mu, const std::vector<int>& J) const;

    // --- labellings ---
    Labelling formal_labelling() const;
    Labelling specialized_labelling(const std::array<Rat, kMaxLabels>& assign) const;
    Labelling dual_label(const Labelling& k) const;
    std::array<Exponent, 2> rho_vector(const Labelling& k_dual) const;
    SpectralPoint spectral_point(const LVec& lam, const Labelling& k) const;

private:
    RootSystem() = default;
    void build(RootType t);
    void build_omega();
    WeylElement vbar_j_internal(const LVec& mu, const LVec& lam0,
                                const std::vector<int>& J) const;

    std::vector<AffineMap> simple_map_;
    std::vector<LVec> simple_coroot_;              // alpha_i^vee = a_i' for i in I_0
    std::vector<std::pair<LVec, Rat>> indiv_grad_; // gradient, constant stride
    std::vector<LVec> omega_coset_reps_;
    mutable std::map<AffineMap, WeylElement> word_cache_;
    mutable std::map<LVec, std::vector<LVec>> down_cache_;
    mutable std::vector<WeylElement> w0_cache_;
};

} // namespace qmac
