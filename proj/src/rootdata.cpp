#include "qmac/rootdata.hpp"

#include <algorithm>
#include <deque>

namespace qmac {

RootType parse_root_type(const std::string& name) {
    if (name == "A1") return RootType::A1;
    if (name == "A2") return RootType::A2;
    if (name == "C1v-C1" || name == "C1vC1") return RootType::C1vC1;
    throw Error("unknown-type", name);
}

std::string root_type_name(RootType t) {
    switch (t) {
        case RootType::A1: return "A1";
        case RootType::A2: return "A2";
        case RootType::C1vC1: return "C1v-C1";
    }
    return "?";
}

std::array<Exponent, 2> AffineMap::apply_linear(const std::array<Exponent, 2>& x) const {
    std::array<Exponent, 2> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i] += Rat(lin[i][j]) * x[j];
    return out;
}

AffineMap operator*(const AffineMap& a, const AffineMap& b) {
    AffineMap r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.lin[i][j] = a.lin[i][0] * b.lin[0][j] + a.lin[i][1] * b.lin[1][j];
    r.trans = a.apply(b.trans);
    return r;
}

AffineMap AffineMap::inverse() const {
    std::int64_t det = lin[0][0] * lin[1][1] - lin[0][1] * lin[1][0];
    if (det != 1 && det != -1) throw Error("internal", "non-unimodular Weyl matrix");
    AffineMap r;
    r.lin[0][0] = lin[1][1] * det;
    r.lin[0][1] = -lin[0][1] * det;
    r.lin[1][0] = -lin[1][0] * det;
    r.lin[1][1] = lin[0][0] * det;
    r.trans = {-(r.lin[0][0] * trans[0] + r.lin[0][1] * trans[1]),
               -(r.lin[1][0] * trans[0] + r.lin[1][1] * trans[1])};
    return r;
}

const RootSystem& RootSystem::get(RootType t) {
    static RootSystem a1, a2, cc;
    static bool init = [] {
        a1.build(RootType::A1);
        a2.build(RootType::A2);
        cc.build(RootType::C1vC1);
        return true;
    }();
    (void)init;
    switch (t) {
        case RootType::A1: return a1;
        case RootType::A2: return a2;
        default: return cc;
    }
}

void RootSystem::build(RootType t) {
    type = t;
    auto mk = [](std::int64_t g0, std::int64_t g1, Rat c) {
        return AffineRoot{lvec(g0, g1), c};
    };
    if (t == RootType::A1) {
        rank = 1;
        norbits = 1;
        D = 2;
        r = Rat(1);
        gram = {{{Rat(1, 2), Rat(0)}, {Rat(0), Rat(0)}}};
        simple = {mk(-2, 0, Rat(1)), mk(2, 0, Rat(0))};
        pos_finite = {lvec(2)};
        pos_finite_coroot = {lvec(2)};
        pos_linear_indiv = {lvec(2)};
        simple_coroot_ = {lvec(2)};
        indiv_grad_ = {{lvec(2), Rat(1)}, {lvec(-2), Rat(1)}};
        coxeter = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}};
        omega_coset_reps_ = {lvec(1)};
    } else if (t == RootType::A2) {
        rank = 2;
        norbits = 1;
        D = 6;
        r = Rat(1);
        gram = {{{Rat(2, 3), Rat(1, 3)}, {Rat(1, 3), Rat(2, 3)}}};
        simple = {mk(-1, -1, Rat(1)), mk(2, -1, Rat(0)), mk(-1, 2, Rat(0))};
        pos_finite = {lvec(2, -1), lvec(-1, 2), lvec(1, 1)};
        pos_finite_coroot = {lvec(2, -1), lvec(-1, 2), lvec(1, 1)};
        pos_linear_indiv = pos_finite;
        simple_coroot_ = {lvec(2, -1), lvec(-1, 2)};
        indiv_grad_.clear();
        for (auto& g : pos_finite) {
            indiv_grad_.push_back({g, Rat(1)});
            indiv_grad_.push_back({lvec(-g[0], -g[1]), Rat(1)});
        }
        coxeter = {{{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}};
        omega_coset_reps_ = {lvec(1, 0), lvec(0, 1)};
    } else {
        rank = 1;
        norbits = 4;
        D = 4;
        r = Rat(1, 2);
        gram = {{{Rat(1), Rat(0)}, {Rat(0), Rat(0)}}};
        simple = {mk(-1, 0, Rat(1, 2)), mk(1, 0, Rat(0))};
        pos_finite = {lvec(2)};
        pos_finite_coroot = {lvec(1)};
        pos_linear_indiv = {lvec(1)};
        simple_coroot_ = {lvec(1)};
        indiv_grad_ = {{lvec(1), Rat(1, 2)}, {lvec(-1), Rat(1, 2)}};
        coxeter = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}};
        omega_coset_reps_ = {};
    }

    // simple reflection maps: s_a(y) = y - a(y) (Da)^vee
    simple_map_.clear();
    for (auto& a : simple) {
        // (Da)^vee = 2 Da / <Da,Da>
        Rat n2 = pairing(a.grad, a.grad);
        Rat scale = Rat(2) / n2;
        VecQ cov{scale * Rat(a.grad[0]), scale * Rat(a.grad[1])};
        AffineMap m;
        for (int j = 0; j < 2; ++j) {
            // image of basis vector e_j: e_j - <grad,e_j> cov
            Rat ge = gram[0][j] * Rat(a.grad[0]) + gram[1][j] * Rat(a.grad[1]);
            for (int i = 0; i < 2; ++i) {
                Rat entry = Rat(i == j ? 1 : 0) - ge * cov[i];
                if (!entry.is_integer()) throw Error("internal", "non-integral reflection");
                m.lin[i][j] = entry.num;
            }
        }
        for (int i = 0; i < 2; ++i) {
            Rat tr = -(a.cnst * cov[i]);
            if (!tr.is_integer()) throw Error("internal", "non-integral reflection shift");
            m.trans[i] = tr.num;
        }
        simple_map_.push_back(m);
    }
    build_omega();
}

void RootSystem::build_omega() {
    omega.clear();
    OmegaElement id;
    id.map = AffineMap::identity();
    omega.push_back(id);
    // enumerate W_0 maps by closure over I_0 generators
    std::vector<AffineMap> w0{AffineMap::identity()};
    std::deque<AffineMap> queue{AffineMap::identity()};
    while (!queue.empty()) {
        AffineMap m = queue.front();
        queue.pop_front();
        for (int i = 1; i <= rank; ++i) {
            AffineMap n = simple_map_[i] * m;
            if (std::find(w0.begin(), w0.end(), n) == w0.end()) {
                w0.push_back(n);
                queue.push_back(n);
            }
        }
    }
    for (auto& rep : omega_coset_reps_) {
        AffineMap tr;
        tr.trans = rep;
        bool found = false;
        for (auto& v : w0) {
            AffineMap u = tr * v;
            if (length(u) == 0 && !u.is_identity()) {
                OmegaElement oe;
                oe.map = u;
                omega.push_back(oe);
                found = true;
                break;
            }
        }
        if (!found) throw Error("internal", "omega generator not found");
    }
    // conjugation permutations and inverses
    for (auto& oe : omega) {
        AffineMap ui = oe.map.inverse();
        for (int i = 0; i <= rank; ++i) {
            int img = -1;
            AffineMap c = oe.map * simple_map_[i] * ui;
            for (int j = 0; j <= rank; ++j)
                if (c == simple_map_[j]) { img = j; break; }
            if (img < 0) throw Error("internal", "omega does not permute I");
            oe.perm[i] = img;
        }
        int inv = -1;
        for (std::size_t j = 0; j < omega.size(); ++j)
            if (omega[j].map == ui) { inv = static_cast<int>(j); break; }
        if (inv < 0) {
            // inverse may not be built yet while looping; resolve afterwards
            inv = 0;
        }
        oe.inverse = inv;
    }
    for (std::size_t i = 0; i < omega.size(); ++i) {
        AffineMap ui = omega[i].map.inverse();
        for (std::size_t j = 0; j < omega.size(); ++j)
            if (omega[j].map == ui) omega[i].inverse = static_cast<int>(j);
    }
}

Rat RootSystem::pairing(const LVec& a, const LVec& b) const {
    Rat s;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += Rat(a[i]) * gram[i][j] * Rat(b[j]);
    return s;
}

Rat RootSystem::pairing(const LVec& a, const VecQ& b) const {
    Rat s;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += Rat(a[i]) * gram[i][j] * b[j];
    return s;
}

Exponent RootSystem::pairing(const LVec& a, const SpectralPoint& p) const {
    Exponent s;
    for (int j = 0; j < 2; ++j) {
        Rat c;
        for (int i = 0; i < 2; ++i) c += Rat(a[i]) * gram[i][j];
        s += c * p.coord[j];
    }
    return s;
}

bool RootSystem::in_system(const AffineRoot& a) const {
    if (type == RootType::C1vC1) {
        if (a.grad == lvec(1) || a.grad == lvec(-1)) return (a.cnst * Rat(2)).is_integer();
        if (a.grad == lvec(2) || a.grad == lvec(-2)) return a.cnst.is_integer();
        return false;
    }
    if (!a.cnst.is_integer()) return false;
    for (auto& g : pos_finite)
        if (a.grad == g || (a.grad[0] == -g[0] && a.grad[1] == -g[1])) return true;
    return false;
}

bool RootSystem::is_indivisible(const AffineRoot& a) const {
    AffineRoot half{lvec(0, 0), a.cnst / Rat(2)};
    if (a.grad[0] % 2 == 0 && a.grad[1] % 2 == 0) {
        half.grad = lvec(a.grad[0] / 2, a.grad[1] / 2);
        return !in_system(half);
    }
    return true;
}

int RootSystem::is_positive(const AffineRoot& a) const {
    if (!in_system(a)) throw Error("not-a-root");
    if (a.cnst > Rat(0)) return 1;
    if (a.cnst < Rat(0)) return -1;
    if (rank == 1) return a.grad[0] > 0 ? 1 : -1;
    for (auto& g : pos_finite) {
        if (a.grad == g) return 1;
        if (a.grad[0] == -g[0] && a.grad[1] == -g[1]) return -1;
    }
    throw Error("not-a-root");
}

int RootSystem::orbit_of(const AffineRoot& a) const {
    if (!in_system(a)) throw Error("not-a-root");
    if (type != RootType::C1vC1) return 0;
    bool shortg = (a.grad == lvec(1) || a.grad == lvec(-1));
    if (shortg) return a.cnst.is_integer() ? 0 : 2;
    // long gradient: constant integer; parity splits O2 / O4
    std::int64_t n = a.cnst.num;
    return (n % 2 == 0) ? 1 : 3;
}

Exponent RootSystem::label_value(const AffineRoot& a, const Labelling& k) const {
    return k.val[orbit_of(a)];
}

Rat RootSystem::label_of(const AffineRoot& a, const Labelling& k) const {
    Exponent v = label_value(a, k);
    for (auto& l : v.label)
        if (!l.is_zero()) throw Error("internal", "label_of on formal labelling");
    return v.unit;
}

Exponent RootSystem::tau_exp(const AffineRoot& a, const Labelling& k) const {
    Exponent s = label_value(a, k);
    AffineRoot twice{lvec(2 * a.grad[0], 2 * a.grad[1]), a.cnst * Rat(2)};
    if (in_system(twice)) s += label_value(twice, k);
    return Rat(1, 2) * s;
}

Exponent RootSystem::tau_tilde_exp(const AffineRoot& a, const Labelling& k) const {
    Exponent s = label_value(a, k);
    AffineRoot twice{lvec(2 * a.grad[0], 2 * a.grad[1]), a.cnst * Rat(2)};
    if (in_system(twice)) s = s - label_value(twice, k);
    return Rat(1, 2) * s;
}

Exponent RootSystem::eval_at(const AffineRoot& a, const SpectralPoint& p) const {
    Exponent e = pairing(a.grad, p);
    e.unit += a.cnst;
    return e;
}

AffineRoot RootSystem::act(const AffineMap& w, const AffineRoot& a) const {
    AffineRoot out;
    out.grad = w.apply_linear(a.grad);
    out.cnst = a.cnst - pairing(out.grad, w.trans);
    return out;
}

std::vector<AffineRoot> RootSystem::inversion_set(const AffineMap& w) const {
    std::vector<AffineRoot> out;
    for (auto& [g, stride] : indiv_grad_) {
        LVec img = w.apply_linear(g);
        Rat x = pairing(img, w.trans);
        bool grad_pos = is_positive(AffineRoot{g, Rat(0)}) > 0;
        bool img_neg = is_positive(AffineRoot{img, Rat(0)}) < 0;
        Rat kappa = grad_pos ? Rat(0) : stride;
        while (kappa < x || (kappa == x && img_neg)) {
            out.push_back(AffineRoot{g, kappa});
            kappa += stride;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int RootSystem::length(const AffineMap& w) const {
    return static_cast<int>(inversion_set(w).size());
}

const WeylElement& RootSystem::element(const AffineMap& m) const {
    auto it = word_cache_.find(m);
    if (it != word_cache_.end()) return it->second;
    WeylElement e;
    e.map = m;
    AffineMap cur = m;
    std::vector<int> letters;
    for (;;) {
        int desc = -1;
        for (int i = 0; i <= rank; ++i) {
            if (is_positive(act(cur, simple[i])) < 0) { desc = i; break; }
        }
        if (desc < 0) break;
        letters.push_back(desc);
        cur = cur * simple_map_[desc];
    }
    int om = -1;
    for (std::size_t j = 0; j < omega.size(); ++j)
        if (omega[j].map == cur) { om = static_cast<int>(j); break; }
    if (om < 0) throw Error("internal", "residue after word stripping not in omega");
    e.omega = om;
    e.word.assign(letters.rbegin(), letters.rend());
    return word_cache_.emplace(m, std::move(e)).first->second;
}

WeylElement RootSystem::reduce_word(const std::vector<int>& word, int omega_idx) const {
    AffineMap m = omega.at(omega_idx).map;
    for (int i : word) m = m * simple_map_.at(i);
    return element(m);
}

std::vector<AffineRoot> RootSystem::inversion_set_from_word(const WeylElement& w) const {
    // b_r = s_{i_p} ... s_{i_{r+1}} (a_{i_r})
    std::vector<AffineRoot> out;
    const auto& word = w.word;
    int p = static_cast<int>(word.size());
    for (int r = 0; r < p; ++r) {
        AffineMap suf = AffineMap::identity();
        for (int j = p - 1; j > r; --j) suf = suf * simple_map_[word[j]];
        out.push_back(act(suf, simple[word[r]]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool RootSystem::bruhat_leq(const WeylElement& v, const WeylElement& w) const {
    if (v.omega != w.omega) return false;
    AffineMap vm = omega[v.omega].map.inverse() * v.map;
    AffineMap wm = omega[w.omega].map.inverse() * w.map;
    int lv = v.length(), lw = w.length();
    while (true) {
        if (lv > lw) return false;
        if (lv == 0) return true;
        int i = -1;
        AffineMap wi = wm.inverse();
        for (int j = 0; j <= rank; ++j)
            if (is_positive(act(wi, simple[j])) < 0) { i = j; break; }
        if (i < 0) return lv == 0;
        AffineMap vi = vm.inverse();
        if (is_positive(act(vi, simple[i])) < 0) {
            vm = simple_map_[i] * vm;
            --lv;
        }
        wm = simple_map_[i] * wm;
        --lw;
    }
}

std::pair<WeylElement, WeylElement> RootSystem::coset_decompose(
    const WeylElement& w, const std::vector<int>& J) const {
    AffineMap cur = w.map;
    AffineMap wp = AffineMap::identity();
    for (;;) {
        int desc = -1;
        for (int j : J)
            if (is_positive(act(cur, simple[j])) < 0) { desc = j; break; }
        if (desc < 0) break;
        cur = cur * simple_map_[desc];
        wp = simple_map_[desc] * wp;
    }
    return {element(cur), element(wp)};
}

WeylElement RootSystem::translation(const LVec& lam) const {
    AffineMap m;
    m.trans = lam;
    return element(m);
}

WeylElement RootSystem::omega_element(int idx) const {
    return element(omega.at(idx).map);
}

const std::vector<WeylElement>& RootSystem::w0_elements() const {
    if (!w0_cache_.empty()) return w0_cache_;
    std::vector<AffineMap> maps{AffineMap::identity()};
    std::deque<AffineMap> queue{AffineMap::identity()};
    while (!queue.empty()) {
        AffineMap m = queue.front();
        queue.pop_front();
        for (int i = 1; i <= rank; ++i) {
            AffineMap n = simple_map_[i] * m;
            if (std::find(maps.begin(), maps.end(), n) == maps.end()) {
                maps.push_back(n);
                queue.push_back(n);
            }
        }
    }
    for (auto& m : maps) w0_cache_.push_back(element(m));
    std::sort(w0_cache_.begin(), w0_cache_.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.word < b.word;
    });
    return w0_cache_;
}

std::vector<WeylElement> RootSystem::wj_elements(const std::vector<int>& J) const {
    std::vector<WeylElement> out;
    for (auto& w : w0_elements()) {
        bool in = true;
        for (int l : w.word)
            if (std::find(J.begin(), J.end(), l) == J.end()) { in = false; break; }
        if (in) out.push_back(w);
    }
    return out;
}

std::vector<WeylElement> RootSystem::shortest_coset_reps(const std::vector<int>& J,
                                                         const std::vector<int>& sub) const {
    std::vector<WeylElement> out;
    for (auto& w : wj_elements(J)) {
        bool shortest = true;
        for (int s : sub)
            if (is_positive(act(w.map, simple[s])) < 0) { shortest = false; break; }
        if (shortest) out.push_back(w);
    }
    return out;
}

WeylElement RootSystem::longest_element(const std::vector<int>& J) const {
    auto elts = wj_elements(J);
    const WeylElement* best = nullptr;
    for (auto& w : elts)
        if (!best || w.length() > best->length()) best = &w;
    return *best;
}

std::vector<int> RootSystem::full_I0() const {
    std::vector<int> J;
    for (int i = 1; i <= rank; ++i) J.push_back(i);
    return J;
}

bool RootSystem::is_dominant(const LVec& lam) const {
    for (int i = 1; i <= rank; ++i)
        if (pairing(lam, simple_coroot_[i - 1]) < Rat(0)) return false;
    return true;
}

LVec RootSystem::dominant_rep(const LVec& lam) const {
    LVec cur = lam;
    for (;;) {
        int neg = -1;
        for (int i = 1; i <= rank; ++i)
            if (pairing(cur, simple_coroot_[i - 1]) < Rat(0)) { neg = i; break; }
        if (neg < 0) return cur;
        cur = simple_map_[neg].apply_linear(cur);
    }
}

WeylElement RootSystem::vbar(const LVec& lam) const {
    LVec plus = dominant_rep(lam);
    for (auto& w : w0_elements())
        if (w.map.apply_linear(plus) == lam) return w;
    throw Error("internal", "vbar not found");
}

std::pair<WeylElement, WeylElement> RootSystem::uv_decompose(const LVec& lam) const {
    return coset_decompose(translation(lam), full_I0());
}

bool RootSystem::order_leq(const LVec& lam, const LVec& mu) const {
    return bruhat_leq(uv_decompose(lam).first, uv_decompose(mu).first);
}

std::vector<LVec> RootSystem::down_set(const LVec& lam, int cap) const {
    auto it = down_cache_.find(lam);
    if (it != down_cache_.end()) return it->second;
    WeylElement u = uv_decompose(lam).first;
    int p = u.length();
    if (p > cap)
        throw Error("down-set-cap", "length " + std::to_string(p) + " exceeds cap " +
                                        std::to_string(cap));
    std::set<LVec> pts;
    const AffineMap base = omega[u.omega].map;
    for (std::uint64_t mask = 0; mask < (1ULL << p); ++mask) {
        AffineMap m = base;
        for (int b = 0; b < p; ++b)
            if (mask & (1ULL << b)) m = m * simple_map_[u.word[b]];
        pts.insert(m.apply({0, 0}));
    }
    std::vector<LVec> out(pts.begin(), pts.end());
    down_cache_[lam] = out;
    return out;
}

bool RootSystem::is_j_dominant(const LVec& lam, const std::vector<int>& J) const {
    for (int j : J)
        if (pairing(lam, simple_coroot_[j - 1]) < Rat(0)) return false;
    return true;
}

std::pair<LVec, WeylElement> RootSystem::j_dominant_rep(const LVec& lam,
                                                        const std::vector<int>& J) const {
    LVec cur = lam;
    for (;;) {
        int neg = -1;
        for (int j : J)
            if (pairing(cur, simple_coroot_[j - 1]) < Rat(0)) { neg = j; break; }
        if (neg < 0) break;
        cur = simple_map_[neg].apply_linear(cur);
    }
    return {cur, vbar_j_internal(lam, cur, J)};
}

WeylElement RootSystem::vbar_j(const LVec& mu, const std::vector<int>& J) const {
    auto [lam0, v] = j_dominant_rep(mu, J);
    return v;
}

std::vector<int> RootSystem::stabilizer_j(const LVec& lam0, const std::vector<int>& J) const {
    std::vector<int> out;
    for (int j : J)
        if (pairing(lam0, simple_coroot_[j - 1]) == Rat(0)) out.push_back(j);
    return out;
}

std::vector<LVec> RootSystem::orbit_j(const LVec& lam0, const std::vector<int>& J) const {
    std::set<LVec> seen{lam0};
    std::deque<LVec> queue{lam0};
    while (!queue.empty()) {
        LVec x = queue.front();
        queue.pop_front();
        for (int j : J) {
            LVec y = simple_map_[j].apply_linear(x);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return std::vector<LVec>(seen.begin(), seen.end());
}

Labelling RootSystem::formal_labelling() const {
    Labelling k;
    for (int o = 0; o < norbits; ++o) k.val[o] = Exponent::label_of(o);
    return k;
}

Labelling RootSystem::specialized_labelling(const std::array<Rat, kMaxLabels>& assign) const {
    Labelling k;
    for (int o = 0; o < norbits; ++o) k.val[o] = Exponent::unit_of(assign[o]);
    return k;
}

Labelling RootSystem::dual_label(const Labelling& k) const {
    if (type != RootType::C1vC1) return k;
    static const int H[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    Labelling kd;
    for (int i = 0; i < 4; ++i) {
        Exponent s;
        for (int j = 0; j < 4; ++j) s += Rat(H[i][j], 2) * k.val[j];
        kd.val[i] = s;
    }
    return kd;
}

std::array<Exponent, 2> RootSystem::rho_vector(const Labelling& k_dual) const {
    std::array<Exponent, 2> rho;
    for (std::size_t i = 0; i < pos_finite.size(); ++i) {
        Exponent kv = label_value(AffineRoot{pos_finite_coroot[i], Rat(0)}, k_dual);
        for (int j = 0; j < 2; ++j) rho[j] += Rat(pos_finite[i][j], 2) * kv;
    }
    return rho;
}

SpectralPoint RootSystem::spectral_point(const LVec& lam, const Labelling& k) const {
    Labelling kd = dual_label(k);
    auto rho = rho_vector(kd);
    auto [up, v] = uv_decompose(lam);
    LVec lam_minus = v.map.apply_linear(lam);
    SpectralPoint pt;
    for (int j = 0; j < 2; ++j) {
        pt.coord[j] = Exponent::unit_of(Rat(lam_minus[j])) - rho[j];
    }
    pt.coord = v.map.inverse().apply_linear(pt.coord);
    return pt;
}

// helper used by j_dominant_rep
WeylElement RootSystem::vbar_j_internal(const LVec& mu, const LVec& lam0,
                                        const std::vector<int>& J) const {
    for (auto& w : wj_elements(J))
        if (w.map.apply_linear(lam0) == mu) return w;
    throw Error("internal", "vbar_j not found");
}

} // namespace qmac
