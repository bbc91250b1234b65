#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmac/hecke.hpp"

using namespace qmac;

namespace {

LaurentPoly random_poly(const RootSystem& rs, std::mt19937& rng, int terms = 3, int bound = 2) {
    std::uniform_int_distribution<int> c(-bound, bound), coef(-3, 3), lab(0, rs.norbits - 1);
    LaurentPoly f;
    for (int t = 0; t < terms; ++t) {
        LVec mu{c(rng), 0};
        if (rs.rank == 2) mu[1] = c(rng);
        Exponent e;
        e.unit = Rat(coef(rng), 2);
        e.label[lab(rng)] = Rat(coef(rng));
        f.add_term(mu, KScalar(mpq_class(coef(rng))) + q_pow(e));
    }
    return f;
}

LVec random_lvec(const RootSystem& rs, std::mt19937& rng, int bound = 2) {
    std::uniform_int_distribution<int> c(-bound, bound);
    return {c(rng), rs.rank == 2 ? c(rng) : 0};
}

} // namespace

TEST_CASE("Demazure-Lusztig basics and the quadratic relation") {
    std::mt19937 rng(3);
    for (auto t : {RootType::A1, RootType::A2, RootType::C1vC1}) {
        const auto& rs = RootSystem::get(t);
        HeckeContext H(rs, rs.formal_labelling());
        LaurentPoly one(KScalar(1));
        for (int i = 0; i <= rs.rank; ++i) {
            CHECK(H.apply_ti(i, one) == H.tau(i) * one);
            CHECK(H.apply_ti_inv(i, one) == H.tau(i).inverse() * one);
            for (int it = 0; it < 10; ++it) {
                LaurentPoly f = random_poly(rs, rng);
                // (T_i - tau_i)(T_i + tau_i^{-1}) f = 0
                LaurentPoly g = H.apply_ti(i, f) + H.tau(i).inverse() * f;
                CHECK((H.apply_ti(i, g) - H.tau(i) * g).is_zero());
                // inverse round-trip
                CHECK(H.apply_ti(i, H.apply_ti_inv(i, f)) == f);
            }
            // s_i-invariant input
            LaurentPoly sym = random_poly(rs, rng);
            sym = sym + weyl_act(rs, rs.act_map(i), sym);
            CHECK(H.apply_ti(i, sym) == H.tau(i) * sym);
        }
    }
}

TEST_CASE("braid relations and word independence") {
    std::mt19937 rng(5);
    const auto& a2 = RootSystem::get(RootType::A2);
    HeckeContext H(a2, a2.formal_labelling());
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}}) {
        for (int it = 0; it < 4; ++it) {
            LaurentPoly f = random_poly(a2, rng);
            LaurentPoly lhs = H.apply_ti(i, H.apply_ti(j, H.apply_ti(i, f)));
            LaurentPoly rhs = H.apply_ti(j, H.apply_ti(i, H.apply_ti(j, f)));
            CHECK(lhs == rhs);
        }
    }
    // length-additive product rule on random pairs
    std::uniform_int_distribution<int> letter(0, 2);
    for (auto t : {RootType::A1, RootType::A2, RootType::C1vC1}) {
        const auto& rs = RootSystem::get(t);
        HeckeContext Hc(rs, rs.formal_labelling());
        int done = 0;
        for (int it = 0; it < 60 && done < 8; ++it) {
            std::vector<int> wv, ww;
            std::uniform_int_distribution<int> l(0, rs.rank);
            for (int r = 0; r < 3; ++r) wv.push_back(l(rng));
            for (int r = 0; r < 3; ++r) ww.push_back(l(rng));
            WeylElement v = rs.reduce_word(wv), w = rs.reduce_word(ww);
            WeylElement vw = rs.element(v.map * w.map);
            if (vw.length() != v.length() + w.length()) continue;
            ++done;
            LaurentPoly f = random_poly(rs, rng);
            CHECK(Hc.apply_t(vw, f) == Hc.apply_t(v, Hc.apply_t(w, f)));
        }
        CHECK(done == 8);
    }
}

TEST_CASE("omega operators") {
    std::mt19937 rng(7);
    const auto& cc = RootSystem::get(RootType::C1vC1);
    CHECK(cc.omega.size() == 1); // trivial for (C1v,C1)
    for (auto t : {RootType::A1, RootType::A2}) {
        const auto& rs = RootSystem::get(t);
        HeckeContext H(rs, rs.formal_labelling());
        for (std::size_t u = 1; u < rs.omega.size(); ++u) {
            LaurentPoly f = random_poly(rs, rng);
            LaurentPoly g = f;
            // iterate the generator to its order
            int order = 0;
            AffineMap m = AffineMap::identity();
            do {
                m = rs.omega[u].map * m;
                g = H.apply_omega(static_cast<int>(u), g);
                ++order;
            } while (!m.is_identity());
            CHECK(g == f);
            CHECK(order == (rs.type == RootType::A1 ? 2 : 3));
        }
        CHECK(H.apply_omega(1, LaurentPoly(KScalar(1))) == LaurentPoly(KScalar(1)));
    }
}

TEST_CASE("Y operators: identity, eigenvalue on 1, commutativity") {
    std::mt19937 rng(9);
    for (auto t : {RootType::A1, RootType::A2, RootType::C1vC1}) {
        const auto& rs = RootSystem::get(t);
        HeckeContext H(rs, rs.formal_labelling());
        LaurentPoly one(KScalar(1));
        CHECK(H.apply_y({0, 0}, one) == one);
        auto rho = rs.rho_vector(H.k_dual());
        SpectralPoint rp;
        rp.coord = rho;
        for (int it = 0; it < 4; ++it) {
            LVec lp = random_lvec(rs, rng);
            // phi(Y^{lambda'}) = q(<lambda', rho_{k'}>)
            KScalar expect = q_pow(rs.pairing(lp, rp));
            CHECK(H.apply_y(lp, one) == expect * one);
            LVec mp = random_lvec(rs, rng);
            LaurentPoly f = random_poly(rs, rng, 2);
            CHECK(H.apply_y(lp, H.apply_y(mp, f)) == H.apply_y(mp, H.apply_y(lp, f)));
            // independence of the dominant decomposition: shift both parts
            LVec shift{1, rs.rank == 2 ? 1 : 0};
            LVec plus{std::max<std::int64_t>(lp[0], 0) + shift[0],
                      std::max<std::int64_t>(lp[1], 0) + shift[1]};
            LVec minus{plus[0] - lp[0], plus[1] - lp[1]};
            LaurentPoly g = H.apply_t_inv(rs.translation(minus), f);
            g = H.apply_t(rs.translation(plus), g);
            CHECK(g == H.apply_y(lp, f));
        }
    }
}

TEST_CASE("Bernstein-Lusztig-Zelevinsky relation in X") {
    std::mt19937 rng(11);
    for (auto t : {RootType::A1, RootType::A2, RootType::C1vC1}) {
        const auto& rs = RootSystem::get(t);
        HeckeContext H(rs, rs.formal_labelling());
        for (int i = 0; i <= rs.rank; ++i) {
            for (int it = 0; it < 5; ++it) {
                LVec mu = random_lvec(rs, rng);
                LaurentPoly g = random_poly(rs, rng, 2);
                LaurentPoly emu = LaurentPoly::monomial(mu);
                // s_i f for the affine function with gradient mu, constant 0
                AffineRoot muf{mu, Rat(0)};
                AffineRoot smu = rs.act(rs.act_map(i), muf);
                LaurentPoly esmu = root_monomial(rs, smu);
                LaurentPoly lhs = H.apply_ti(i, emu * g) - esmu * H.apply_ti(i, g);
                // b_{a_i}(X) (X^mu - X^{s_i mu}) g, cleared of its denominator
                AffineRoot ai = rs.simple_root(i);
                AffineRoot ai2{lvec(2 * ai.grad[0], 2 * ai.grad[1]), ai.cnst * Rat(2)};
                LaurentPoly den = LaurentPoly(KScalar(1)) - root_monomial(rs, ai2);
                LaurentPoly num = LaurentPoly(H.tau(i) - H.tau(i).inverse()) +
                                  (H.tau_tilde(i) - H.tau_tilde(i).inverse()) *
                                      root_monomial(rs, ai);
                CHECK(lhs * den == num * (emu - esmu) * g);
            }
        }
    }
}

TEST_CASE("Bernstein-Lusztig-Zelevinsky relation in Y") {
    std::mt19937 rng(13);
    for (auto t : {RootType::A1, RootType::A2, RootType::C1vC1}) {
        const auto& rs = RootSystem::get(t);
        HeckeContext H(rs, rs.formal_labelling());
        for (int i = 1; i <= rs.rank; ++i) {
            AffineRoot aip{rs.simple_root(i).grad, Rat(0)};
            if (t == RootType::C1vC1) aip.grad = lvec(1); // a_1' = alpha_1^vee = b
            LVec av = aip.grad;
            KScalar tp = q_pow(rs.tau_exp(aip, H.k_dual()));
            KScalar tpt = q_pow(rs.tau_tilde_exp(aip, H.k_dual()));
            for (int it = 0; it < 4; ++it) {
                LVec lp = random_lvec(rs, rng, 1);
                LVec slp = rs.act_map(i).apply_linear(lp);
                LaurentPoly f = random_poly(rs, rng, 2, 1);
                auto Y = [&](const LVec& e, const LaurentPoly& h) { return H.apply_y(e, h); };
                // lhs0 = (Y^{lambda'} T_i - T_i Y^{s_i lambda'}) f
                LaurentPoly lhs0 = Y(lp, H.apply_ti(i, f)) - H.apply_ti(i, Y(slp, f));
                // multiply by (1 - Y^{-2 a_i'}) from the left
                LVec m2a{-2 * av[0], -2 * av[1]};
                LaurentPoly lhs = lhs0 - Y(m2a, lhs0);
                // rhs = ((tau - tau^{-1}) + (tilde - tilde^{-1}) Y^{-a_i'}) (Y^{lp} - Y^{slp}) f
                LaurentPoly d = Y(lp, f) - Y(slp, f);
                LVec ma{-av[0], -av[1]};
                LaurentPoly rhs = (tp - tp.inverse()) * d + (tpt - tpt.inverse()) * Y(ma, d);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("poincare polynomials") {
    const auto& a1 = RootSystem::get(RootType::A1);
    HeckeContext H1(a1, a1.formal_labelling());
    CHECK(poincare(a1.wj_elements({}), H1.tau_sq_label({1})) == KScalar(1));
    KScalar t2 = H1.tau(1) * H1.tau(1);
    CHECK(poincare(a1.w0_elements(), H1.tau_sq_label({1})) == KScalar(1) + t2);

    const auto& a2 = RootSystem::get(RootType::A2);
    HeckeContext H2(a2, a2.formal_labelling());
    KScalar s2 = H2.tau(1) * H2.tau(1);
    KScalar expect = KScalar(1) + KScalar(2) * s2 + KScalar(2) * s2 * s2 + s2 * s2 * s2;
    CHECK(poincare(a2.w0_elements(), H2.tau_sq_label({1, 2})) == expect);

    // W(tau) = W^J(tau) W_J(tau)
    for (auto t : {RootType::A2}) {
        const auto& rs = RootSystem::get(t);
        HeckeContext H(rs, rs.formal_labelling());
        for (auto J : std::vector<std::vector<int>>{{1}, {2}}) {
            MultLabel lab = H.tau_label(rs.full_I0());
            KScalar whole = poincare(rs.w0_elements(), lab);
            KScalar sub = poincare(rs.wj_elements(J), lab);
            KScalar reps = poincare(rs.shortest_coset_reps(rs.full_I0(), J), lab);
            CHECK(whole == reps * sub);
        }
    }
}

TEST_CASE("epsilon characters") {
    const auto& a2 = RootSystem::get(RootType::A2);
    HeckeContext H(a2, a2.formal_labelling());
    // odd Coxeter exponent forces equal signs on full I0
    EpsilonChar bad;
    bad.sign[1] = 1;
    bad.sign[2] = -1;
    CHECK_THROWS_AS(validate_epsilon(a2, a2.full_I0(), bad), Error);
    validate_epsilon(a2, {2}, EpsilonChar::sign_char({2}));
    // q-deformed character satisfies the Hecke quadratic relation
    for (int e : {1, -1}) {
        EpsilonChar eps;
        eps.sign[1] = e;
        KScalar te = H.tau_eps(1, eps);
        CHECK((te - H.tau(1)) * (te + H.tau(1).inverse()) == KScalar());
    }
}

TEST_CASE("symmetrisers") {
    std::mt19937 rng(17);
    for (auto t : {RootType::A1, RootType::A2, RootType::C1vC1}) {
        const auto& rs = RootSystem::get(t);
        HeckeContext H(rs, rs.formal_labelling());
        std::vector<std::vector<int>> Js{{}, rs.full_I0()};
        if (rs.rank == 2) Js.push_back({2});
        for (auto& J : Js) {
            std::vector<EpsilonChar> chars{EpsilonChar::trivial()};
            if (!J.empty()) chars.push_back(EpsilonChar::sign_char(J));
            for (auto& eps : chars) {
                LaurentPoly f = random_poly(rs, rng, 2);
                LaurentPoly Uf = H.symmetrise(J, eps, f);
                if (J.empty()) CHECK(Uf == f);
                // T_j U f = tau_j^eps U f, and U kills (T_j - tau_j^eps)
                for (int j : J) {
                    CHECK(H.apply_ti(j, Uf) == H.tau_eps(j, eps) * Uf);
                    LaurentPoly g = H.apply_ti(j, f) - H.tau_eps(j, eps) * f;
                    CHECK(H.symmetrise(J, eps, g).is_zero());
                }
                // U^2 = (W_J(tau_eps^2)/tau_eps_{w_J}) U
                KScalar c = poincare(rs.wj_elements(J), H.tau_eps_sq_label(J, eps)) /
                            H.tau_eps_of(rs.longest_element(J), eps);
                CHECK(H.symmetrise(J, eps, Uf) == c * Uf);
                // decomposition through a sub-symmetriser
                if (J.size() == 2) {
                    std::vector<int> Jp{2};
                    LaurentPoly inner = H.symmetrise(Jp, eps, f);
                    LaurentPoly sum;
                    for (auto& v : rs.shortest_coset_reps(J, Jp))
                        sum += H.tau_eps_of(v, eps) * H.apply_t(v, inner);
                    WeylElement wj = rs.longest_element(J);
                    WeylElement wjp = rs.longest_element(Jp);
                    WeylElement quo = rs.element(wj.map * wjp.map.inverse());
                    CHECK(H.tau_eps_of(quo, eps).inverse() * sum == Uf);
                }
            }
            // symmetric input picks up the Poincare factor
            if (!J.empty()) {
                LaurentPoly sym(KScalar(1));
                KScalar c = poincare(rs.wj_elements(J), H.tau_sq_label(J)) /
                            H.tau_of(rs.longest_element(J));
                CHECK(H.symmetrise(J, EpsilonChar::trivial(), sym) == c * sym);
                // sign character on a fixed vector vanishes
                CHECK(H.symmetrise(J, EpsilonChar::sign_char(J), sym).is_zero());
            }
        }
    }
}
