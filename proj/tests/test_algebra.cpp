#include "doctest.h"
#include "favor7/algebra.hpp"

#include <random>
#include <set>

using namespace favor7;

static F2Matrix T() { return three_block(); }
static F2Matrix T2() { return three_block() * three_block(); }
static F2Matrix I3() { return F2Matrix::identity(3); }
static F2Matrix Z3() { return F2Matrix(3, 3); }
static F2Matrix B(F2Matrix const& a, F2Matrix const& b, F2Matrix const& c, F2Matrix const& d)
{
    return F2Matrix::blocks(a, b, c, d);
}
static F2Space span36(std::vector<F2Matrix> const& ms)
{
    F2Space s(36);
    for (auto const& m : ms)
        s.insert(m.flatten());
    return s;
}
static F2Space span9(std::vector<F2Matrix> const& ms)
{
    F2Space s(9);
    for (auto const& m : ms)
        s.insert(m.flatten());
    return s;
}

static Perm random_perm7(std::mt19937_64& rng)
{
    std::vector<int> v{0, 1, 2, 3, 4, 5, 6};
    std::shuffle(v.begin(), v.end(), rng);
    return Perm(v);
}

TEST_CASE("the S_7 representation on the normalized basis")
{
    CHECK(iota(Perm(7)) == F2Matrix::identity(6));
    CHECK(iota(seven_cycle()) == sigma6());
    CHECK(iota(transposition12()) == transvection6());
    CHECK(iota(Perm::parse_cycles(7, "(124)(365)")) == tau6());
    CHECK(seven_block(1) == F2Matrix({{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}));
    CHECK(seven_block(2) == F2Matrix({{1, 0, 1}, {1, 1, 1}, {0, 1, 1}}));
    std::mt19937_64 rng(8);
    for (int it = 0; it < 500; it++) {
        Perm a = random_perm7(rng), b = random_perm7(rng);
        CHECK(iota(a * b) == iota(a) * iota(b));
    }
    /* transpositions map to transvections */
    for (int i = 0; i < 7; i++)
        for (int j = i + 1; j < 7; j++) {
            Perm t = Perm::from_cycles(7, {{i + 1, j + 1}});
            CHECK((iota(t) + F2Matrix::identity(6)).rank() == 1);
        }
}

TEST_CASE("the image of S_7 has order 5040")
{
    PermGroup G(63, iota_on_vectors());
    CHECK(G.order() == 5040);
    std::set<size_t> sizes;
    for (int v = 0; v < 63; v++)
        sizes.insert(G.orbit(v).size());
    CHECK(sizes == std::set<size_t>{7, 21, 35});
}

TEST_CASE("invariant symplectic form")
{
    auto Bf = invariant_symplectic_form({sigma6(), transvection6()});
    CHECK(Bf.rank() == 6);
    CHECK(Bf == Bf.transpose());
    for (int i = 0; i < 6; i++)
        CHECK(!Bf.get(i, i));
    for (auto const& g : {sigma6(), tau6(), transvection6()})
        CHECK(g.transpose() * Bf * g == Bf);
    /* r - 1 has image the line through u, which pairs to v */
    F2Matrix d = transvection6() + F2Matrix::identity(6);
    CHECK(d.rank() == 1);
    CHECK_THROWS_WITH_AS(invariant_symplectic_form({F2Matrix::identity(2)}), "representation is reducible", f2_error);
    /* irreducible but without an invariant form: the companion matrix of x^3+x+1 */
    CHECK_THROWS_WITH_AS(invariant_symplectic_form({seven_block(1)}), "no invariant alternating form", f2_error);
}

TEST_CASE("Gamma_a dimensions and sums")
{
    int expect[] = {6, 14, 20, 29, 35};
    int as[] = {6, 14, 20, 29, 35};
    for (int k = 0; k < 5; k++)
        CHECK(gamma_module(as[k]).dim() == expect[k]);
    CHECK(gamma_module(0).dim() == 0);
    auto g6 = gamma_module(6), g14 = gamma_module(14), g29 = gamma_module(29);
    CHECK(g6.intersect(g14).dim() == 0);
    CHECK(g6.sum(g14) == gamma_module(20));
    CHECK(g6.intersect(g29).dim() == 0);
    CHECK(g6.sum(g29) == gamma_module(35));
    CHECK(g29.contains(g14));
}

TEST_CASE("corner groups of Gamma_a")
{
    auto s = delta_sigma36(), t = delta_tau36();
    auto c6 = corner_spaces(gamma_module(6), s, t);
    CHECK(c6.C2 == span36({gamma_generator(6)}));
    CHECK(c6.C1 == span36({B(T2(), T(), T() + I3(), T())}));
    CHECK((std::array<int, 4>{c6.n_triv, c6.n_D, c6.n1, c6.n2}) == std::array<int, 4>{0, 0, 1, 1});

    auto g14p = B(T(), Z3(), Z3(), T2());
    auto gb14 = B(Z3(), Z3(), T() + I3(), Z3()), gb14p = B(T2(), Z3(), Z3(), T());
    auto c14 = corner_spaces(gamma_module(14), s, t);
    CHECK(c14.C2 == span36({gamma_generator(14), g14p}));
    CHECK(c14.C1 == span36({gb14, gb14p}));
    CHECK((std::array<int, 4>{c14.n_triv, c14.n_D, c14.n1, c14.n2}) == std::array<int, 4>{0, 1, 2, 2});

    auto g29p = B(T(), Z3(), T2(), Z3());
    auto gb29 = B(Z3(), T(), I3(), Z3()), gb29p = B(T2(), T(), Z3(), Z3());
    auto c29 = corner_spaces(gamma_module(29), s, t);
    CHECK(c29.C2 == span36({gamma_generator(29), g29p, gamma_generator(14), g14p}));
    CHECK(c29.C1 == span36({gb29, gb29p, gb14, gb14p}));
    CHECK((std::array<int, 4>{c29.n_triv, c29.n_D, c29.n1, c29.n2}) == std::array<int, 4>{1, 2, 4, 4});

    /* corners of sums are sums of corners */
    auto c20 = corner_spaces(gamma_module(20), s, t);
    CHECK(c20.C2 == c6.C2.sum(c14.C2));
    CHECK(c20.C1 == c6.C1.sum(c14.C1));
    auto c35 = corner_spaces(gamma_module(35), s, t);
    CHECK(c35.C2 == c6.C2.sum(c29.C2));
}

TEST_CASE("corner decomposition accounts for the dimension of random modules")
{
    auto s = delta_sigma36(), t = delta_tau36();
    std::mt19937_64 rng(21);
    for (int it = 0; it < 60; it++) {
        std::vector<F2Vec> g{rng() & ((1ull << 36) - 1)};
        if (it % 2)
            g.push_back(rng() & ((1ull << 36) - 1));
        auto M = generate_subspace(36, g, {s, t});
        CHECK_NOTHROW(corner_spaces(M, s, t));
    }
    auto zero = corner_spaces(F2Space(36), s, t);
    CHECK(zero.C1.dim() == 0);
    CHECK(zero.C2.dim() == 0);
    CHECK(zero.n_triv + zero.n_D == 0);
    /* wrong relations are rejected */
    CHECK_THROWS_AS(corner_spaces(F2Space::span(36, {(1ull << 36) - 1}), F2Matrix::identity(36), s), f2_error);
}

TEST_CASE("Hom(E_i, E_j) structure")
{
    struct Row {
        int i, j;
        std::array<int, 4> mult;
        std::vector<F2Matrix> c1, c2;
    };
    std::vector<Row> rows = {
        {1, 1, {1, 1, 1, 1}, {T2()}, {T()}},
        {1, 2, {0, 0, 2, 1}, {I3(), T()}, {T2()}},
        {2, 1, {0, 0, 1, 2}, {T()}, {I3(), T2()}},
        {2, 2, {1, 1, 1, 1}, {T()}, {T2()}},
    };
    for (auto const& r : rows) {
        auto h = hom_module(r.i, r.j);
        auto c = corner_spaces(h.space, h.sigma, h.tau);
        CHECK(c.C1 == span9(r.c1));
        CHECK(c.C2 == span9(r.c2));
        CHECK((std::array<int, 4>{c.n_triv, c.n_D, c.n1, c.n2}) == r.mult);
    }
}

/* ------------------------------------------------------------------ */
#include "favor7/parabolic.hpp"

TEST_CASE("parabolic generators have the expected shape")
{
    auto G = make_parabolic(6);
    CHECK(G.gamma.dim() == 6);
    for (auto const& g : G.gens) {
        CHECK(g.rows() == 12);
        CHECK(g.block(6, 0, 6, 6).is_zero());
    }
    /* the radical is abelian: c(m) c(n) = c(m + n) */
    auto m = gamma_generator(6), n = gamma_generator(14);
    CHECK(radical_element(m) * radical_element(n) == radical_element(m + n));
    auto x = iota(seven_cycle());
    CHECK(levi_element(x) * radical_element(m) * levi_element(x.inverse()) == radical_element(x * m * x.inverse()));
}

TEST_CASE("very good involutions: one class for a = 0, 6, 14")
{
    for (int a : {0, 6, 14}) {
        auto rep = very_good_involutions(a);
        CAPTURE(a);
        CHECK(rep.d_r_rank == 2);
        CHECK(rep.d_r_good);
        CHECK(rep.classes == 1);
        CHECK(rep.outside_class == 0);
        CHECK(rep.unique());
        /* the sampled variant agrees */
        auto spot = very_good_spot_check(a, 50, 5);
        CHECK(spot.outside_class == 0);
    }
}

TEST_CASE("very good involutions: randomized check for larger a")
{
    for (int a : {20, 29, 35}) {
        auto rep = very_good_spot_check(a, 400, 99 + a);
        CAPTURE(a);
        CHECK(rep.d_r_rank == 2);
        CHECK(rep.d_r_good);
        CHECK(rep.candidates == 400);
        CHECK(rep.outside_class == 0);
    }
}

TEST_CASE("42-point actions")
{
    for (int a : {6, 14, 20}) {
        auto gens = coset_action_42(a);
        PermGroup G(42, gens);
        CAPTURE(a);
        CHECK(G.order() == Int(5040) << (unsigned)a);
        CHECK(G.is_transitive());
        CHECK(gens[1].fixed_points() == 22);
        auto ar = abelianization_order_and_radical(G);
        CHECK(ar.abelianization == 2);
        REQUIRE(ar.radical.has_value());
        CHECK(*ar.radical == Int(1) << (unsigned)a);
        /* normal closure of the image of d(r) is everything */
        CHECK(normal_closure(G, {gens[1]}).order() == G.order());
    }
}
