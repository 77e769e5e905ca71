#include "doctest.h"
#include "favor7/localcft.hpp"

#include <random>

using namespace favor7;

TEST_CASE("principal units modulo U6 and squares")
{
    auto const& G = unit_class_group();
    CHECK(G.unit_dim == 9);
    CHECK(G.exhaustive_log2_order == 9);
    CHECK(G.square_1_plus_pi2);
    CHECK(G.unit_sigma.pow(7) == F2Matrix::identity(9));
    CHECK(G.unit_tau.pow(3) == F2Matrix::identity(9));
    CHECK(G.unit_tau * G.unit_sigma * G.unit_tau.inverse() == G.unit_sigma * G.unit_sigma);
    CHECK(G.unit_sigma != F2Matrix::identity(9));
}

TEST_CASE("class map is a homomorphism and kills squares")
{
    LocalModel M(14);
    std::mt19937_64 rng(4);
    auto principal = [&] { return M.add(M.one(), M.random(rng, 1)); };
    for (int it = 0; it < 200; it++) {
        auto u = principal(), v = principal();
        CHECK(unit_class(M, M.mul(u, v)) == (unit_class(M, u) ^ unit_class(M, v)));
        CHECK(unit_class(M, M.mul(u, u)) == 0);
        /* U6 is trivial */
        auto w = M.add(M.one(), M.random(rng, 6));
        CHECK(unit_class(M, M.mul(u, w)) == unit_class(M, u));
    }
    CHECK_THROWS_AS(unit_class(M, M.teichmuller(2)), localcft_error);
    CHECK(unit_class(M, M.from_int(3)) == unit_class(M, M.from_int(-1)));
}

TEST_CASE("decomposition of the unit classes")
{
    auto const& G = unit_class_group();
    auto const& c = G.unit_corners;
    CHECK(c.C1.dim() == 1);
    CHECK(c.C2.dim() == 2);
    CHECK((std::array<int, 4>{c.n_triv, c.n_D, c.n1, c.n2}) == std::array<int, 4>{0, 0, 1, 2});
    auto const& f = G.corners;
    CHECK((std::array<int, 4>{f.n_triv, f.n_D, f.n1, f.n2}) == std::array<int, 4>{1, 0, 1, 2});
    F2Vec low = (F2Vec(1) << 9) - 1;
    CHECK(c.C1.contains(G.g[1] & low));
    CHECK(c.C2.contains(G.g[2] & low));
    CHECK(c.C2.contains(G.g[3] & low));
    CHECK(G.g[1] != 0);
    CHECK(G.g[2] != G.g[3]);
    CHECK(G.direct_sum);
    CHECK(G.cyclic_dims == std::array<int, 4>{1, 3, 3, 3});
    for (int i = 1; i < 4; i++)
        CHECK(G.cyclic_tau_fixed[i] == 1);
}

TEST_CASE("class group at higher precision agrees")
{
    auto a = compute_unit_class_group(14), b = compute_unit_class_group(35);
    CHECK(a.unit_sigma == b.unit_sigma);
    CHECK(a.unit_tau == b.unit_tau);
    CHECK(a.g == b.g);
    CHECK_THROWS_AS(compute_unit_class_group(5), precision_error);
}

TEST_CASE("Honda character constraints")
{
    auto z = HondaCharacterShape::zero();
    CHECK(honda_character_constraint_check(z));
    auto s = z;
    s.value[3] = lower_left_t2();
    CHECK(honda_character_constraint_check(s));
    F2Matrix t = three_block(), o(3, 3);
    s.value[3] = F2Matrix::blocks(t * t, o, o, o);
    std::string why;
    bool ok = true;
    try {
        ok = honda_character_constraint_check(s, &why);
    } catch (localcft_error const&) {
        ok = false;
    }
    CHECK(!ok);
    /* gamma_6 is in C2 but has nonzero upper-right block */
    auto s2 = z;
    s2.value[2] = gamma_generator(6);
    CHECK(!honda_character_constraint_check(s2, &why));
    CHECK(why.find("g2") != std::string::npos);
    auto s3 = z;
    s3.value[0] = F2Matrix::identity(6) + lower_left_t2(); /* not sigma-fixed */
    CHECK_THROWS_AS(honda_character_constraint_check(s3), localcft_error);
}

TEST_CASE("stricter conductor bounds from the corner groups")
{
    auto b = cond4_bounds();
    CHECK(b == std::map<int, int>{{6, 2}, {14, 4}, {20, 6}, {29, 4}, {35, 6}});
    for (auto const& e : cond4_analysis()) {
        if (e.a == 6) {
            CHECK(!e.x_in_c2);
            CHECK(e.upper_right_nonzero);
            CHECK(e.c2_dim == 1);
        }
        if (e.a == 20 || e.a == 35)
            CHECK(e.x_in_c2);
    }
    /* gamma_6 upper-right block is t^2 + 1 */
    F2Matrix t = three_block();
    CHECK(gamma_generator(6).block(0, 3, 3, 3) == t * t + F2Matrix::identity(3));
}
