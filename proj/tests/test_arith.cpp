#include "doctest.h"
#include "favor7/arith.hpp"
#include "favor7/modp.hpp"
#include "oracles.hpp"

#include <random>

using namespace favor7;

static IntPoly P(char const* s) { return parse_polynomial(s); }

TEST_CASE("resultant small cases")
{
    CHECK(resultant(P("x-1"), P("x+1")) == 2);
    CHECK(resultant(P("x+1"), P("x-1")) == -2);
    CHECK(resultant(P("x^2+1"), P("x^2+1")) == 0);
    CHECK_THROWS_AS(resultant(IntPoly(), P("x")), arith_error);
    CHECK(resultant(P("3"), P("x^2+x+1")) == 9);
}

TEST_CASE("resultant against root products")
{
    /* Res(p,q) = lc(p)^deg q prod q(alpha) */
    IntPoly p = P("x^2-2"), q = P("x^3-3");
    auto roots = oracle::numeric_roots(p);
    oracle::Complex prod = 1;
    for (auto const& a : roots)
        prod *= a * a * a - 3;
    Int r = resultant(p, q);
    CHECK(abs(prod - oracle::Complex(oracle::Real(r.get_str()))) < oracle::Real("1e-40"));
    CHECK(r == oracle::sylvester_resultant(p, q));
    CHECK(r == 1);
}

TEST_CASE("resultant matches Sylvester determinant and is multiplicative")
{
    std::mt19937_64 rng(7);
    for (int it = 0; it < 60; it++) {
        IntPoly p = oracle::random_poly(rng, 1 + it % 5, 9);
        IntPoly q1 = oracle::random_poly(rng, 1 + it % 3, 9);
        IntPoly q2 = oracle::random_poly(rng, 1 + (it / 3) % 4, 9);
        CHECK(resultant(p, q1) == oracle::sylvester_resultant(p, q1));
        CHECK(resultant(p, q1 * q2) == resultant(p, q1) * resultant(p, q2));
    }
}

TEST_CASE("discriminant")
{
    CHECK(discriminant(P("x^2+5x+3")) == 25 - 12);
    CHECK(discriminant(P("x^7-2")) == Int(-52706752));
    Int d = discriminant(P("4x^7-12x^6-4x^5-4x^4-12x^3-8x^2+1"));
    CHECK(abs(d) == Int(4096) * Int("9936420433"));
    CHECK_THROWS_AS(discriminant(P("x+1")), arith_error);
}

TEST_CASE("discriminant invariant under shifts and sign; matches Sylvester oracle")
{
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; it++) {
        IntPoly p = oracle::random_poly(rng, 7, 20);
        Int d = discriminant(p);
        CHECK(d == oracle::sylvester_discriminant(p));
        CHECK(discriminant(-p) == d);
        for (long c : {-3L, 1L, 5L})
            CHECK(discriminant(p.shift(Int(c))) == d);
    }
}

TEST_CASE("Sturm counts")
{
    CHECK(count_real_roots(P("x^7-2")) == 1);
    CHECK(count_real_roots(P("x^2+1")) == 0);
    CHECK(count_real_roots(P("x-1")) == 1);
    CHECK_THROWS_WITH_AS(count_real_roots(P("x^2-2x+1")), "squarefree required", arith_error);
    CHECK(count_real_roots_between(P("x^2-2"), Rat(0), Rat(2)) == 1);
}

TEST_CASE("Sturm agrees with bisection isolation on random heptics")
{
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 100) {
        IntPoly p = oracle::random_poly(rng, 7, 30);
        if (!is_squarefree(p))
            continue;
        CHECK(count_real_roots(p) == oracle::bisection_real_roots(p));
        done++;
    }
}

TEST_CASE("primality")
{
    CHECK(is_prime(Int("9936420433")));
    CHECK(!is_prime(Int(4096)));
    CHECK(is_prime(Int(10487)));
    CHECK(is_prime(Int(13399)));
    CHECK(is_prime(Int(18839)));
    CHECK_THROWS_AS(is_prime(Int(1)), arith_error);
    /* strong pseudoprime to bases 2..37 */
    CHECK(!is_prime(Int("318665857834031151167461")));
    CHECK(!is_prime(Int("3317044064679887385961981")));
    /* beyond the deterministic range */
    CHECK(is_prime(Int("170141183460469231731687303715884105727")));
    /* trial list */
    std::vector<int> small;
    for (int n = 2; n < 2000; n++) {
        bool pr = true;
        for (int d = 2; d * d <= n; d++)
            if (n % d == 0)
                pr = false;
        CHECK(is_prime(Int(n)) == pr);
    }
}

TEST_CASE("exact square root and polynomial helpers")
{
    RatPoly a = to_rat(P("x^3-3x+7"));
    CHECK(exact_sqrt(a * a) == a);
    CHECK_THROWS_AS(exact_sqrt(a * a + to_rat(P("1"))), arith_error);
    CHECK(primitive_gcd(P("x^2-1"), P("x^2+2x+1")) == P("x+1"));
    CHECK(exact_quotient(P("x^3-1"), P("x-1")) == P("x^2+x+1"));
    CHECK(P("4,-12,-4,-4,-12,-8,0,1") == P("4x^7-12x^6-4x^5-4x^4-12x^3-8x^2+1"));
    CHECK(P("x^2 - 2*x + 1").to_string() == "x^2 - 2x + 1");
}

TEST_CASE("polynomials modulo p")
{
    ModpRing R(7);
    auto f = R.reduce(P("x^3+x+1"));
    CHECK(R.is_irreducible(R.reduce(P("x^3+3")))); /* -3 is not a cube mod 7 */
    ModpRing R2(2);
    CHECK(R2.is_irreducible(R2.reduce(P("x^3+x+1"))));
    CHECK(!R2.is_irreducible(R2.reduce(P("x^2+1"))));
    /* (x-1)^2 (x-2) (x^2+1) mod 7 */
    auto g = R.mul(R.mul(R.reduce(P("x^2-2x+1")), R.reduce(P("x-2"))), R.reduce(P("x^2+1")));
    auto sq = R.squarefree_decomposition(g);
    REQUIRE(sq.size() == 3);
    CHECK(ModpRing::degree(sq[1]) == 3);
    CHECK(ModpRing::degree(sq[2]) == 1);
    CHECK(R.factor_degrees(sq[1]) == std::vector<int>{1, 2});
    (void)f;
}
