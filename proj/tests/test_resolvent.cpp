#include "doctest.h"
#include "favor7/resolvent.hpp"
#include "oracles.hpp"
#include "table_rows.hpp"

using namespace favor7;
using oracle::Complex;
using oracle::Real;

static IntPoly P(char const* s) { return parse_polynomial(s); }

/* numeric prod (x - b_i - b_j), b = a^2 + c a, compared with minpoly / lc */
static void check_against_roots(IntPoly const& f, PairResolvent const& r)
{
    auto roots = oracle::numeric_roots(f);
    if (r.transform)
        for (auto& a : roots)
            a = a * a + Complex(Real(r.transform)) * a;
    std::vector<Complex> prod{Complex(1)};
    for (size_t i = 0; i < roots.size(); i++)
        for (size_t j = i + 1; j < roots.size(); j++) {
            Complex s = roots[i] + roots[j];
            std::vector<Complex> nx(prod.size() + 1, Complex(0));
            for (size_t k = 0; k < prod.size(); k++) {
                nx[k + 1] += prod[k];
                nx[k] -= s * prod[k];
            }
            prod = nx;
        }
    REQUIRE(r.minpoly.degree() == 21);
    Real lc(r.minpoly.lc().get_str());
    Real scale = 1;
    for (int k = 0; k <= 21; k++)
        scale = std::max(scale, Real(Int(abs(r.minpoly.c[k])).get_str()) / lc);
    for (int k = 0; k <= 21; k++) {
        Real want(r.minpoly.c[k].get_str());
        Real err = abs(prod[k] - Complex(want / lc));
        CHECK(err / scale < Real("1e-30"));
    }
}

TEST_CASE("pair resolvent of x^7 - 2")
{
    IntPoly f = P("x^7-2");
    auto r = pair_resolvent_polynomial(f);
    CHECK(r.transform == 0);
    CHECK(r.minpoly.degree() == 21);
    CHECK(is_squarefree(r.minpoly));
    check_against_roots(f, r);
}

TEST_CASE("pair resolvent against numeric roots")
{
    /* (x-1)(x-2)...(x-7) + 3 */
    IntPoly g = P("x^7-28x^6+322x^5-1960x^4+6769x^3-13132x^2+13068x-5037");
    check_against_roots(g, pair_resolvent_polynomial(g));
    for (auto const& row : table::rows) {
        IntPoly f = P(row.poly);
        auto r = pair_resolvent_polynomial(f);
        check_against_roots(f, r);
    }
}

TEST_CASE("colliding pair sums fall back to a Tschirnhaus transform")
{
    IntPoly f = P("x^7-3x^5+x^3-5x");
    CHECK_THROWS_WITH_AS(pair_sum_polynomial(f), doctest::Contains("degenerate pair sums"), resolvent_error);
    auto r = pair_resolvent_polynomial(f);
    CHECK(r.transform > 0);
    CHECK(is_squarefree(r.minpoly));
    check_against_roots(f, r);
    CHECK_THROWS_AS(pair_sum_polynomial(P("x^7-x^6")), resolvent_error);
}

TEST_CASE("tschirnhaus transform")
{
    /* roots 1, 2 -> 1 + c, 4 + 2c */
    IntPoly t = tschirnhaus(P("x^2-3x+2"), 1);
    CHECK(t == P("x^2-8x+12"));
}

TEST_CASE("real places of the resolvent field, two ways")
{
    for (int r1 : {1, 3, 5, 7})
        CHECK(resolvent_r1_formula(r1) == r1 * (r1 - 1) / 2 + (7 - r1) / 2);
    CHECK(resolvent_r1_formula(1) == 3);
    CHECK(resolvent_r1_formula(3) == 5);
    for (auto const& row : table::rows) {
        IntPoly f = P(row.poly);
        auto r = pair_resolvent_polynomial(f);
        int r1 = count_real_roots(f);
        CHECK(count_real_roots(r.minpoly) == resolvent_r1_formula(r1));
    }
}

TEST_CASE("two-adic certificate")
{
    for (auto const& row : table::rows) {
        auto K = pair_resolvent_polynomial(P(row.poly));
        auto c = two_adic_certificate(P(row.poly), K.minpoly);
        CHECK_MESSAGE(c.ok, row.poly, " ", c.report, " ", c.polygon);
        CHECK(c.e == 7);
        CHECK(c.f == 3);
    }
    auto bad = two_adic_certificate(P("x^7+x+1"), pair_resolvent_polynomial(P("x^7+x+1")).minpoly);
    CHECK(!bad.ok);
    CHECK(!bad.polygon.empty());
    auto other = two_adic_certificate(P("x^7-2"), pair_resolvent_polynomial(P("x^7-2")).minpoly);
    CHECK(!other.polygon.empty());
}

TEST_CASE("ratio trace polynomial against numeric roots")
{
    IntPoly f = P(table::rows[1].poly);
    IntPoly T = ratio_trace_polynomial(f);
    REQUIRE(T.degree() == 21);
    auto roots = oracle::numeric_roots(f);
    Real lc(T.lc().get_str());
    for (size_t i = 0; i < roots.size(); i++)
        for (size_t j = i + 1; j < roots.size(); j++) {
            Complex r = roots[i] / roots[j] + roots[j] / roots[i];
            Complex v = 0;
            for (int k = 21; k >= 0; k--)
                v = v * r + Complex(Real(T.c[k].get_str()) / lc);
            CHECK(abs(v) < Real("1e-25"));
        }
}

TEST_CASE("shape at N")
{
    IntPoly f = P(table::rows[0].poly);
    Int N(table::rows[0].N);
    auto K = pair_resolvent_polynomial(f);
    Int d = discriminant(f);
    auto s = shape_at_N(K.minpoly, N, d);
    CHECK_MESSAGE(s.verified, s.report);
    CHECK(s.exp_a == 11);
    CHECK(s.exp_b == 5);
    CHECK(s.simple_degree == 11);
    CHECK(s.square_degree == 5);
    int sum = 0;
    for (int x : s.simple_factor_degrees)
        sum += x;
    CHECK(sum == 11);
    CHECK_THROWS_AS(shape_at_N(K.minpoly, Int(10487), d), resolvent_error);
}

TEST_CASE("resolvent field bundle")
{
    for (auto const& row : table::rows) {
        auto res = verify_favorable_heptic(P(row.poly));
        REQUIRE(res.accepted());
        auto K = make_resolvent_field(*res.record);
        CHECK(K.clean());
        CHECK(K.r1_K == resolvent_r1_formula(res.record->r1));
    }
}

TEST_CASE("too-real bound")
{
    CHECK(too_real_bound(1) == Rat(0));
    CHECK(too_real_bound(3) == Rat(1));
    CHECK(too_real_bound(3, 2) == Rat(3));
    CHECK(too_real_bound(5) == Rat(4));
    CHECK(too_real_bound(7) > too_real_bound(5));
}
