#include "doctest.h"
#include "favor7/favorable.hpp"
#include "oracles.hpp"
#include "table_rows.hpp"

#include <set>

using namespace favor7;

static IntPoly P(char const* s) { return parse_polynomial(s); }

TEST_CASE("table curves are favorable with the printed conductor")
{
    for (auto const& row : table::rows) {
        IntPoly h = P(row.poly);
        auto res = verify_favorable_heptic(h);
        REQUIRE_MESSAGE(res.accepted(), row.poly, " ", res.detail);
        auto const& r = *res.record;
        CHECK(r.N == Int(row.N));
        CHECK(r.g.has_value());
        CHECK(curve_polynomial(*r.g) == h);
        /* independent discriminant */
        Int d = oracle::sylvester_discriminant(h);
        CHECK(d == r.disc);
        CHECK(abs(d) == Int(4096) * Int(row.N));
        CHECK(r.disc_shape_ok);
        CHECK(r.newton_ok);
        CHECK(r.prime_ok);
        Int ns = r.n_star();
        CHECK(((ns % 4) + 4) % 4 == 1);
        CHECK(r.frobenius_parity == ((((ns % 8) + 8) % 8) == 5 ? 1 : 0));
        CHECK(r.r1 == oracle::bisection_real_roots(h));
        CHECK(r.r1 <= 3);
    }
}

TEST_CASE("rejections carry distinct reasons")
{
    auto a = verify_favorable_heptic(P("x^7-2"));
    CHECK(!a.accepted());
    CHECK(a.reason != Rejection::none);
    CHECK(discriminant(P("x^7-2")) == -Int(64) * Int(823543));

    auto b = verify_favorable_heptic(curve_polynomial({0, 0, 0, 0, 0, 0, 0}));
    CHECK(!b.accepted());
    CHECK(b.reason != Rejection::none);

    CHECK(verify_favorable_heptic(P("x^6+1")).reason == Rejection::degree);
    CHECK(verify_favorable_heptic(P("x-1")).reason == Rejection::degree);
    CHECK(verify_favorable_heptic(P("x^7+x^6")).reason == Rejection::not_squarefree);
    /* unramified at 2 */
    CHECK(verify_favorable_heptic(P("x^7+x+1")).reason == Rejection::newton);

    std::set<std::string> names;
    for (auto r : {Rejection::none, Rejection::degree, Rejection::not_squarefree, Rejection::newton,
                   Rejection::disc_shape, Rejection::up_to_index, Rejection::not_prime, Rejection::n_star_mod4})
        names.insert(rejection_name(r));
    CHECK(names.size() == 8);
}

TEST_CASE("curve coefficients round trip")
{
    CurveCoeffs g{-3, -1, -1, -3, -2, 0, 0};
    IntPoly h = curve_polynomial(g);
    CHECK(h == P(table::rows[0].poly));
    auto back = curve_coefficients(h);
    REQUIRE(back);
    CHECK(*back == g);
    CHECK(!curve_coefficients(P("4x^7+2")));
    CHECK(!curve_coefficients(P("x^7+1")));
}

TEST_CASE("box parsing and ordering")
{
    CoeffBox b = parse_box("a0=-1:1,a3=2");
    CHECK(b.size() == 3);
    CHECK(b.at(0) == CurveCoeffs{-1, 0, 0, 2, 0, 0, 0});
    CHECK(b.at(2) == CurveCoeffs{1, 0, 0, 2, 0, 0, 0});
    CHECK_THROWS(parse_box("a7=1"));
    CHECK_THROWS(parse_box("a0=2:1"));
    CHECK_THROWS(parse_box("a0"));
    CoeffBox c = parse_box("a0=0:1,a6=0:1");
    CHECK(c.at(1) == CurveCoeffs{0, 0, 0, 0, 0, 0, 1});
    CHECK(c.at(2) == CurveCoeffs{1, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("search on the zero box is empty")
{
    CHECK(search_curves(parse_box(""), std::nullopt).empty());
}

TEST_CASE("search finds the table curves")
{
    CurveCoeffs g = *curve_coefficients(P(table::rows[3].poly));
    std::string spec;
    for (int i = 0; i < 7; i++)
        spec += (i ? "," : "") + std::string("a") + std::to_string(i) + "=" + std::to_string(g[i] - (i == 6)) +
                ":" + std::to_string(g[i] + (i == 6));
    auto recs = search_curves(parse_box(spec), std::nullopt, 2);
    bool found = false;
    for (auto const& r : recs)
        if (r.N == Int(table::rows[3].N))
            found = true;
    CHECK(found);
}

/* straight-line re-enumeration with the Sylvester discriminant */
static std::vector<CurveCoeffs> oracle_search(CoeffBox const& box, Int const& nmax)
{
    std::vector<CurveCoeffs> out;
    for (long i = 0; i < box.size(); i++) {
        CurveCoeffs g = box.at(i);
        std::vector<Int> c(8);
        c[7] = 4;
        for (int k = 0; k < 7; k++)
            c[6 - k] = 4 * g[k];
        c[0] += 1;
        IntPoly h(c);
        Int d = oracle::sylvester_discriminant(h);
        if (d == 0)
            continue;
        Int a = abs(d);
        if (mpz_scan1(a.get_mpz_t(), 0) != 12)
            continue;
        Int n = a >> 12;
        if (n == 1 || n > nmax || !mpz_probab_prime_p(n.get_mpz_t(), 30))
            continue;
        Int ns = d > 0 ? n : Int(-n);
        if (((ns % 4) + 4) % 4 != 1)
            continue;
        out.push_back(g);
    }
    return out;
}

TEST_CASE("search on [-2,2]^7 matches a brute-force enumeration")
{
    CoeffBox box = parse_box("a0=-2:2,a1=-2:2,a2=-2:2,a3=-2:2,a4=-2:2,a5=-2:2,a6=-2:2");
    Int nmax(10000000);
    auto recs = search_curves(box, nmax, 1);
    auto expect = oracle_search(box, nmax);
    REQUIRE(recs.size() == expect.size());
    MESSAGE("records in [-2,2]^7 with N <= 10^7: ", recs.size());
    for (size_t i = 0; i < recs.size(); i++) {
        CHECK(*recs[i].g == expect[i]);
        CHECK(is_prime(recs[i].N));
        CHECK(recs[i].N <= nmax);
    }
    SUBCASE("parallel equals serial")
    {
        auto par = search_curves(box, nmax, 4);
        REQUIRE(par.size() == recs.size());
        for (size_t i = 0; i < par.size(); i++) {
            CHECK(*par[i].g == *recs[i].g);
            CHECK(par[i].N == recs[i].N);
            CHECK(par[i].disc == recs[i].disc);
        }
    }
}
