#include "doctest.h"
#include "favor7/amiable.hpp"
#include "favor7/parabolic.hpp"
#include "favor7/records.hpp"
#include "table_rows.hpp"

#include <random>

using namespace favor7;

static FavorableRecord row_record(int i)
{
    auto r = verify_favorable_heptic(parse_polynomial(table::rows[i].poly));
    REQUIRE(r.accepted());
    return *r.record;
}

static std::vector<Perm> relabel(std::vector<Perm> const& gens, uint64_t seed)
{
    std::vector<int> img(42);
    for (int i = 0; i < 42; i++)
        img[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(img.begin(), img.end(), rng);
    Perm c(img);
    std::vector<Perm> out;
    for (auto const& g : gens)
        out.push_back(c * g * c.inverse());
    return out;
}

/* S_7 on ordered pairs of distinct points */
static std::vector<Perm> s7_on_pairs()
{
    std::vector<std::pair<int, int>> pts;
    for (int i = 0; i < 7; i++)
        for (int j = 0; j < 7; j++)
            if (i != j)
                pts.push_back({i, j});
    auto index = [&](int i, int j) {
        for (size_t k = 0; k < pts.size(); k++)
            if (pts[k] == std::make_pair(i, j))
                return (int)k;
        return -1;
    };
    std::vector<Perm> out;
    for (auto s : {Perm::parse_cycles(7, "(1234567)"), Perm::parse_cycles(7, "(12)")}) {
        std::vector<int> img(42);
        for (int k = 0; k < 42; k++)
            img[k] = index(s(pts[k].first), s(pts[k].second));
        out.emplace_back(img);
    }
    return out;
}

TEST_CASE("closure groups are identified by order and structure")
{
    ClosureClass expect[] = {ClosureClass::G6, ClosureClass::G14, ClosureClass::G20};
    int k = 0;
    for (int a : {6, 14, 20}) {
        auto gens = coset_action_42(a);
        auto id = identify_closure_group(gens);
        CHECK(id.cls == expect[k]);
        CHECK(id.order == Int(5040) << (unsigned)a);
        CHECK(id.checks_pass);
        CHECK(id.radical_log2 == a);
        for (uint64_t s : {1u, 2u, 3u})
            CHECK(identify_closure_group(relabel(gens, s)).cls == expect[k]);
        k++;
    }
    CHECK(identify_closure_group(coset_action_42(6)).order == 322560);
    auto s7 = identify_closure_group(s7_on_pairs());
    CHECK(s7.cls == ClosureClass::other);
    CHECK(s7.order == 5040);
    /* intransitive */
    std::vector<int> img(42);
    for (int i = 0; i < 42; i++)
        img[i] = i;
    std::swap(img[0], img[1]);
    CHECK_THROWS_AS(identify_closure_group({Perm(img)}), amiable_error);
    CHECK_THROWS_AS(identify_closure_group({Perm(7)}), amiable_error);
}

TEST_CASE("necessary conditions")
{
    auto rec = row_record(0);
    CHECK(rec.r1 <= 3);
    auto s = screen_necessary(rec, nullptr);
    CHECK(s.pass);
    CHECK(s.pending);
    FavorableRecord seven = rec;
    seven.r1 = 7;
    CHECK(!screen_necessary(seven, nullptr).pass);
    ClassFieldCertificate c;
    c.narrow_h_odd = false;
    CHECK(!screen_necessary(rec, &c).pass);
    c.narrow_h_odd = true;
    auto s2 = screen_necessary(rec, &c);
    CHECK(s2.pass);
    CHECK(!s2.pending);
}

TEST_CASE("verdict table")
{
    auto rec = row_record(0);
    auto cert = [](std::optional<int> d, std::optional<int> f) {
        ClassFieldCertificate c;
        c.narrow_h_odd = true;
        c.omega_degree = d;
        c.conductor_exponent = f;
        return c;
    };
    auto V = [&](ClassFieldCertificate const& c) { return amiability_verdict(rec, &c).verdict; };
    CHECK(V(cert(1, 0)) == Verdict::amiable_Z);
    CHECK(V(cert(2, 6)) == Verdict::amiable_f6);
    CHECK(V(cert(4, 6)) == Verdict::not_amiable);
    CHECK(V(cert(2, 2)) == Verdict::not_amiable);
    CHECK(V(cert(2, 0)) == Verdict::not_amiable);
    CHECK(V(cert(2, 4)) == Verdict::insufficient_certificate);
    CHECK(V(cert(std::nullopt, std::nullopt)) == Verdict::insufficient_certificate);
    CHECK(V(cert(2, 3)) == Verdict::insufficient_certificate); /* odd exponent */
    CHECK(amiability_verdict(rec, nullptr).verdict == Verdict::insufficient_certificate);
    auto c4 = cert(2, 4);
    c4.closure_perm_gens = coset_action_42(6);
    CHECK(V(c4) == Verdict::amiable_f4);
    c4.closure_perm_gens = coset_action_42(20);
    CHECK(V(c4) == Verdict::not_amiable);
    /* monotone: adding generators moves insufficient to a decision */
    auto bad = cert(1, 0);
    bad.narrow_h_odd = false;
    CHECK(V(bad) == Verdict::not_amiable);
    FavorableRecord real = rec;
    real.r1 = 5;
    auto good = cert(1, 0);
    CHECK(amiability_verdict(real, &good).verdict == Verdict::not_amiable);
    CHECK(std::string(verdict_label(Verdict::amiable_f4)) == "f4");
}

TEST_CASE("work orders")
{
    auto rf = make_resolvent_field(row_record(3));
    REQUIRE(rf.clean());
    std::string subj = resolvent_subject(rf);
    CHECK(subj.size() == 64);
    auto w = emit_work_order(rf, subj, "gp");
    auto j = Json::parse(w.request_json);
    CHECK(j["degree"] == 21);
    CHECK(j["modulus_prime_exponent"] == 6);
    CHECK(j["archimedean"] == true);
    CHECK(j["script_sha256"] == sha256_hex(w.script));
    CHECK(w.script.find(subj) != std::string::npos);
    auto m = emit_work_order(rf, subj, "magma");
    CHECK(m.script != w.script);
    CHECK_THROWS_AS(emit_work_order(rf, subj, "maple"), amiable_error);
    ResolventField dirty = rf;
    dirty.two_adic.ok = false;
    CHECK_THROWS_AS(emit_work_order(dirty, subj, "gp"), amiable_error);
}

TEST_CASE("records and hashes")
{
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    auto rec = row_record(5);
    auto j = record_to_json(rec);
    auto back = record_from_json(Json::parse(dump(j)));
    CHECK(back.h == rec.h);
    CHECK(back.N == rec.N);
    CHECK(back.r1 == rec.r1);
    CHECK(dump(record_to_json(back)) == dump(j));
    CHECK(int_to_json(Int(1) << 60).is_string());
    CHECK(int_to_json(Int(12)).is_number());
    CHECK(int_from_json(Json("-123456789012345678901")) == Int("-123456789012345678901"));
    CHECK_THROWS_AS(record_from_json(Json::parse("{\"N\": 3}")), record_error);

    ClassFieldCertificate c;
    c.subject = "x";
    c.omega_degree = 2;
    c.conductor_exponent = 4;
    c.narrow_h_odd = true;
    c.closure_perm_gens = coset_action_42(6);
    c.produced_by = "test";
    auto cj = certificate_to_json(c);
    auto c2 = certificate_from_json(cj);
    CHECK(dump(certificate_to_json(c2)) == dump(cj));
    CHECK(c2.closure_perm_gens->at(0) == c.closure_perm_gens->at(0));
}
