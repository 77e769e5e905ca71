#include "favor7/selftest.hpp"

#include "favor7/algebra.hpp"
#include "favor7/amiable.hpp"
#include "favor7/conductor.hpp"
#include "favor7/favorable.hpp"
#include "favor7/honda.hpp"
#include "favor7/localcft.hpp"
#include "favor7/parabolic.hpp"
#include "favor7/resolvent.hpp"
#include "favor7/witt.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace favor7 {

namespace {

using Check = std::function<std::string()>; /* empty string on success */

SelftestItem run(std::string name, Check const& c)
{
    SelftestItem it;
    it.name = std::move(name);
    auto t0 = std::chrono::steady_clock::now();
    try {
        it.detail = c();
        it.pass = it.detail.empty();
    } catch (std::exception const& e) {
        it.pass = false;
        it.detail = e.what();
    }
    it.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (it.pass)
        it.detail = "ok";
    return it;
}

std::string favorable_check()
{
    IntPoly h = parse_polynomial("4x^7 - 12x^6 - 4x^5 - 4x^4 - 12x^3 - 8x^2 + 1");
    auto r = verify_favorable_heptic(h);
    if (!r.accepted())
        return std::string("rejected: ") + rejection_name(r.reason);
    if (r.record->N != Int("9936420433"))
        return "conductor " + r.record->N.get_str();
    if (r.record->r1 > 3)
        return "r1 = " + std::to_string(r.record->r1);
    auto bad = verify_favorable_heptic(parse_polynomial("4x^7 + 1"));
    if (bad.accepted())
        return "4x^7 + 1 accepted";
    return "";
}

std::string resolvent_check()
{
    IntPoly h = parse_polynomial("4x^7 - 16x^6 + 28x^5 - 16x^4 - 12x^3 + 16x^2 + 4x - 3");
    auto rf = make_resolvent_field(*verify_favorable_heptic(h).record);
    if (rf.resolvent.minpoly.degree() != 21)
        return "resolvent degree " + std::to_string(rf.resolvent.minpoly.degree());
    if (!rf.two_adic.ok || rf.two_adic.e != 7 || rf.two_adic.f != 3)
        return "two-adic certificate: " + rf.two_adic.report;
    if (!rf.shape.verified)
        return "shape at N: " + rf.shape.report;
    return "";
}

std::string gamma6_check(SelftestOptions const& opt)
{
    F2Matrix gen = opt.gamma6 ? *opt.gamma6 : gamma_generator(6);
    F2Matrix cs = conjugation_action(iota(seven_cycle())), cr = conjugation_action(iota(transposition12()));
    F2Space mod = generate_subspace(36, {gen.flatten()}, {cs, cr});
    if (mod.dim() != 6)
        return "module generated by gamma_6 has dimension " + std::to_string(mod.dim());
    auto cd = corner_spaces(mod, delta_sigma36(), delta_tau36());
    if (cd.n1 != 1 || cd.n2 != 1)
        return "corner dimensions (" + std::to_string(cd.n1) + ", " + std::to_string(cd.n2) + ")";
    if (!(cd.C2 == F2Space::span(36, {gen.flatten()})))
        return "C2 is not spanned by the generator";
    if (cd.C2.contains(lower_left_t2().flatten()))
        return "[0 0; t^2 0] in C2";
    if (gen.block(0, 3, 3, 3).is_zero())
        return "generator has zero upper-right block";
    return "";
}

std::string groups_check()
{
    int dims[] = {6, 14, 20, 29, 35}, k = 0;
    for (int a : {6, 14, 20, 29, 35})
        if (gamma_module(a).dim() != dims[k++])
            return "dim Gamma_" + std::to_string(a);
    if (!(gamma_module(6).sum(gamma_module(14)) == gamma_module(20)))
        return "Gamma_20 != Gamma_6 + Gamma_14";
    PermGroup S(63, iota_on_vectors());
    if (S.order() != 5040)
        return "|iota(S_7)| = " + S.order().get_str();
    auto b = cond4_bounds();
    if (b != std::map<int, int>{{6, 2}, {14, 4}, {20, 6}, {29, 4}, {35, 6}})
        return "stricter bounds differ";
    auto id = identify_closure_group(coset_action_42(6));
    if (id.cls != ClosureClass::G6)
        return "42-point action of G_6 not identified";
    return "";
}

std::string units_check(int precision)
{
    int prec = precision ? precision : 14;
    auto G = compute_unit_class_group(prec);
    if (G.exhaustive_log2_order != 9)
        return "|U1/U6 U1^2| = 2^" + std::to_string(G.exhaustive_log2_order);
    auto const& c = G.unit_corners;
    if (c.n_triv || c.n_D || c.n1 != 1 || c.n2 != 2)
        return "decomposition type differs";
    if (!c.C1.contains(G.g[1]) || !c.C2.contains(G.g[2]) || !c.C2.contains(G.g[3]))
        return "generators outside their corners";
    return "";
}

std::string covector_check(int precision)
{
    LocalModel M(precision ? precision : default_local_precision());
    std::mt19937_64 rng(11);
    for (int it = 0; it < 10; it++) {
        Covector u{{LocalNumber(M, M.random(rng, 0)), LocalNumber(M, M.random(rng, 0)), LocalNumber(M, M.random(rng, 0))}};
        Covector v{{LocalNumber(M, M.random(rng, 0)), LocalNumber(M, M.random(rng, 0)), LocalNumber(M, M.random(rng, 0))}};
        if (!covector_equal(witt_add(u, v), witt_add(v, u)))
            return "covector addition not commutative";
    }
    return "";
}

std::string honda_check()
{
    auto k = residue_field(2);
    for (Family f : {Family::s11, Family::s21, Family::s12, Family::s22}) {
        std::mt19937_64 rng((unsigned)f + 1);
        for (int it = 0; it < 40; it++) {
            ExtParams P{f, (Fq::elt)(1 + rng() % 7), (Fq::elt)(1 + rng() % 7), {}};
            ExtParams Q = P;
            Q.s.clear();
            for (int i = 0; i < family_arity(f); i++) {
                P.s.push_back(rng() % 8);
                Q.s.push_back(rng() % 8);
            }
            auto H = build_extension(k, P);
            if (!H.valid())
                return "invalid system " + to_string(*k, P);
            if (conductor_case(P, 2).value > 6)
                return "conductor above 6 for " + to_string(*k, P);
            auto S = baer_sum_system(H, build_extension(k, Q));
            if (!(extract_params(S, f) == normalize(*k, baer_sum(*k, P, Q))))
                return "Baer sum mismatch for " + to_string(*k, P);
        }
    }
    for (Fq::elt l = 1; l < 8; l++)
        if (simple_standard_form(cartier_dual(simple_honda(k, 2, l))).param != k->pow(l, 4))
            return "dual parameter";
    return "";
}

}  // namespace

std::vector<SelftestItem> run_selftest(SelftestOptions const& opt)
{
    std::vector<SelftestItem> out;
    out.push_back(run("favorable heptic and conductor", favorable_check));
    out.push_back(run("pair resolvent certificates", resolvent_check));
    out.push_back(run("gamma_6 corner", [&] { return gamma6_check(opt); }));
    out.push_back(run("radicals, S_7 image, stricter bounds, G_6", groups_check));
    out.push_back(run("local unit classes", [&] { return units_check(opt.precision); }));
    out.push_back(run("covector addition", [&] { return covector_check(opt.precision); }));
    out.push_back(run("Honda extensions, Baer sums, conductors, duality", honda_check));
    return out;
}

}  // namespace favor7
