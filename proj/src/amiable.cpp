#include "favor7/amiable.hpp"

#include "favor7/records.hpp"

#include "json.hpp"

#include <random>
#include <sstream>

namespace favor7 {

std::string ClassFieldCertificate::consistency() const
{
    if (conductor_exponent) {
        int f = *conductor_exponent;
        if (f < 0 || f > 6 || f % 2)
            return "conductor exponent must be one of 0, 2, 4, 6";
    }
    if (omega_degree) {
        int d = *omega_degree;
        if (d < 1 || (d & (d - 1)))
            return "omega degree must be a power of two";
        if (d == 1 && conductor_exponent && *conductor_exponent != 0)
            return "omega degree 1 with nonzero conductor exponent";
    }
    if (closure_perm_gens)
        for (auto const& g : *closure_perm_gens)
            if (g.degree() != 42)
                return "closure generators must act on 42 points";
    return "";
}

Screen screen_necessary(FavorableRecord const& rec, ClassFieldCertificate const* cert)
{
    Screen s;
    if (rec.r1 > 3) {
        s.pass = false;
        s.reasons.push_back("r1 = " + std::to_string(rec.r1) + " > 3");
    }
    if (cert && cert->narrow_h_odd && !*cert->narrow_h_odd) {
        s.pass = false;
        s.reasons.push_back("narrow class number of K is even");
    }
    if (s.pass && (!cert || !cert->narrow_h_odd)) {
        s.pending = true;
        s.reasons.push_back("narrow class number parity not certified");
    }
    return s;
}

static std::string gp_script(ResolventField const& rf, std::string const& subject)
{
    std::ostringstream o;
    IntPoly const& f = rf.resolvent.minpoly;
    o << "\\\\ subject " << subject << "\n";
    o << "default(parisizemax, 8*10^9);\n";
    o << "f = Pol([";
    for (int i = f.degree(); i >= 0; i--)
        o << f.c[i].get_str() << (i ? ", " : "");
    o << "]);\n";
    o << "K = bnfinit(f, 1);\n"
         "nh = bnfnarrow(K)[1];\n"
         "P = idealprimedec(K, 2);\n"
         "if (#P != 1 || P[1].e != 7 || P[1].f != 3, error(\"unexpected splitting of 2\"));\n"
         "m = [idealpow(K, P[1], 6), vector(K.r1, i, 1)];\n"
         "R = bnrinit(K, m, 1);\n"
         "cyc = R.cyc;\n"
         "r = #select(c -> c % 2 == 0, cyc);\n"
         "H = mathnf(matconcat([matdiagonal(cyc), 2 * matid(#cyc)]));\n"
         "fexp = if (r == 0, 0, idealval(K, bnrconductor(R, H)[1], P[1]));\n"
         "print(\"{\\\"subject\\\": \\\"" << subject
      << "\\\", \\\"omega_degree\\\": \", 2^r, \", \\\"conductor_exponent\\\": \", fexp, "
         "\", \\\"narrow_h_odd\\\": \", if (nh % 2, \"true\", \"false\"), \"}\");\n"
         "\\\\ when 2^r = 2 and fexp = 4: the quadratic extension is\n"
         "\\\\   L = bnrclassfield(R, H, 2); its Galois closure over Q has a\n"
         "\\\\   transitive action on 42 points whose generators are required\n";
    return o.str();
}

static std::string magma_script(ResolventField const& rf, std::string const& subject)
{
    std::ostringstream o;
    IntPoly const& f = rf.resolvent.minpoly;
    o << "// subject " << subject << "\n";
    o << "P<x> := PolynomialRing(Integers());\n";
    o << "f := ";
    for (int i = f.degree(); i >= 0; i--) {
        if (f.c[i] == 0)
            continue;
        o << (f.c[i] < 0 ? " - " : (i == f.degree() ? "" : " + ")) << Int(abs(f.c[i])).get_str() << "*x^" << i;
    }
    o << ";\n";
    o << "K := NumberField(f);\n"
         "O := MaximalOrder(K);\n"
         "SetClassGroupBounds(\"GRH\");\n"
         "Cn := RayClassGroup(1*O, [1..Degree(K)]);\n"
         "p := Decomposition(O, 2)[1][1];\n"
         "R, mR := RayClassGroup(p^6, [1..Signature(K)]);\n"
         "Q, q := quo<R | 2*R>;\n"
         "A := AbelianExtension(Inverse(q)*mR);\n"
         "cond := Conductor(A);\n"
         "printf \"{\\\"subject\\\": \\\"" << subject
      << "\\\", \\\"omega_degree\\\": %o, \\\"conductor_exponent\\\": %o, \\\"narrow_h_odd\\\": %o}\\n\",\n"
         "    #Q, Valuation(cond, p), IsOdd(#Cn);\n"
         "// when #Q = 2 and the exponent is 4: GaloisGroup of the degree 42\n"
         "// absolute field of A gives the required generators\n";
    return o.str();
}

WorkOrder emit_work_order(ResolventField const& rf, std::string const& subject, std::string const& cas)
{
    if (!rf.clean())
        throw amiable_error("resolvent certificates are not clean; no work order");
    if (cas != "gp" && cas != "magma")
        throw amiable_error("unknown CAS '" + cas + "'");
    WorkOrder w;
    w.cas = cas;
    w.script = cas == "gp" ? gp_script(rf, subject) : magma_script(rf, subject);
    w.script_sha256 = sha256_hex(w.script);
    nlohmann::ordered_json j;
    j["subject"] = subject;
    j["degree"] = rf.resolvent.minpoly.degree();
    j["minpoly"] = poly_to_json(rf.resolvent.minpoly);
    j["prime"] = 2;
    j["modulus_prime_exponent"] = 6;
    j["archimedean"] = true;
    j["outputs"] = {"narrow_h_odd", "omega_degree", "conductor_exponent", "closure_perm_gens"};
    j["cas"] = cas;
    j["script_sha256"] = w.script_sha256;
    w.request_json = j.dump(2);
    return w;
}

char const* closure_class_name(ClosureClass c)
{
    switch (c) {
    case ClosureClass::G6: return "G6";
    case ClosureClass::G14: return "G14";
    case ClosureClass::G20: return "G20";
    case ClosureClass::other: return "other";
    }
    return "?";
}

ClosureId identify_closure_group(std::vector<Perm> const& gens, uint64_t seed)
{
    if (gens.empty())
        throw amiable_error("no generators");
    for (auto const& g : gens)
        if (g.degree() != 42)
            throw amiable_error("closure generators must act on 42 points");
    PermGroup G(42, gens);
    if (!G.is_transitive())
        throw amiable_error("closure group is not transitive on 42 points");
    ClosureId id;
    id.order = G.order();
    Int s7 = 5040;
    std::ostringstream det;
    det << "order " << id.order.get_str();
    if (id.order % s7 != 0) {
        id.detail = det.str() + ", not divisible by 5040";
        return id;
    }
    Int rad = id.order / s7;
    int a = 0;
    for (Int t = rad; t > 1; t /= 2) {
        if (t % 2 != 0) {
            id.detail = det.str() + ", radical order not a power of 2";
            return id;
        }
        a++;
    }
    id.abelianization = G.order() / derived_subgroup(G).order();
    /* a block system with S_7 on the blocks */
    std::vector<int> labels;
    for (int b = 1; b < 42 && labels.empty(); b++) {
        auto l = minimal_block_system(gens, 0, b);
        int nb = *std::max_element(l.begin(), l.end()) + 1;
        if (nb > 1 && PermGroup(nb, block_action(gens, l)).order() == s7)
            labels = l;
    }
    if (!labels.empty()) {
        id.radical_log2 = a;
        /* kernel elements g^k, k the order on the blocks, have order <= 2 */
        std::mt19937_64 rng(seed);
        bool ok = true;
        for (int it = 0; it < 200 && ok; it++) {
            Perm g = G.random_element(rng);
            Perm img = block_action({g}, labels)[0];
            Perm k = g.pow(img.order());
            ok = (k * k).is_identity();
        }
        id.radical_exponent2 = ok;
    }
    id.checks_pass = id.radical_log2 == a && id.radical_exponent2 && id.abelianization == 2;
    det << ", radical 2^" << a << ", abelianization " << id.abelianization.get_str()
        << (id.radical_exponent2 ? ", radical of exponent 2" : ", radical exponent check failed");
    id.detail = det.str();
    if (id.checks_pass) {
        if (a == 6)
            id.cls = ClosureClass::G6;
        else if (a == 14)
            id.cls = ClosureClass::G14;
        else if (a == 20)
            id.cls = ClosureClass::G20;
    }
    return id;
}

char const* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::amiable_Z: return "amiable-Z";
    case Verdict::amiable_f6: return "amiable-f6";
    case Verdict::amiable_f4: return "amiable-f4";
    case Verdict::not_amiable: return "not-amiable";
    case Verdict::insufficient_certificate: return "insufficient-certificate";
    }
    return "?";
}

char const* verdict_label(Verdict v)
{
    switch (v) {
    case Verdict::amiable_Z: return "Z";
    case Verdict::amiable_f6: return "f6";
    case Verdict::amiable_f4: return "f4";
    default: return "-";
    }
}

AmiabilityVerdict amiability_verdict(FavorableRecord const& rec, ClassFieldCertificate const* cert)
{
    AmiabilityVerdict v;
    Screen s = screen_necessary(rec, cert);
    if (!s.pass) {
        v.verdict = Verdict::not_amiable;
        v.reasons = s.reasons;
        return v;
    }
    auto insufficient = [&](std::string why) {
        v.verdict = Verdict::insufficient_certificate;
        v.reasons.push_back(std::move(why));
        return v;
    };
    if (!cert)
        return insufficient("no certificate");
    std::string c = cert->consistency();
    if (!c.empty())
        return insufficient("inconsistent certificate: " + c);
    if (!cert->narrow_h_odd)
        return insufficient("narrow class number parity missing");
    if (!cert->omega_degree)
        return insufficient("omega degree missing");
    int d = *cert->omega_degree;
    if (d == 1) {
        v.verdict = Verdict::amiable_Z;
        v.reasons.push_back("omega = K");
    } else if (d >= 4) {
        v.verdict = Verdict::not_amiable;
        v.reasons.push_back("[omega : K] = " + std::to_string(d) + " >= 4");
    } else {
        if (!cert->conductor_exponent)
            return insufficient("conductor exponent missing");
        int f = *cert->conductor_exponent;
        if (f == 6) {
            v.verdict = Verdict::amiable_f6;
            v.reasons.push_back("[omega : K] = 2, conductor exponent 6");
        } else if (f == 4) {
            if (!cert->closure_perm_gens)
                return insufficient("conductor exponent 4 needs the closure generators");
            v.closure = identify_closure_group(*cert->closure_perm_gens);
            if (v.closure->cls == ClosureClass::G6) {
                v.verdict = Verdict::amiable_f4;
                v.reasons.push_back("[omega : K] = 2, conductor exponent 4, closure group G6");
            } else {
                v.verdict = Verdict::not_amiable;
                v.reasons.push_back(std::string("conductor exponent 4 but closure group ") +
                                    closure_class_name(v.closure->cls));
            }
        } else {
            v.verdict = Verdict::not_amiable;
            v.reasons.push_back("[omega : K] = 2 with conductor exponent " + std::to_string(f) +
                                " (compatible with the stricter G6 bound)");
        }
    }
    if (v.is_amiable() && !s.pass)
        throw amiable_error("internal: amiable verdict without the necessary conditions");
    return v;
}

}  // namespace favor7
