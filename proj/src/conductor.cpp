#include "favor7/conductor.hpp"
#include "favor7/padic.hpp"

#include <sstream>

namespace favor7 {

char const* ramification_name(Ramification r)
{
    switch (r) {
    case Ramification::split: return "split";
    case Ramification::unramified: return "unramified";
    case Ramification::totally_ramified_p3: return "totally ramified of degree p^3";
    case Ramification::ramified: return "ramified";
    }
    return "?";
}

static ConductorVerdict verdict(Family f, std::string label, int value, bool exact, Ramification r,
                                std::string base, std::string reason, int headline)
{
    ConductorVerdict v;
    v.family = f;
    v.case_label = std::move(label);
    v.value = value;
    v.exact = exact;
    v.ramification = r;
    v.base = std::move(base);
    v.reason = std::move(reason);
    v.headline_bound = headline;
    return v;
}

/* conductor of two fields combined by a Baer sum: equal when one is
 * strictly smaller, otherwise only the common bound */
static ConductorVerdict combine(ConductorVerdict const& a, ConductorVerdict const& b, std::string label)
{
    ConductorVerdict r = a;
    r.case_label = std::move(label);
    if (a.value != b.value && a.exact && b.exact) {
        ConductorVerdict const& big = a.value > b.value ? a : b;
        r.value = big.value;
        r.exact = true;
        r.ramification = big.ramification == Ramification::totally_ramified_p3 ? Ramification::ramified
                                                                             : big.ramification;
        r.reason = "Baer sum of " + a.case_label + " and " + b.case_label + ", strictly smaller conductor absorbed";
    } else {
        r.value = std::max(a.value, b.value);
        r.exact = false;
        r.ramification = Ramification::ramified;
        r.reason = "Baer sum of " + a.case_label + " and " + b.case_label + ", field inside the compositum";
    }
    return r;
}

ConductorVerdict conductor_case(ExtParams const& P, unsigned p)
{
    auto kp = residue_field(p);
    Fq const& k = *kp;
    if ((int)P.s.size() != family_arity(P.family))
        throw honda_error("wrong number of parameters");
    int pi = (int)p;
    auto const& s = P.s;
    switch (P.family) {
    case Family::s11: {
        std::string base = "F = K(E1)";
        int H = pi * pi;
        if (P.is_zero())
            return verdict(P.family, "split", 0, true, Ramification::split, base, "zero parameters", H);
        if (s[0])
            return verdict(P.family, "t1 != 0", pi * pi, true, Ramification::totally_ramified_p3, base,
                           "Artin-Schreier conductor, m = 0", H);
        if (s[2] == 0)
            return verdict(P.family, "t1 = t3 = 0", 0, true, Ramification::unramified, base,
                           "reduction separable over the residue field", H);
        auto t3 = verdict(P.family, "t1 = t2 = 0, t3 != 0", pi, true, Ramification::totally_ramified_p3, base,
                          "Artin-Schreier conductor, m = 1", H);
        if (s[1] == 0)
            return t3;
        auto t2 = verdict(P.family, "t1 = t3 = 0", 0, true, Ramification::unramified, base,
                          "reduction separable over the residue field", H);
        return combine(t3, t2, "t1 = 0, t2 != 0, t3 != 0");
    }
    case Family::s21: {
        std::string base = "F'' = K(E1, E2)";
        int H = pi * pi - pi;
        if (P.is_zero())
            return verdict(P.family, "split", 0, true, Ramification::split, base, "zero parameters", H);
        return verdict(P.family, "s != 0", pi * pi - pi, true, Ramification::totally_ramified_p3, base,
                       "Artin-Schreier conductor, m = 0", H);
    }
    case Family::s12: {
        std::string base = "F'' = K(E1, E2)";
        int H = pi * pi + pi;
        if (P.is_zero())
            return verdict(P.family, "split", 0, true, Ramification::split, base, "zero parameters", H);
        /* r = t - (-lambda' s1)^p p^(p-2), read in k */
        Fq::elt corr = 0;
        if (p == 2)
            corr = k.pow(k.mul(P.lambda2, s[0]), 2);
        Fq::elt r = k.sub(s[3], corr);
        bool A0 = s[0] == 0 && s[1] == 0 && s[2] == 0;
        auto case2 = [&](std::string label) {
            return verdict(P.family, label, pi * pi - pi + 2, true, Ramification::totally_ramified_p3, base,
                           "Artin-Schreier conductor in y, m = 0", H);
        };
        auto case1 = [&](ExtParams const& Q) -> ConductorVerdict {
            if (Q.s[0])
                return verdict(P.family, "r = 0, s1 != 0", pi * pi + pi, true, Ramification::totally_ramified_p3,
                               base, "Artin-Schreier conductor in z, m = 0", H);
            if (Q.s[1] == 0)
                return verdict(P.family, "r = 0, s1 = s2 = 0, s3 != 0", 2, true,
                               Ramification::totally_ramified_p3, base, "Artin-Schreier conductor in z, m = 2", H);
            if (Q.s[2] == 0)
                return verdict(P.family, "r = 0, s1 = s3 = 0, s2 != 0", 2, true,
                               Ramification::totally_ramified_p3, base, "Artin-Schreier conductor in z, m = 1", H);
            ExtParams a = Q, b = Q;
            a.s[2] = 0;
            b.s[1] = 0;
            auto va = verdict(P.family, "r = 0, s1 = s3 = 0, s2 != 0", 2, true, Ramification::totally_ramified_p3,
                              base, "", H);
            auto vb = verdict(P.family, "r = 0, s1 = s2 = 0, s3 != 0", 2, true, Ramification::totally_ramified_p3,
                              base, "", H);
            return combine(va, vb, "r = 0, s1 = 0, s2 != 0, s3 != 0");
        };
        if (r == 0)
            return case1(P);
        if (A0)
            return case2("A = 0, r != 0");
        /* P = (s, t - r) + (0, 0, 0, r): the first has r = 0 */
        ExtParams first = P;
        first.s[3] = corr;
        auto v1 = case1(first);
        auto v2 = case2("A = 0, r != 0");
        return combine(v1, v2, "A != 0, r != 0");
    }
    case Family::s22: {
        std::string base = "F' = K(E2)";
        int H = p == 2 ? 4 : (pi * pi + 1) / 2;
        if (P.is_zero())
            return verdict(P.family, "split", 0, true, Ramification::split, base, "zero parameters", H);
        if (s[0])
            return verdict(P.family, "s1 != 0", H, true, Ramification::totally_ramified_p3, base,
                           "Artin-Schreier conductor, m = 0", H);
        if (s[1])
            return verdict(P.family, "s1 = 0, s2 != 0", p == 2 ? 2 : (pi + 1) / 2, true,
                           Ramification::totally_ramified_p3, base, "Artin-Schreier conductor, m = 0", H);
        return verdict(P.family, "s1 = s2 = 0", 0, true, Ramification::unramified, base,
                       "constant term in k: reduction separable", H);
    }
    }
    throw honda_error("unknown family");
}

std::optional<ASData> artin_schreier_conductor(Rat const& ord_C, int e_F, unsigned p)
{
    if (ord_C >= 0)
        return std::nullopt;
    ASData d;
    d.ord_C = ord_C;
    d.e_F = e_F;
    Rat v = ord_C * Rat(e_F);
    v.canonicalize();
    if (v.get_den() != 1)
        throw std::invalid_argument("valuation of C is not integral over the base");
    d.vF_C = (int)v.get_num().get_si();
    try {
        AsData a = as_conductor(d.vF_C, e_F, p, 3);
        d.m = a.m;
        d.vF_w = (int)a.vF_w;
        d.conductor = (int)a.conductor;
        d.hypothesis_ok = true;
    } catch (padic_error const&) {
        d.hypothesis_ok = false;
    }
    return d;
}

static std::string pw(std::string const& base, std::string const& e) { return base + "^(" + e + ")"; }

struct BankVals {
    Rat a, b, alpha, beta, gamma;
};
static BankVals bank(unsigned p)
{
    long q1 = (long)p * p * p - 1;
    long P = p;
    BankVals v;
    v.a = Rat(1, q1);
    v.b = Rat(P * P, q1);
    v.alpha = Rat(P + 1, q1);
    v.beta = Rat(P * P + 1, q1);
    v.gamma = Rat(P * P + P, q1);
    for (Rat* r : {&v.a, &v.b, &v.alpha, &v.beta, &v.gamma})
        r->canonicalize();
    return v;
}

FieldDescriptor field_of_points_simple(int dimL, unsigned p)
{
    FieldDescriptor d;
    BankVals v = bank(p);
    long q1 = (long)p * p * p - 1;
    if (dimL == 1) {
        d.kind = "E1";
        d.equation = "x^" + std::to_string(q1) + " + lambda^" + std::to_string(p) + " * " + std::to_string(p);
        d.base = "K(mu_" + std::to_string(q1) + ")";
        d.e_base = (int)q1;
        d.valuations = {{"a", v.a}, {"b", v.b}};
        d.note = "totally ramified of degree " + std::to_string(q1) + " over the maximal unramified subfield";
    } else if (dimL == 2) {
        d.kind = "E2";
        d.equation = pw("(-lambda')", std::to_string(p * p)) + " x^" + std::to_string(q1) + " + " +
                     std::to_string(p) + "^" + std::to_string(p + 1);
        d.valuations = {{"alpha", v.alpha}, {"beta", v.beta}, {"gamma", v.gamma}};
        if (p == 2) {
            d.base = "K(mu_7)";
            d.e_base = 7;
            d.note = "F' = K((2 lambda')^(1/7), mu_7), totally ramified of degree 7 over K(mu_7)";
        } else {
            d.base = "K(mu_" + std::to_string(q1) + ", sqrt(lambda'))";
            d.e_base = (int)(q1 / 2);
            d.note = "totally ramified of degree " + std::to_string(q1 / 2);
        }
    } else {
        throw honda_error("dim L must be 1 or 2");
    }
    return d;
}

FieldDescriptor field_of_points_extension(ExtParams const& P, unsigned p)
{
    FieldDescriptor d;
    BankVals v = bank(p);
    long q = (long)p * p * p;
    int eFF = (int)(q - 1); /* F and F'' */
    int eF2 = p == 2 ? 7 : (int)((q - 1) / 2);
    auto const& s = P.s;
    std::string Q = std::to_string(q);
    d.kind = family_name(P.family);
    d.valuations = {{"a", v.a}, {"b", v.b}, {"alpha", v.alpha}, {"beta", v.beta}, {"gamma", v.gamma}};
    auto single = [&](Rat ord_C, int e) {
        ord_C.canonicalize();
        d.as = artin_schreier_conductor(ord_C, e, p);
    };
    int P_ = (int)p;
    switch (P.family) {
    case Family::s11:
        d.equation = "Y^" + Q + " - Y - A,  A = t2 + lambda (t1 a + t3 a^p) a^(-p^2)";
        d.base = "F = K(E1)";
        d.e_base = eFF;
        if (s[0])
            single(v.a * Rat(1 - P_ * P_), eFF);
        else if (s[2] && !s[1])
            single(v.a * Rat(P_ - P_ * P_), eFF);
        else if (!s[0] && !s[2])
            d.note = "A in k: unramified";
        else
            d.note = "mixed terms: conductor via Baer sums";
        break;
    case Family::s21:
        d.equation = "Y^" + Q + " - Y + A,  A = sigma(s) alpha / b";
        d.base = "F'' = K(E1, E2)";
        d.e_base = eFF;
        if (s[0])
            single(v.alpha - v.b, eFF);
        else
            d.note = "split";
        break;
    case Family::s12: {
        d.base = "F'' = K(E1, E2)";
        d.e_base = eFF;
        auto kp = residue_field(p);
        Fq::elt corr = p == 2 ? kp->pow(kp->mul(P.lambda2, s[0]), 2) : 0;
        bool r0 = kp->sub(s[3], corr) == 0;
        bool A0 = !s[0] && !s[1] && !s[2];
        if (r0 && !A0) {
            d.equation = "Z^" + Q + " - Z + C,  C = A alpha^(-p),  A = s1 a + s2 b + s3 a^p";
            if (s[0])
                single(v.a - Rat(P_) * v.alpha, eFF);
            else if (s[2] && !s[1])
                single(Rat(P_) * v.a - Rat(P_) * v.alpha, eFF);
            else if (s[1] && !s[2])
                single(v.b - Rat(P_) * v.alpha, eFF);
            else
                d.note = "mixed terms: conductor via Baer sums";
        } else if (A0 && !r0) {
            d.equation = "Y^" + Q + " - Y + C,  C = r a^p / beta";
            single(Rat(P_) * v.a - v.beta, eFF);
        } else if (A0) {
            d.note = "split";
        } else {
            d.equation = "Z^" + Q + " - Z + C  and  Y^" + Q + " - Y + C'";
            d.note = "r != 0 and A != 0: conductor via Baer sums";
        }
        break;
    }
    case Family::s22:
        d.equation = "Z^" + Q + " - Z + A alpha^(-p),  A = s1 alpha + s2 beta + s3 alpha^p";
        d.base = "F' = K(E2)";
        d.e_base = eF2;
        if (s[0])
            single(v.alpha - Rat(P_) * v.alpha, eF2);
        else if (s[1])
            single(v.beta - Rat(P_) * v.alpha, eF2);
        else if (s[2])
            d.note = "A alpha^(-p) = s3 in k: unramified";
        else
            d.note = "split";
        break;
    }
    return d;
}

bool alpha_over_a_identity(unsigned p)
{
    BankVals v = bank(p);
    Rat lhs = Rat((long)p * p * p - 1) * (v.alpha - v.a);
    lhs.canonicalize();
    return lhs == Rat(p);
}

}  // namespace favor7
