#include "favor7/honda.hpp"

#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace favor7 {

std::shared_ptr<Fq const> residue_field(unsigned p)
{
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<Fq const>> cache;
    std::lock_guard<std::mutex> g(mu);
    auto& slot = cache[p];
    if (!slot)
        slot = std::make_shared<Fq const>(p, 3);
    return slot;
}

/* ---- small vector helpers ---- */

static FqVec vadd(Fq const& k, FqVec a, FqVec const& b)
{
    for (size_t i = 0; i < a.size(); i++)
        a[i] = k.add(a[i], b[i]);
    return a;
}
static FqVec vscale(Fq const& k, Fq::elt c, FqVec a)
{
    for (auto& x : a)
        x = k.mul(c, x);
    return a;
}
static FqVec vsub(Fq const& k, FqVec const& a, FqVec const& b) { return vadd(k, a, vscale(k, k.neg(1), b)); }
static FqVec unit_vec(int n, int i)
{
    FqVec v(n, 0);
    v[i] = 1;
    return v;
}
static FqMat transpose(FqMat const& a)
{
    if (a.empty())
        return {};
    FqMat t = fq_zero((int)a[0].size(), (int)a.size());
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < a[0].size(); j++)
            t[j][i] = a[i][j];
    return t;
}
static FqMat columns_of(FqMat const& m)
{
    return transpose(m);
}
static int span_dim(Fq const& k, std::vector<FqVec> const& vs)
{
    if (vs.empty())
        return 0;
    return fq_span_dim(k, vs);
}
static bool same_span(Fq const& k, std::vector<FqVec> const& a, std::vector<FqVec> const& b)
{
    std::vector<FqVec> u(a);
    u.insert(u.end(), b.begin(), b.end());
    int d = span_dim(k, u);
    return span_dim(k, a) == d && span_dim(k, b) == d;
}
static bool in_span(Fq const& k, std::vector<FqVec> const& a, FqVec const& v)
{
    std::vector<FqVec> u(a);
    u.push_back(v);
    return span_dim(k, u) == span_dim(k, a);
}
/* basis of the intersection of two spans */
static std::vector<FqVec> intersect(Fq const& k, std::vector<FqVec> const& a, std::vector<FqVec> const& b)
{
    if (a.empty() || b.empty())
        return {};
    int n = (int)a[0].size();
    std::vector<FqVec> cols(a);
    for (auto const& v : b)
        cols.push_back(vscale(k, k.neg(1), v));
    auto ker = fq_kernel(k, fq_from_columns(cols));
    std::vector<FqVec> out;
    for (auto const& c : ker) {
        FqVec v(n, 0);
        for (size_t i = 0; i < a.size(); i++)
            v = vadd(k, v, vscale(k, c[i], a[i]));
        out.push_back(v);
    }
    /* reduce to a basis */
    std::vector<FqVec> basis;
    for (auto const& v : out)
        if (!in_span(k, basis, v))
            basis.push_back(v);
    return basis;
}
static std::vector<FqVec> image_basis(Fq const& k, FqMat const& m)
{
    std::vector<FqVec> basis;
    for (auto const& c : columns_of(m))
        if (!in_span(k, basis, c))
            basis.push_back(c);
    return basis;
}
static std::vector<FqVec> map_vecs(std::vector<FqVec> const& vs, auto f)
{
    std::vector<FqVec> out;
    for (auto const& v : vs)
        out.push_back(f(v));
    return out;
}

/* ---- HondaSystem ---- */

FqVec HondaSystem::apply_F(FqVec const& v) const { return fq_apply(*k, Fm, fq_frob(*k, v, 1)); }
FqVec HondaSystem::apply_V(FqVec const& v) const { return fq_apply(*k, Vm, fq_frob(*k, v, -1)); }

static bool semilinear_nilpotent(Fq const& k, FqMat const& m, int dir)
{
    int n = (int)m.size();
    FqMat acc = m;
    for (int i = 1; i < n; i++)
        acc = fq_mul(k, acc, fq_frob(k, m, dir * i));
    return fq_is_zero(acc);
}

bool HondaSystem::F_nilpotent() const { return semilinear_nilpotent(*k, Fm, 1); }
bool HondaSystem::V_nilpotent() const { return semilinear_nilpotent(*k, Vm, -1); }

std::string HondaSystem::audit() const
{
    Fq const& K = *k;
    int n = dim();
    if ((int)Fm.size() != n)
        return "matrix sizes";
    /* FV = 0 and VF = 0 */
    if (!fq_is_zero(fq_mul(K, Fm, fq_frob(K, Vm, 1))))
        return "FV != 0";
    if (!fq_is_zero(fq_mul(K, Vm, fq_frob(K, Fm, -1))))
        return "VF != 0";
    int dL = span_dim(K, L);
    if (dL != (int)L.size())
        return "L basis dependent";
    /* V injective on L */
    auto VL = map_vecs(L, [&](FqVec const& v) { return apply_V(v); });
    if (span_dim(K, VL) != dL)
        return "V not injective on L";
    auto FM = image_basis(K, Fm);
    auto VM = image_basis(K, Vm);
    std::vector<FqVec> sum(L);
    sum.insert(sum.end(), FM.begin(), FM.end());
    if ((int)(L.size() + FM.size()) != n || span_dim(K, sum) != n)
        return "M != L + FM direct";
    /* ker F = sigma^-1(ker Fm) */
    auto kerF = map_vecs(fq_kernel(K, Fm), [&](FqVec const& v) { return fq_frob(K, v, -1); });
    auto kerV = map_vecs(fq_kernel(K, Vm), [&](FqVec const& v) { return fq_frob(K, v, 1); });
    if (!same_span(K, kerF, VL) || !same_span(K, kerF, VM))
        return "ker F != VL = VM";
    if ((int)kerF.size() != dL)
        return "dim ker F != dim L";
    if (!same_span(K, kerV, FM))
        return "ker V != FM";
    return "";
}

HondaSystem simple_honda(std::shared_ptr<Fq const> k, int dimL, Fq::elt param)
{
    if (param == 0 || param >= k->size())
        throw honda_error("parameter must be a nonzero element of k");
    HondaSystem H;
    H.k = k;
    H.Vm = fq_zero(3, 3);
    H.Fm = fq_zero(3, 3);
    if (dimL == 1) {
        H.Vm[1][0] = 1;
        H.Fm[1][2] = param;
        H.Fm[2][0] = 1;
        H.L = {unit_vec(3, 0)};
        H.kind = "E1";
    } else if (dimL == 2) {
        H.Vm[1][0] = 1;
        H.Vm[2][1] = param;
        H.Fm[2][0] = 1;
        H.L = {unit_vec(3, 0), unit_vec(3, 1)};
        H.kind = "E2";
    } else {
        throw honda_error("dim L must be 1 or 2");
    }
    return H;
}

/* H expressed in the basis given by the columns of B */
static HondaSystem change_basis(HondaSystem const& H, FqMat const& B)
{
    Fq const& k = *H.k;
    FqMat Bi = fq_inverse(k, B);
    HondaSystem R = H;
    R.Fm = fq_mul(k, Bi, fq_mul(k, H.Fm, fq_frob(k, B, 1)));
    R.Vm = fq_mul(k, Bi, fq_mul(k, H.Vm, fq_frob(k, B, -1)));
    R.L = map_vecs(H.L, [&](FqVec const& v) { return fq_apply(k, Bi, v); });
    return R;
}

static bool same_system(HondaSystem const& a, HondaSystem const& b)
{
    return a.Vm == b.Vm && a.Fm == b.Fm && same_span(*a.k, a.L, b.L);
}

SimpleClass simple_standard_form(HondaSystem const& H)
{
    Fq const& k = *H.k;
    if (H.dim() != 3)
        throw honda_error("simple system must have dimension 3");
    if (!H.valid())
        throw honda_error("not a Honda system: " + H.audit());
    SimpleClass c;
    c.dimL = (int)H.L.size();
    std::vector<FqVec> B;
    if (c.dimL == 1) {
        FqVec x1 = H.L[0], x2 = H.apply_V(x1), x3 = H.apply_F(x1);
        B = {x1, x2, x3};
        if (span_dim(k, B) != 3)
            throw honda_error("not biconnected of order p^3");
        FqVec fx3 = H.apply_F(x3);
        /* F x3 = lambda x2 */
        int i = 0;
        while (i < 3 && x2[i] == 0)
            i++;
        c.param = k.div(fx3[i], x2[i]);
    } else if (c.dimL == 2) {
        auto VL = map_vecs(H.L, [&](FqVec const& v) { return H.apply_V(v); });
        auto I = intersect(k, VL, H.L);
        if (I.size() != 1)
            throw honda_error("not biconnected of order p^3");
        FqVec y2 = I[0];
        /* y1 in L with V y1 = y2 */
        FqVec d = fq_solve(k, fq_from_columns(VL), y2);
        FqVec y1(3, 0);
        for (size_t j = 0; j < H.L.size(); j++)
            y1 = vadd(k, y1, vscale(k, k.frob(d[j], 1), H.L[j]));
        FqVec y3 = H.apply_F(y1);
        B = {y1, y2, y3};
        if (span_dim(k, B) != 3)
            throw honda_error("not biconnected of order p^3");
        FqVec vy2 = H.apply_V(y2);
        int i = 0;
        while (i < 3 && y3[i] == 0)
            i++;
        c.param = k.div(vy2[i], y3[i]);
    } else {
        throw honda_error("not biconnected of order p^3");
    }
    if (c.param == 0)
        throw honda_error("not biconnected of order p^3");
    HondaSystem S = change_basis(H, fq_from_columns(B));
    if (!same_system(S, simple_honda(H.k, c.dimL, c.param)))
        throw honda_error("standard basis does not give the standard matrices");
    return c;
}

HondaSystem cartier_dual(HondaSystem const& H)
{
    Fq const& k = *H.k;
    HondaSystem D;
    D.k = H.k;
    D.Vm = fq_frob(k, transpose(H.Fm), -1);
    D.Fm = fq_frob(k, transpose(H.Vm), 1);
    int n = H.dim();
    FqMat rows;
    for (auto const& v : H.L)
        rows.push_back(v);
    if (rows.empty())
        for (int i = 0; i < n; i++)
            D.L.push_back(unit_vec(n, i));
    else
        D.L = fq_kernel(k, rows);
    D.kind = H.kind + "*";
    return D;
}

bool simple_isomorphic(HondaSystem const& a, HondaSystem const& b)
{
    Fq const& k = *a.k;
    auto ca = simple_standard_form(a), cb = simple_standard_form(b);
    if (ca.dimL != cb.dimL)
        return false;
    for (Fq::elt r = 1; r < k.size(); r++)
        if (k.mul(k.div(k.frob(r, 3), r), cb.param) == ca.param)
            return true;
    return false;
}

/* ---- extension families ---- */

char const* family_name(Family f)
{
    switch (f) {
    case Family::s11: return "s11";
    case Family::s21: return "s21";
    case Family::s12: return "s12";
    case Family::s22: return "s22";
    }
    return "?";
}

std::optional<Family> parse_family(std::string const& s)
{
    for (Family f : {Family::s11, Family::s21, Family::s12, Family::s22})
        if (s == family_name(f))
            return f;
    return std::nullopt;
}

int family_arity(Family f)
{
    switch (f) {
    case Family::s11: return 3;
    case Family::s21: return 1;
    case Family::s12: return 4;
    case Family::s22: return 3;
    }
    return 0;
}
int family_sub(Family f) { return (f == Family::s11 || f == Family::s12) ? 1 : 2; }
int family_quot(Family f) { return (f == Family::s11 || f == Family::s21) ? 1 : 2; }

bool ExtParams::is_zero() const
{
    for (auto x : s)
        if (x)
            return false;
    return true;
}

std::string to_string(Fq const& k, ExtParams const& P)
{
    std::ostringstream os;
    os << family_name(P.family) << "(";
    bool e1 = family_sub(P.family) == 1 || family_quot(P.family) == 1;
    bool e2 = family_sub(P.family) == 2 || family_quot(P.family) == 2;
    if (P.family == Family::s12)
        os << "lambda'=" << k.to_string(P.lambda2) << ", lambda=" << k.to_string(P.lambda);
    else if (e1 && e2)
        os << "lambda=" << k.to_string(P.lambda) << ", lambda'=" << k.to_string(P.lambda2);
    else if (e1)
        os << "lambda=" << k.to_string(P.lambda);
    else
        os << "lambda'=" << k.to_string(P.lambda2);
    os << ";";
    for (size_t i = 0; i < P.s.size(); i++)
        os << (i ? ", " : " ") << k.to_string(P.s[i]);
    os << ")";
    return os.str();
}

static void check_params(Fq const& k, ExtParams const& P)
{
    if ((int)P.s.size() != family_arity(P.family))
        throw honda_error(std::string("wrong number of parameters for ") + family_name(P.family));
    bool e1 = family_sub(P.family) == 1 || family_quot(P.family) == 1;
    bool e2 = family_sub(P.family) == 2 || family_quot(P.family) == 2;
    if ((e1 && (P.lambda == 0 || P.lambda >= k.size())) || (e2 && (P.lambda2 == 0 || P.lambda2 >= k.size())))
        throw honda_error("simple parameters must be nonzero elements of k");
    for (auto x : P.s)
        if (x >= k.size())
            throw honda_error("parameter outside k");
}

HondaSystem build_extension(std::shared_ptr<Fq const> kp, ExtParams const& P)
{
    Fq const& k = *kp;
    check_params(k, P);
    HondaSystem H;
    H.k = kp;
    H.Vm = fq_zero(6, 6);
    H.Fm = fq_zero(6, 6);
    auto& V = H.Vm;
    auto& F = H.Fm;
    auto const& s = P.s;
    Fq::elt lam = P.lambda, lam2 = P.lambda2;
    /* common: e1 -> V e2, F e3; e4 -> V e5, F e6 */
    V[1][0] = 1;
    F[2][0] = 1;
    V[4][3] = 1;
    F[5][3] = 1;
    switch (P.family) {
    case Family::s11:
        F[1][2] = lam;
        V[1][4] = k.neg(k.frob(s[0], -1));
        F[0][5] = k.mul(lam, s[0]);
        F[1][5] = k.mul(lam, s[1]);
        F[2][5] = k.mul(lam, s[2]);
        F[4][5] = lam;
        H.L = {unit_vec(6, 0), unit_vec(6, 3)};
        break;
    case Family::s21:
        V[2][1] = lam2;
        V[1][4] = s[0];
        F[0][5] = k.neg(k.mul(lam, k.frob(s[0], 1)));
        F[4][5] = lam;
        H.L = {unit_vec(6, 0), unit_vec(6, 1), unit_vec(6, 3)};
        break;
    case Family::s12:
        F[1][2] = lam;
        V[2][3] = s[3];
        V[0][4] = k.mul(lam2, s[0]);
        V[1][4] = k.mul(lam2, s[1]);
        V[2][4] = k.mul(lam2, s[2]);
        V[5][4] = lam2;
        F[1][4] = k.neg(k.mul(lam, k.frob(s[3], 1)));
        F[1][5] = k.neg(k.mul(lam, k.frob(s[2], 1)));
        F[2][5] = k.neg(k.frob(s[0], 1));
        H.L = {unit_vec(6, 0), unit_vec(6, 3), unit_vec(6, 4)};
        break;
    case Family::s22:
        V[2][1] = lam2;
        V[0][4] = k.mul(lam2, s[0]);
        V[1][4] = k.mul(lam2, s[1]);
        V[2][4] = k.mul(lam2, s[2]);
        V[5][4] = lam2;
        F[2][5] = k.neg(k.frob(s[0], 1));
        H.L = {unit_vec(6, 0), unit_vec(6, 1), unit_vec(6, 3), unit_vec(6, 4)};
        break;
    }
    H.kind = family_name(P.family);
    std::string a = H.audit();
    if (!a.empty())
        throw honda_error("internal: built extension violates " + a);
    return H;
}

static FqVec sub_part(FqVec v)
{
    for (int i = 3; i < 6; i++)
        v[i] = 0;
    return v;
}

static Fq::elt block_param(Fq const& k, FqMat const& V, FqMat const& F, int off, int type)
{
    (void)k;
    return type == 1 ? F[off + 1][off + 2] : V[off + 2][off + 1];
}

static bool block_is_standard(HondaSystem const& H, int off, int type, Fq::elt param)
{
    HondaSystem S = simple_honda(H.k, type, param);
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++)
            if (H.Vm[off + i][off + j] != S.Vm[i][j] || H.Fm[off + i][off + j] != S.Fm[i][j])
                return false;
    return true;
}

/* some v in L with quotient coordinates q */
static FqVec lift_in_L(Fq const& k, HondaSystem const& H, FqVec const& q)
{
    FqMat A = fq_zero(3, (int)H.L.size());
    for (size_t j = 0; j < H.L.size(); j++)
        for (int i = 0; i < 3; i++)
            A[i][j] = H.L[j][3 + i];
    FqVec c;
    try {
        c = fq_solve(k, A, q);
    } catch (field_error const&) {
        throw honda_error("shape mismatch: quotient basis vector does not lift to L");
    }
    FqVec v(6, 0);
    for (size_t j = 0; j < H.L.size(); j++)
        v = vadd(k, v, vscale(k, c[j], H.L[j]));
    return v;
}

/* coefficients of v over the concatenated family */
static FqVec coords(Fq const& k, std::vector<FqVec> const& basis, FqVec const& v)
{
    try {
        return fq_solve(k, fq_from_columns(basis), v);
    } catch (field_error const&) {
        throw honda_error("shape mismatch: vector outside the expected span");
    }
}

ExtParams extract_params(HondaSystem const& H, Family f)
{
    Fq const& k = *H.k;
    if (H.dim() != 6)
        throw honda_error("shape mismatch: extension must have dimension 6");
    std::string a = H.audit();
    if (!a.empty())
        throw honda_error("not a Honda system: " + a);
    for (int i = 3; i < 6; i++)
        for (int j = 0; j < 3; j++)
            if (H.Vm[i][j] || H.Fm[i][j])
                throw honda_error("shape mismatch: span(e1,e2,e3) is not stable");
    int ts = family_sub(f), tq = family_quot(f);
    Fq::elt ps = block_param(k, H.Vm, H.Fm, 0, ts), pq = block_param(k, H.Vm, H.Fm, 3, tq);
    if (!ps || !pq || !block_is_standard(H, 0, ts, ps) || !block_is_standard(H, 3, tq, pq))
        throw honda_error("shape mismatch: diagonal blocks are not in standard form");
    ExtParams P;
    P.family = f;
    if (ts == tq && ps != pq)
        throw honda_error("shape mismatch: sub and quotient parameters differ");
    if (ts == 1)
        P.lambda = ps;
    else
        P.lambda2 = ps;
    if (tq == 1)
        P.lambda = pq;
    else
        P.lambda2 = pq;
    Fq::elt lam = P.lambda, lam2 = P.lambda2;
    FqVec e1 = unit_vec(6, 0), e2 = unit_vec(6, 1), e3 = unit_vec(6, 2);
    FqVec t4 = lift_in_L(k, H, {1, 0, 0});
    FqVec e4, e5, e6;
    switch (f) {
    case Family::s11: {
        e4 = t4;
        e5 = H.apply_V(e4);
        e6 = H.apply_F(e4);
        FqVec x = vsub(k, vscale(k, k.inv(lam), H.apply_F(e6)), e5);
        P.s = {x[0], x[1], x[2]};
        break;
    }
    case Family::s21: {
        FqVec t5 = H.apply_V(t4), t6 = H.apply_F(t4);
        FqVec x = vsub(k, vscale(k, k.inv(lam), H.apply_F(t6)), t5);
        Fq::elt s1 = x[0], s2 = x[1], s3 = x[2];
        P.s = {k.neg(k.frob(s1, -1))};
        e4 = vadd(k, t4, vadd(k, vscale(k, k.frob(s2, 1), e1), vscale(k, k.frob(k.div(s3, lam2), 1), e2)));
        e5 = H.apply_V(e4);
        e6 = H.apply_F(e4);
        break;
    }
    case Family::s12: {
        /* V t4 = l + t2 e2 + t3 e3 with l in L, over L + FM */
        std::vector<FqVec> basis(H.L);
        basis.push_back(e2);
        basis.push_back(e3);
        basis.push_back(H.apply_F(t4));
        FqVec c = coords(k, basis, H.apply_V(t4));
        size_t nl = H.L.size();
        Fq::elt t2 = c[nl], t3 = c[nl + 1];
        if (c[nl + 2])
            throw honda_error("shape mismatch: V e4 leaves L + span(e2, e3)");
        e4 = vsub(k, t4, vscale(k, k.frob(t2, 1), e1));
        e5 = vsub(k, H.apply_V(e4), vscale(k, t3, e3));
        e6 = H.apply_F(e4);
        FqVec x = vsub(k, vscale(k, k.inv(lam2), H.apply_V(e5)), e6);
        P.s = {x[0], x[1], x[2], t3};
        break;
    }
    case Family::s22: {
        std::vector<FqVec> basis(H.L);
        basis.push_back(e3);
        basis.push_back(H.apply_F(t4));
        FqVec c = coords(k, basis, H.apply_V(t4));
        size_t nl = H.L.size();
        Fq::elt a3 = c[nl];
        if (c[nl + 1])
            throw honda_error("shape mismatch: V e4 leaves L + span(e3)");
        Fq::elt u2 = k.neg(k.frob(k.div(a3, lam2), 1));
        e4 = vadd(k, t4, vscale(k, u2, e2));
        e5 = H.apply_V(e4);
        e6 = H.apply_F(e4);
        FqVec x = vsub(k, vscale(k, k.inv(lam2), H.apply_V(e5)), e6);
        P.s = {x[0], x[1], x[2]};
        break;
    }
    }
    /* rebuild and compare */
    FqMat B = fq_from_columns({e1, e2, e3, e4, e5, e6});
    if (fq_rank(k, B) != 6)
        throw honda_error("shape mismatch: reconstructed basis is singular");
    HondaSystem S = change_basis(H, B);
    HondaSystem ref = build_extension(H.k, P);
    if (!same_system(S, ref))
        throw honda_error(std::string("shape mismatch: system is not of type ") + family_name(f));
    return normalize(k, P);
}

/* image of the residual basis-change map, as a list of elements */
static std::vector<Fq::elt> orbit_image(Fq const& k, Family f)
{
    std::vector<Fq::elt> img;
    for (Fq::elt r = 0; r < k.size(); r++) {
        Fq::elt v = 0;
        if (f == Family::s11)
            v = k.sub(k.frob(r, 2), k.frob(r, -1));
        else if (f == Family::s22)
            v = k.sub(k.frob(r, -2), k.frob(r, -1));
        img.push_back(v);
    }
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

int normal_form_image_dim(Fq const& k, Family f)
{
    size_t n = orbit_image(k, f).size();
    int d = 0;
    while (n > 1) {
        n /= k.characteristic();
        d++;
    }
    return d;
}

ExtParams normalize(Fq const& k, ExtParams const& P)
{
    ExtParams R = P;
    if (family_sub(P.family) == 2 && family_quot(P.family) == 2)
        R.lambda = 1;
    if (family_sub(P.family) == 1 && family_quot(P.family) == 1)
        R.lambda2 = 1;
    int idx = -1;
    if (P.family == Family::s11)
        idx = 1;
    else if (P.family == Family::s22)
        idx = 2;
    if (idx < 0)
        return R;
    Fq::elt best = P.s[idx];
    for (auto i : orbit_image(k, P.family))
        best = std::min(best, k.add(P.s[idx], i));
    R.s[idx] = best;
    return R;
}

ExtParams baer_sum(Fq const& k, ExtParams const& a, ExtParams const& b)
{
    if (a.family != b.family)
        throw honda_error("Baer sum of different families");
    bool e1 = family_sub(a.family) == 1 || family_quot(a.family) == 1;
    bool e2 = family_sub(a.family) == 2 || family_quot(a.family) == 2;
    if ((e1 && a.lambda != b.lambda) || (e2 && a.lambda2 != b.lambda2))
        throw honda_error("Baer sum needs equal simple parameters");
    if (a.s.size() != b.s.size())
        throw honda_error("parameter arity mismatch");
    ExtParams r = a;
    for (size_t i = 0; i < r.s.size(); i++)
        r.s[i] = k.add(a.s[i], b.s[i]);
    return r;
}

HondaSystem baer_sum_system(HondaSystem const& a, HondaSystem const& b)
{
    Fq const& k = *a.k;
    if (a.dim() != 6 || b.dim() != 6)
        throw honda_error("Baer sum needs 6-dimensional extensions");
    for (int i = 0; i < 6; i++)
        for (int j = 0; j < 6; j++) {
            bool diag = (i < 3) == (j < 3);
            bool lower = i >= 3 && j < 3;
            if ((diag || lower) && (a.Vm[i][j] != b.Vm[i][j] || a.Fm[i][j] != b.Fm[i][j]))
                throw honda_error("Baer sum needs the same sub-object and quotient");
        }
    HondaSystem r = a;
    /* basis e1..e3 = (e_i, 0) ~ (0, e_i'), e4..e6 = (e_i, e_i') */
    for (int i = 0; i < 3; i++)
        for (int j = 3; j < 6; j++) {
            r.Vm[i][j] = k.add(a.Vm[i][j], b.Vm[i][j]);
            r.Fm[i][j] = k.add(a.Fm[i][j], b.Fm[i][j]);
        }
    /* L'': pairs (l, l') with equal quotient coordinates */
    size_t na = a.L.size(), nb = b.L.size();
    FqMat A = fq_zero(3, (int)(na + nb));
    for (size_t j = 0; j < na; j++)
        for (int i = 0; i < 3; i++)
            A[i][j] = a.L[j][3 + i];
    for (size_t j = 0; j < nb; j++)
        for (int i = 0; i < 3; i++)
            A[i][na + j] = k.neg(b.L[j][3 + i]);
    std::vector<FqVec> Lr;
    for (auto const& c : fq_kernel(k, A)) {
        FqVec x(6, 0), y(6, 0);
        for (size_t j = 0; j < na; j++)
            x = vadd(k, x, vscale(k, c[j], a.L[j]));
        for (size_t j = 0; j < nb; j++)
            y = vadd(k, y, vscale(k, c[na + j], b.L[j]));
        FqVec v = vadd(k, x, sub_part(y));
        if (!in_span(k, Lr, v))
            Lr.push_back(v);
    }
    r.L = Lr;
    r.kind = a.kind;
    std::string au = r.audit();
    if (!au.empty())
        throw honda_error("internal: Baer sum violates " + au);
    return r;
}

HondaSystem random_admissible_change(HondaSystem const& H, Family f, uint64_t seed)
{
    (void)f;
    Fq const& k = *H.k;
    std::mt19937_64 rng(seed);
    FqMat B = fq_identity(6);
    for (int i = 0; i < 3; i++)
        for (int j = 3; j < 6; j++)
            B[i][j] = (Fq::elt)(rng() % k.size());
    return change_basis(H, B);
}

}  // namespace favor7
