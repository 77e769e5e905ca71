#include "favor7/localcft.hpp"

#include "favor7/fq.hpp"

#include <mutex>
#include <unordered_set>

namespace favor7 {

static unsigned f8_sqrt(unsigned a)
{
    static Fq const k(2, 3);
    return k.pow(a, 4);
}

static LocalModel::Elt basis_unit(LocalModel const& M, int level, int j)
{
    return M.add(M.one(), M.mul_pi(M.teichmuller(1u << j), level));
}

F2Vec unit_class(LocalModel const& M, LocalModel::Elt const& u0)
{
    if (M.precision() < 6)
        throw precision_error("raise precision");
    LocalModel::Elt u = u0;
    if (M.residue(u) != 1)
        throw localcft_error("not a principal unit");
    F2Vec c = 0;
    for (int i = 1; i < 6; i++) {
        LocalModel::Elt d = M.sub(u, M.one());
        int v = M.val(d);
        if (v < i)
            throw precision_error("raise precision");
        if (v > i)
            continue;
        unsigned a = M.residue(M.div_pi(d, i));
        if (i & 1) {
            for (int j = 0; j < 3; j++)
                if (a >> j & 1) {
                    c ^= F2Vec(1) << (3 * (i - 1) / 2 + j);
                    u = M.mul(u, M.inverse(basis_unit(M, i, j)));
                }
        } else {
            LocalModel::Elt r = M.add(M.one(), M.mul_pi(M.teichmuller(f8_sqrt(a)), i / 2));
            u = M.mul(u, M.inverse(M.mul(r, r)));
        }
    }
    if (M.val(M.sub(u, M.one())) < 6)
        throw precision_error("raise precision");
    return c;
}

/* digits of x modulo pi^6: the coefficients of pi^0..pi^5 modulo 2 */
static uint32_t key6(LocalModel::Elt const& x)
{
    uint32_t k = 0;
    for (int j = 0; j < 6; j++)
        for (int t = 0; t < 3; t++)
            k |= (uint32_t)(x.a[j][t] & 1) << (3 * j + t);
    return k;
}

static int exhaustive_order(LocalModel const& M)
{
    /* U1/U6 has 2^15 elements 1 + sum [a_i] pi^i; count the squares */
    std::unordered_set<uint32_t> sq;
    for (uint32_t code = 0; code < (1u << 15); code++) {
        LocalModel::Elt x = M.one();
        for (int i = 1; i <= 5; i++)
            x = M.add(x, M.mul_pi(M.teichmuller(code >> (3 * (i - 1)) & 7), i));
        sq.insert(key6(M.mul(x, x)));
    }
    int l = 15;
    size_t n = sq.size();
    while (n > 1) {
        n >>= 1;
        l--;
    }
    return l;
}

LocalUnitClassGroup compute_unit_class_group(int precision)
{
    LocalModel M(precision);
    LocalUnitClassGroup G;
    G.precision = precision;
    G.unit_dim = 9;
    std::vector<F2Vec> sc, tc;
    for (int lv : {1, 3, 5})
        for (int j = 0; j < 3; j++) {
            auto b = basis_unit(M, lv, j);
            F2Vec self = unit_class(M, b);
            if (self != F2Vec(1) << (3 * (lv - 1) / 2 + j))
                throw localcft_error("basis units are not independent");
            sc.push_back(unit_class(M, M.sigma(b)));
            tc.push_back(unit_class(M, M.tau(b)));
        }
    G.unit_sigma = F2Matrix::from_columns(9, sc);
    G.unit_tau = F2Matrix::from_columns(9, tc);
    G.sigma = F2Matrix::block_diag(G.unit_sigma, F2Matrix::identity(1));
    G.tau = F2Matrix::block_diag(G.unit_tau, F2Matrix::identity(1));

    auto pi = [&](int i) { return M.mul_pi(M.one(), i); };
    auto one = M.one();
    G.g[0] = F2Vec(1) << 9;
    G.g[1] = unit_class(M, M.add(one, M.add(pi(1), pi(3))));
    G.g[2] = unit_class(M, M.add(one, pi(3)));
    G.g[3] = unit_class(M, M.add(one, pi(5)));
    G.square_1_plus_pi2 = unit_class(M, M.add(one, pi(2))) == 0;

    F2Space all9 = F2Space::span(9, {});
    for (int i = 0; i < 9; i++)
        all9.insert(F2Vec(1) << i);
    G.unit_corners = corner_spaces(all9, G.unit_sigma, G.unit_tau);
    F2Space all10(10);
    for (int i = 0; i < 10; i++)
        all10.insert(F2Vec(1) << i);
    G.corners = corner_spaces(all10, G.sigma, G.tau);

    F2Space total(10);
    int dsum = 0;
    for (int i = 0; i < 4; i++) {
        F2Space R = cyclic_submodule(10, G.g[i], G.sigma, G.tau);
        G.cyclic_dims[i] = R.dim();
        F2Matrix fix = G.tau + F2Matrix::identity(10);
        int fixed = 0;
        for (auto v : R.elements())
            if (v && fix.apply(v) == 0)
                fixed++;
        /* count of nonzero tau-fixed vectors is 2^d - 1 */
        int d = 0;
        while ((1 << d) - 1 < fixed)
            d++;
        G.cyclic_tau_fixed[i] = d;
        if (i > 0)
            dsum += R.dim();
        if (i > 0)
            total = total.sum(R);
    }
    G.direct_sum = total.dim() == 9 && dsum == 9;
    G.exhaustive_log2_order = exhaustive_order(M);
    return G;
}

LocalUnitClassGroup const& unit_class_group()
{
    static std::once_flag once;
    static LocalUnitClassGroup G;
    std::call_once(once, [] {
        int prec = 14;
        for (;;) {
            try {
                G = compute_unit_class_group(prec);
                return;
            } catch (precision_error const&) {
                if (prec > 200)
                    throw;
                prec *= 2;
            }
        }
    });
    return G;
}

/* ---- characters ---- */

HondaCharacterShape HondaCharacterShape::zero()
{
    HondaCharacterShape s;
    for (auto& m : s.value)
        m = F2Matrix(6, 6);
    return s;
}

F2Matrix lower_left_t2()
{
    F2Matrix t = three_block();
    F2Matrix z(3, 3);
    return F2Matrix::blocks(z, z, t * t, z);
}

static F2Matrix cubic(F2Matrix const& s, bool second)
{
    F2Matrix I = F2Matrix::identity(s.rows());
    F2Matrix s2 = s * s, s3 = s2 * s;
    return second ? s3 + s2 + I : s3 + s + I;
}

bool honda_character_constraint_check(HondaCharacterShape const& shape, std::string* why)
{
    F2Matrix S = delta_sigma36(), T = delta_tau36();
    F2Matrix I = F2Matrix::identity(36);
    for (int i = 0; i < 4; i++) {
        if (shape.value[i].rows() != 6 || shape.value[i].cols() != 6)
            throw localcft_error("character values must be 6x6");
        F2Vec v = shape.value[i].flatten();
        bool ok = (T + I).apply(v) == 0;
        if (i == 0)
            ok = ok && (S + I).apply(v) == 0;
        else
            ok = ok && cubic(S, i >= 2).apply(v) == 0;
        if (!ok)
            throw localcft_error("character value on g" + std::to_string(i) + " is not compatible with the action");
    }
    if (!shape.value[2].block(0, 3, 3, 3).is_zero()) {
        if (why)
            *why = "chi(g2) has nonzero upper-right block";
        return false;
    }
    if (!shape.value[3].is_zero() && shape.value[3] != lower_left_t2()) {
        if (why)
            *why = "chi(g3) is neither 0 nor [0 0; t^2 0]";
        return false;
    }
    return true;
}

/* ---- stricter bounds ---- */

std::vector<Cond4Entry> cond4_analysis()
{
    F2Matrix S = delta_sigma36(), T = delta_tau36();
    F2Vec x = lower_left_t2().flatten();
    std::vector<Cond4Entry> out;
    for (int a : {6, 14, 20, 29, 35}) {
        Cond4Entry e;
        e.a = a;
        auto cd = corner_spaces(gamma_module(a), S, T);
        if (!cd.C2.contains(gamma_generator(a).flatten()))
            throw localcft_error("corner data inconsistent: gamma_" + std::to_string(a) + " not in C2");
        e.c2_dim = cd.C2.dim();
        e.x_in_c2 = cd.C2.contains(x);
        e.upper_right_nonzero = true;
        for (auto v : cd.C2.elements())
            if (v && F2Matrix::unflatten(6, v).block(0, 3, 3, 3).is_zero())
                e.upper_right_nonzero = false;
        if (e.x_in_c2) {
            e.bound = 6;
            e.reason = "[0 0; t^2 0] lies in C2: chi(g3) unconstrained, general bound";
        } else if (e.upper_right_nonzero) {
            e.bound = 2;
            e.reason = "chi(g3) = 0 and every nonzero C2 element has nonzero upper-right block: chi(g2) = 0";
        } else {
            e.bound = 4;
            e.reason = "[0 0; t^2 0] not in C2: chi(g3) = 0";
        }
        out.push_back(e);
    }
    return out;
}

std::map<int, int> cond4_bounds()
{
    std::map<int, int> r;
    for (auto const& e : cond4_analysis())
        r[e.a] = e.bound;
    return r;
}

}  // namespace favor7
