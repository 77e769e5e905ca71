#include "favor7/parabolic.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace favor7 {

F2Matrix radical_element(F2Matrix const& m)
{
    return F2Matrix::blocks(F2Matrix::identity(6), m, F2Matrix(6, 6), F2Matrix::identity(6));
}

F2Matrix levi_element(F2Matrix const& x) { return F2Matrix::block_diag(x, x); }

ParabolicGroup make_parabolic(int a)
{
    ParabolicGroup G;
    G.a = a;
    G.gamma = gamma_module(a);
    G.gens = {levi_element(iota(seven_cycle())), levi_element(iota(transposition12())),
              radical_element(gamma_generator(a))};
    return G;
}

/* C = centralizer of (12) in S_7 */
static std::vector<Perm> centralizer_gens()
{
    return {Perm::parse_cycles(7, "(12)"), Perm::parse_cycles(7, "(34)"), Perm::parse_cycles(7, "(34567)")};
}

struct InvolutionData {
    F2Space gamma, centralizing, boundary, closure;
    F2Space rank_two; /* m in centralizing with rank(c(m) d(r) - 1) = 2 */
    F2Matrix conj_r;
    std::vector<F2Matrix> conj_c; /* conjugation by iota(C) generators */
};

static InvolutionData involution_data(int a)
{
    InvolutionData D;
    D.gamma = gamma_module(a);
    F2Matrix r = iota(transposition12());
    D.conj_r = conjugation_action(r);
    F2Matrix I = F2Matrix::identity(36);
    D.centralizing = F2Space(36);
    D.boundary = F2Space(36);
    /* Gamma_a cap Cent(r), and (1 + r) Gamma_a */
    std::vector<F2Vec> const& B = D.gamma.basis();
    if (!B.empty()) {
        std::vector<F2Vec> rows(36, 0);
        for (size_t k = 0; k < B.size(); k++) {
            F2Vec w = (D.conj_r + I).apply(B[k]);
            D.boundary.insert(w);
            for (int i = 0; i < 36; i++)
                if (w >> i & 1)
                    rows[i] |= 1ull << k;
        }
        for (auto x : F2Matrix::from_rows((int)B.size(), rows).kernel()) {
            F2Vec v = 0;
            for (size_t k = 0; k < B.size(); k++)
                if (x >> k & 1)
                    v ^= B[k];
            D.centralizing.insert(v);
        }
    }
    /* the S_7-module generated by (1 + r) Gamma_a: the radical part of the
     * normal closure of d(r) */
    D.closure = generate_subspace(36, D.boundary.basis(),
                                  {conjugation_action(iota(seven_cycle())), D.conj_r});
    for (auto const& c : centralizer_gens())
        D.conj_c.push_back(conjugation_action(iota(c)));
    /* rank(c(m) d(r) - 1) = 2 iff m r maps ker(r + 1) into im(r + 1) */
    F2Matrix A = r + F2Matrix::identity(6);
    auto kerA = A.kernel();
    F2Space imA = F2Space::span(6, {A.column(0), A.column(1), A.column(2), A.column(3), A.column(4), A.column(5)});
    D.rank_two = F2Space(36);
    std::vector<F2Vec> const& Z = D.centralizing.basis();
    if (!Z.empty()) {
        std::vector<F2Vec> rows(6 * kerA.size(), 0);
        for (size_t k = 0; k < Z.size(); k++) {
            F2Matrix mr = F2Matrix::unflatten(6, Z[k]) * r;
            for (size_t v = 0; v < kerA.size(); v++) {
                F2Vec w = imA.reduce(mr.apply(kerA[v]));
                for (int i = 0; i < 6; i++)
                    if (w >> i & 1)
                        rows[6 * v + i] |= 1ull << k;
            }
        }
        for (auto x : F2Matrix::from_rows((int)Z.size(), rows).kernel()) {
            F2Vec v = 0;
            for (size_t k = 0; k < Z.size(); k++)
                if (x >> k & 1)
                    v ^= Z[k];
            D.rank_two.insert(v);
        }
    }
    return D;
}

static int involution_rank(F2Vec m)
{
    F2Matrix r = iota(transposition12());
    F2Matrix h = radical_element(F2Matrix::unflatten(6, m)) * levi_element(r);
    return (h + F2Matrix::identity(12)).rank();
}

VeryGoodReport very_good_involutions(int a)
{
    VeryGoodReport rep;
    rep.a = a;
    rep.exhaustive = true;
    InvolutionData D = involution_data(a);
    rep.d_r_rank = involution_rank(0);
    rep.d_r_good = D.closure == D.gamma;
    if (!rep.d_r_good)
        return rep;
    /* candidates; goodness of c(m) d(r) does not depend on m */
    std::vector<F2Vec> X;
    for (F2Vec m : D.centralizing.elements())
        if (involution_rank(m) == 2)
            X.push_back(m);
    rep.candidates = (long)X.size();
    std::unordered_map<F2Vec, long> cls;
    for (F2Vec m : X)
        cls[m] = -1;
    /* orbits under m -> m + (1 + r) n and m -> y m y^-1, y in iota(C) */
    long nc = 0;
    for (F2Vec m0 : X) {
        if (cls[m0] >= 0)
            continue;
        std::vector<F2Vec> q{m0};
        cls[m0] = nc;
        for (size_t k = 0; k < q.size(); k++) {
            std::vector<F2Vec> nb;
            for (F2Vec b : D.boundary.basis())
                nb.push_back(q[k] ^ b);
            for (auto const& c : D.conj_c)
                nb.push_back(c.apply(q[k]));
            for (F2Vec y : nb) {
                auto it = cls.find(y);
                if (it == cls.end())
                    throw f2_error("internal: candidate set not closed under conjugation");
                if (it->second < 0) {
                    it->second = nc;
                    q.push_back(y);
                }
            }
        }
        nc++;
    }
    rep.classes = nc;
    long zero_class = cls.count(0) ? cls[0] : -1;
    for (F2Vec m : X)
        if (cls[m] != zero_class)
            rep.outside_class++;
    return rep;
}

VeryGoodReport very_good_spot_check(int a, int samples, uint64_t seed)
{
    VeryGoodReport rep;
    rep.a = a;
    InvolutionData D = involution_data(a);
    rep.d_r_rank = involution_rank(0);
    rep.d_r_good = D.closure == D.gamma;
    std::mt19937_64 rng(seed);
    auto const& B = D.rank_two.basis();
    for (int s = 0; s < samples; s++) {
        F2Vec m = 0;
        for (auto b : B)
            if (rng() & 1)
                m ^= b;
        if (involution_rank(m) != 2)
            throw f2_error("internal: sampled involution has the wrong rank");
        rep.candidates++;
        /* the class of d(r) meets c(Gamma_a) d(r) in c((1 + r) Gamma_a) d(r) */
        if (!D.boundary.contains(m))
            rep.outside_class++;
    }
    return rep;
}

/* ------------------------------------------------------------------ */

std::vector<Perm> coset_action_42(int a)
{
    F2Space gamma = gamma_module(a);
    std::vector<Perm> cgens = centralizer_gens();
    /* C-invariant functionals on Gamma_a, in coordinates of its basis */
    int k = gamma.dim();
    if (k == 0)
        throw f2_error("no 42-point action for a = 0");
    std::vector<F2Vec> rows;
    for (auto const& c : cgens) {
        F2Matrix cm = conjugation_action(iota(c));
        for (auto b : gamma.basis())
            rows.push_back(gamma.coordinates(cm.apply(b) ^ b));
    }
    auto funcs = F2Matrix::from_rows(k, rows).kernel();

    /* pairs {i<j} and transversal elements pi_j with pi_j{0,1} = {i,j} */
    std::vector<std::pair<int, int>> pairs;
    std::vector<Perm> trans;
    int pair_index[7][7];
    for (int i = 0; i < 7; i++)
        for (int j = i + 1; j < 7; j++) {
            pair_index[i][j] = pair_index[j][i] = (int)pairs.size();
            pairs.emplace_back(i, j);
            std::vector<int> img{i, j};
            for (int x = 0; x < 7; x++)
                if (x != i && x != j)
                    img.push_back(x);
            trans.emplace_back(img);
        }
    std::vector<F2Matrix> iota_tr, iota_tr_inv;
    for (auto const& p : trans) {
        iota_tr.push_back(iota(p));
        iota_tr_inv.push_back(iota(p.inverse()));
    }
    struct Gen {
        Perm x;
        F2Matrix m;
    };
    std::vector<Gen> gens = {{seven_cycle(), F2Matrix(6, 6)},
                             {transposition12(), F2Matrix(6, 6)},
                             {Perm(7), gamma_generator(a)}};
    Int target = Int(5040) << (unsigned)a;

    auto sign_s5 = [](Perm const& y) {
        /* sign of the restriction to {2..6} */
        std::vector<int> img;
        for (int x = 2; x < 7; x++)
            img.push_back(y(x) - 2);
        return Perm(img).sign() < 0 ? 1 : 0;
    };
    auto sign_s2 = [](Perm const& y) { return y(0) == 1 ? 1 : 0; };

    for (size_t f = 1; f < (1ull << funcs.size()); f++) {
        F2Vec lam = 0;
        for (size_t u = 0; u < funcs.size(); u++)
            if (f >> u & 1)
                lam ^= funcs[u];
        for (int chi = 0; chi < 4; chi++) {
            auto phi = [&](F2Vec m, Perm const& y) {
                int v = __builtin_parityll(gamma.coordinates(m) & lam);
                if (chi & 1)
                    v ^= sign_s2(y);
                if (chi & 2)
                    v ^= sign_s5(y);
                return v;
            };
            std::vector<Perm> out;
            for (auto const& g : gens) {
                std::vector<int> img(42);
                for (int j = 0; j < 21; j++) {
                    int i1 = g.x(pairs[j].first), i2 = g.x(pairs[j].second);
                    int jp = pair_index[i1][i2];
                    Perm y = trans[jp].inverse() * g.x * trans[j];
                    F2Vec mp = (iota_tr_inv[jp] * g.m * iota_tr[jp]).flatten();
                    int e = phi(mp, y);
                    for (int eps = 0; eps < 2; eps++)
                        img[2 * j + eps] = 2 * jp + (eps ^ e);
                }
                out.emplace_back(img);
            }
            if (out[1].fixed_points() != 22)
                continue;
            PermGroup G(42, out);
            if (G.order() == target && G.is_transitive())
                return out;
        }
    }
    throw f2_error("no faithful transitive 42-point action found");
}

}  // namespace favor7
