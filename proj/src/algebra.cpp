#include "favor7/algebra.hpp"

namespace favor7 {

F2Matrix seven_block(int which)
{
    F2Matrix s1{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}};
    if (which == 1)
        return s1;
    if (which == 2)
        return s1.pow(3);
    throw f2_error("seven_block: which must be 1 or 2");
}

F2Matrix three_block() { return F2Matrix{{1, 0, 0}, {0, 0, 1}, {0, 1, 1}}; }

F2Matrix sigma6() { return F2Matrix::block_diag(seven_block(1), seven_block(2)); }

F2Matrix tau6() { return F2Matrix::block_diag(three_block(), three_block()); }

F2Matrix transvection6()
{
    /* I + u v^T */
    int u[6] = {0, 1, 1, 0, 1, 1}, v[6] = {0, 0, 1, 0, 1, 0};
    F2Matrix r = F2Matrix::identity(6);
    for (int i = 0; i < 6; i++)
        for (int j = 0; j < 6; j++)
            if (u[i] & v[j])
                r.set(i, j, !r.get(i, j));
    return r;
}

Perm seven_cycle() { return Perm::parse_cycles(7, "(1234567)"); }
Perm transposition12() { return Perm::parse_cycles(7, "(12)"); }

F2Matrix hyperplane_action(Perm const& g)
{
    if (g.degree() != 7)
        throw perm_error("hyperplane_action needs a permutation of 7 points");
    /* column k: image of e_k + e_7 = e_g(k) + e_g(7), first six coordinates */
    std::vector<F2Vec> cols;
    for (int k = 0; k < 6; k++) {
        F2Vec w = (1ull << g(k)) ^ (1ull << g(6));
        cols.push_back(w & 63);
    }
    return F2Matrix::from_columns(6, cols);
}

static F2Matrix solve_basis_change()
{
    /* P with H(c) P = P s and H(t) P = P r, unknowns P_ij at bit 6i+j */
    F2Matrix Hs = hyperplane_action(seven_cycle()), Hr = hyperplane_action(transposition12());
    F2Matrix S = sigma6(), R = transvection6();
    std::vector<F2Vec> rows(72, 0);
    for (int u = 0; u < 36; u++) {
        F2Matrix E = F2Matrix::unflatten(6, 1ull << u);
        F2Vec a = (Hs * E + E * S).flatten();
        F2Vec b = (Hr * E + E * R).flatten();
        for (int k = 0; k < 36; k++) {
            if (a >> k & 1)
                rows[k] |= 1ull << u;
            if (b >> k & 1)
                rows[36 + k] |= 1ull << u;
        }
    }
    auto ker = F2Matrix::from_rows(36, rows).kernel();
    F2Matrix found;
    int invertible = 0;
    for (size_t m = 1; m < (1ull << ker.size()); m++) {
        F2Vec v = 0;
        for (size_t k = 0; k < ker.size(); k++)
            if (m >> k & 1)
                v ^= ker[k];
        F2Matrix P = F2Matrix::unflatten(6, v);
        if (P.rank() == 6) {
            found = P;
            invertible++;
        }
    }
    if (invertible != 1)
        throw f2_error("basis change for the S_7 representation is not unique");
    return found;
}

F2Matrix hyperplane_basis_change()
{
    static F2Matrix const P = solve_basis_change();
    return P;
}

F2Matrix iota(Perm const& g)
{
    static F2Matrix const P = hyperplane_basis_change();
    static F2Matrix const Pi = P.inverse();
    return Pi * hyperplane_action(g) * P;
}

F2Matrix invariant_symplectic_form(std::vector<F2Matrix> const& gens)
{
    if (gens.empty())
        throw f2_error("no generators");
    int n = gens[0].rows();
    if (n > 8)
        throw f2_error("dimension too large");
    for (F2Vec v = 1; v < (1ull << n); v++)
        if (generate_subspace(n, {v}, gens).dim() < n)
            throw f2_error("representation is reducible");
    std::vector<std::pair<int, int>> unk;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            unk.emplace_back(i, j);
    std::vector<F2Vec> rows;
    for (auto const& g : gens) {
        F2Matrix gt = g.transpose();
        std::vector<F2Vec> part(n * n, 0);
        for (size_t u = 0; u < unk.size(); u++) {
            F2Matrix B(n, n);
            B.set(unk[u].first, unk[u].second, 1);
            B.set(unk[u].second, unk[u].first, 1);
            F2Vec d = (gt * B * g + B).flatten();
            for (int k = 0; k < n * n; k++)
                if (d >> k & 1)
                    part[k] |= 1ull << u;
        }
        rows.insert(rows.end(), part.begin(), part.end());
    }
    auto ker = F2Matrix::from_rows((int)unk.size(), rows).kernel();
    if (ker.size() != 1)
        throw f2_error(ker.empty() ? "no invariant alternating form" : "invariant alternating form is not unique");
    F2Matrix B(n, n);
    for (size_t u = 0; u < unk.size(); u++)
        if (ker[0] >> u & 1) {
            B.set(unk[u].first, unk[u].second, 1);
            B.set(unk[u].second, unk[u].first, 1);
        }
    return B;
}

F2Matrix two_sided_action(F2Matrix const& a, F2Matrix const& b)
{
    int n = a.rows();
    std::vector<F2Vec> cols;
    for (int u = 0; u < n * n; u++)
        cols.push_back((a * F2Matrix::unflatten(n, 1ull << u) * b).flatten());
    return F2Matrix::from_columns(n * n, cols);
}

F2Matrix conjugation_action(F2Matrix const& g) { return two_sided_action(g, g.inverse()); }

static F2Matrix poly_in(F2Matrix const& s, std::initializer_list<int> exps)
{
    F2Matrix r(s.rows(), s.cols());
    for (int e : exps)
        r = r + s.pow(e);
    return r;
}

CornerData corner_spaces(F2Space const& M, F2Matrix const& sigma, F2Matrix const& tau)
{
    int n = M.ambient();
    if (sigma.rows() != n || tau.rows() != n)
        throw f2_error("action matrices do not match the ambient dimension");
    F2Matrix s2 = sigma * sigma;
    for (auto v : M.basis()) {
        if (!M.contains(sigma.apply(v)) || !M.contains(tau.apply(v)))
            throw f2_error("subspace is not stable under the acting generators");
        if (sigma.pow(7).apply(v) != v || tau.pow(3).apply(v) != v ||
            tau.apply(sigma.apply(v)) != s2.apply(tau.apply(v)))
            throw f2_error("acting generators fail the relations of the group of order 21");
    }
    F2Matrix I = F2Matrix::identity(n);
    F2Matrix c1 = poly_in(sigma, {3, 1, 0}), c2 = poly_in(sigma, {3, 2, 0});
    auto solve = [&](std::vector<F2Matrix> const& ops) {
        /* elements of M killed by every op */
        std::vector<F2Vec> const& B = M.basis();
        std::vector<F2Vec> rows;
        for (auto const& op : ops) {
            std::vector<F2Vec> part(n, 0);
            for (size_t k = 0; k < B.size(); k++) {
                F2Vec w = op.apply(B[k]);
                for (int i = 0; i < n; i++)
                    if (w >> i & 1)
                        part[i] |= 1ull << k;
            }
            rows.insert(rows.end(), part.begin(), part.end());
        }
        F2Space out(n);
        if (B.empty())
            return out;
        for (auto x : F2Matrix::from_rows((int)B.size(), rows).kernel()) {
            F2Vec v = 0;
            for (size_t k = 0; k < B.size(); k++)
                if (x >> k & 1)
                    v ^= B[k];
            out.insert(v);
        }
        return out;
    };
    CornerData d;
    d.C1 = solve({tau + I, c1});
    d.C2 = solve({tau + I, c2});
    d.fixed = solve({sigma + I});
    F2Space triv = solve({sigma + I, tau + I});
    d.n1 = d.C1.dim();
    d.n2 = d.C2.dim();
    d.n_triv = triv.dim();
    if ((d.fixed.dim() - d.n_triv) % 2)
        throw f2_error("internal: odd-dimensional complement in the sigma-fixed part");
    d.n_D = (d.fixed.dim() - d.n_triv) / 2;
    if (M.dim() != d.n_triv + 2 * d.n_D + 3 * (d.n1 + d.n2))
        throw f2_error("corner decomposition does not account for the module dimension");
    return d;
}

F2Space cyclic_submodule(int ambient, F2Vec v, F2Matrix const& sigma, F2Matrix const& tau)
{
    return generate_subspace(ambient, {v}, {sigma, tau});
}

HomModule hom_module(int i, int j)
{
    F2Matrix si = seven_block(i), sj = seven_block(j), t = three_block();
    HomModule h;
    h.space = F2Space(9);
    for (int k = 0; k < 9; k++)
        h.space.insert(1ull << k);
    h.sigma = two_sided_action(sj, si.inverse());
    h.tau = conjugation_action(t);
    return h;
}

F2Matrix gamma_generator(int a)
{
    F2Matrix t = three_block(), t2 = t * t, I = F2Matrix::identity(3), Z(3, 3);
    F2Matrix g6 = F2Matrix::blocks(t, t2 + I, t2, t2);
    F2Matrix g14 = F2Matrix::blocks(Z, t2 + I, Z, Z);
    F2Matrix g29 = F2Matrix::blocks(Z, I, t2, Z);
    switch (a) {
    case 6:
        return g6;
    case 14:
        return g14;
    case 20:
        return g6 + g14;
    case 29:
        return g29;
    case 35:
        return g6 + g29;
    case 0:
        return F2Matrix(6, 6);
    }
    throw f2_error("gamma_generator: a must be one of 0, 6, 14, 20, 29, 35");
}

F2Space gamma_module(int a)
{
    static F2Matrix const cs = conjugation_action(iota(seven_cycle()));
    static F2Matrix const cr = conjugation_action(iota(transposition12()));
    return generate_subspace(36, {gamma_generator(a).flatten()}, {cs, cr});
}

F2Matrix delta_sigma36()
{
    static F2Matrix const m = conjugation_action(sigma6());
    return m;
}

F2Matrix delta_tau36()
{
    static F2Matrix const m = conjugation_action(tau6());
    return m;
}

std::vector<Perm> iota_on_vectors()
{
    std::vector<Perm> out;
    for (Perm const& g : {seven_cycle(), transposition12()}) {
        F2Matrix m = iota(g);
        std::vector<int> img(63);
        for (int v = 1; v < 64; v++)
            img[v - 1] = (int)m.apply(v) - 1;
        out.emplace_back(img);
    }
    return out;
}

}  // namespace favor7
