#include "favor7/fq.hpp"

#include <sstream>

namespace favor7 {

Fq::elt Fq::polymul_raw(elt a, elt b) const
{
    /* digits as polynomials, product reduced by mod_ */
    std::vector<unsigned> x(n_), y(n_), r(2 * n_, 0);
    for (unsigned i = 0; i < n_; i++) {
        x[i] = a % p_;
        a /= p_;
        y[i] = b % p_;
        b /= p_;
    }
    for (unsigned i = 0; i < n_; i++)
        for (unsigned j = 0; j < n_; j++)
            r[i + j] = (r[i + j] + x[i] * y[j]) % p_;
    for (int d = 2 * (int)n_ - 2; d >= (int)n_; d--) {
        unsigned c = r[d];
        if (!c)
            continue;
        r[d] = 0;
        for (unsigned i = 0; i < n_; i++)
            r[d - n_ + i] = (r[d - n_ + i] + (p_ - c) * mod_[i]) % p_;
    }
    elt out = 0;
    for (int i = (int)n_ - 1; i >= 0; i--)
        out = out * p_ + r[i];
    return out;
}

Fq::Fq(unsigned p, unsigned n) : p_(p), n_(n)
{
    if (p < 2 || n < 1)
        throw field_error("bad field parameters");
    for (unsigned d = 2; d * d <= p; d++)
        if (p % d == 0)
            throw field_error("characteristic must be prime");
    q_ = 1;
    for (unsigned i = 0; i < n; i++) {
        q_ *= p;
        if (q_ > 4096)
            throw field_error("field too large");
    }
    add_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    for (elt a = 0; a < q_; a++) {
        for (elt b = 0; b < q_; b++) {
            elt x = a, y = b, r = 0, pw = 1;
            for (unsigned i = 0; i < n_; i++) {
                r += ((x % p_ + y % p_) % p_) * pw;
                x /= p_;
                y /= p_;
                pw *= p_;
            }
            add_[a * q_ + b] = r;
        }
        for (elt b = 0; b < q_; b++)
            if (add_[a * q_ + b] == 0)
                neg_[a] = b;
    }
    /* modulus: monic, coefficients mod_[0..n-1] of the lower terms */
    auto try_modulus = [&](std::vector<unsigned> const& m) -> bool {
        mod_ = m;
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        elt g = n_ == 1 ? 0 : p_;
        if (n_ == 1) {
            for (g = 2 % p_; g < p_; g++) {
                elt x = 1;
                unsigned ord = 0;
                do {
                    x = (x * g) % p_;
                    ord++;
                } while (x != 1);
                if (ord == p_ - 1)
                    break;
            }
            if (p_ == 2)
                g = 1;
        }
        elt x = 1;
        for (unsigned k = 0; k < q_ - 1; k++) {
            if (k && x == 1)
                return false;
            exp_[k] = x;
            log_[x] = k;
            x = n_ == 1 ? (x * g) % p_ : polymul_raw(x, g);
        }
        if (x != 1)
            return false;
        prim_ = g;
        return true;
    };
    if (n_ == 1) {
        try_modulus(std::vector<unsigned>{0});
        return;
    }
    if (p_ == 2 && n_ == 3 && try_modulus(std::vector<unsigned>{1, 1, 0}))
        return;
    for (elt code = 0; code < q_; code++) {
        std::vector<unsigned> m(n_);
        elt c = code;
        for (unsigned i = 0; i < n_; i++) {
            m[i] = c % p_;
            c /= p_;
        }
        if (m[0] == 0)
            continue;
        if (try_modulus(m))
            return;
    }
    throw field_error("no primitive modulus found");
}

Fq::elt Fq::from_int(long v) const
{
    long r = v % (long)p_;
    if (r < 0)
        r += p_;
    return (elt)r;
}

Fq::elt Fq::inv(elt a) const
{
    if (!a)
        throw field_error("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Fq::elt Fq::pow(elt a, long e) const
{
    if (!a) {
        if (e < 0)
            throw field_error("inverse of zero");
        return e == 0 ? 1 : 0;
    }
    long m = (long)q_ - 1;
    long s = ((long)log_[a] * (e % m)) % m;
    if (s < 0)
        s += m;
    return exp_[s];
}

Fq::elt Fq::frob(elt a, int k) const
{
    int kk = ((k % (int)n_) + (int)n_) % (int)n_;
    elt r = a;
    for (int i = 0; i < kk; i++)
        r = pow(r, p_);
    return r;
}

unsigned Fq::log(elt a) const
{
    if (!a)
        throw field_error("log of zero");
    return log_[a];
}

std::string Fq::to_string(elt a) const
{
    std::ostringstream os;
    os << a;
    return os.str();
}

/* ------------------------------------------------------------------ */

FqMat fq_zero(int r, int c) { return FqMat(r, FqVec(c, 0)); }

FqMat fq_identity(int n)
{
    FqMat m = fq_zero(n, n);
    for (int i = 0; i < n; i++)
        m[i][i] = 1;
    return m;
}

FqMat fq_mul(Fq const& F, FqMat const& a, FqMat const& b)
{
    int r = (int)a.size(), k = r ? (int)a[0].size() : 0, c = b.empty() ? 0 : (int)b[0].size();
    if ((int)b.size() != k)
        throw field_error("matrix shape mismatch");
    FqMat m = fq_zero(r, c);
    for (int i = 0; i < r; i++)
        for (int l = 0; l < k; l++) {
            if (!a[i][l])
                continue;
            for (int j = 0; j < c; j++)
                m[i][j] = F.add(m[i][j], F.mul(a[i][l], b[l][j]));
        }
    return m;
}

FqMat fq_add(Fq const& F, FqMat const& a, FqMat const& b)
{
    FqMat m = a;
    if (a.size() != b.size())
        throw field_error("matrix shape mismatch");
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < a[i].size(); j++)
            m[i][j] = F.add(a[i][j], b[i][j]);
    return m;
}

FqVec fq_apply(Fq const& F, FqMat const& a, FqVec const& v)
{
    FqVec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < v.size(); j++)
            r[i] = F.add(r[i], F.mul(a[i][j], v[j]));
    return r;
}

FqMat fq_frob(Fq const& F, FqMat const& a, int k)
{
    FqMat m = a;
    for (auto& row : m)
        for (auto& x : row)
            x = F.frob(x, k);
    return m;
}

FqVec fq_frob(Fq const& F, FqVec const& v, int k)
{
    FqVec r = v;
    for (auto& x : r)
        x = F.frob(x, k);
    return r;
}

/* reduced row echelon form in place; returns pivot columns */
static std::vector<int> rref(Fq const& F, FqMat& a)
{
    std::vector<int> piv;
    int rows = (int)a.size(), cols = rows ? (int)a[0].size() : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; c++) {
        int s = r;
        while (s < rows && !a[s][c])
            s++;
        if (s == rows)
            continue;
        std::swap(a[r], a[s]);
        Fq::elt iv = F.inv(a[r][c]);
        for (auto& x : a[r])
            x = F.mul(x, iv);
        for (int i = 0; i < rows; i++) {
            if (i == r || !a[i][c])
                continue;
            Fq::elt f = F.neg(a[i][c]);
            for (int j = 0; j < cols; j++)
                a[i][j] = F.add(a[i][j], F.mul(f, a[r][j]));
        }
        piv.push_back(c);
        r++;
    }
    return piv;
}

int fq_rank(Fq const& F, FqMat a) { return (int)rref(F, a).size(); }

std::vector<FqVec> fq_kernel(Fq const& F, FqMat const& a0)
{
    FqMat a = a0;
    int cols = a.empty() ? 0 : (int)a[0].size();
    auto piv = rref(F, a);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv)
        is_piv[c] = true;
    std::vector<FqVec> ker;
    for (int f = 0; f < cols; f++) {
        if (is_piv[f])
            continue;
        FqVec v(cols, 0);
        v[f] = 1;
        for (size_t r = 0; r < piv.size(); r++)
            v[piv[r]] = F.neg(a[r][f]);
        ker.push_back(v);
    }
    return ker;
}

FqVec fq_solve(Fq const& F, FqMat const& a, FqVec const& b)
{
    int rows = (int)a.size(), cols = rows ? (int)a[0].size() : 0;
    FqMat aug = a;
    for (int i = 0; i < rows; i++)
        aug[i].push_back(b[i]);
    auto piv = rref(F, aug);
    FqVec x(cols, 0);
    for (size_t r = 0; r < piv.size(); r++) {
        if (piv[r] == cols)
            throw field_error("inconsistent linear system");
        x[piv[r]] = aug[r][cols];
    }
    return x;
}

FqMat fq_inverse(Fq const& F, FqMat const& a)
{
    int n = (int)a.size();
    FqMat aug = a;
    for (int i = 0; i < n; i++) {
        aug[i].resize(2 * n, 0);
        aug[i][n + i] = 1;
    }
    auto piv = rref(F, aug);
    if ((int)piv.size() < n || piv[n - 1] != n - 1)
        throw field_error("singular matrix");
    FqMat r = fq_zero(n, n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            r[i][j] = aug[i][n + j];
    return r;
}

FqMat fq_from_columns(std::vector<FqVec> const& cols)
{
    if (cols.empty())
        return {};
    FqMat m = fq_zero((int)cols[0].size(), (int)cols.size());
    for (size_t j = 0; j < cols.size(); j++)
        for (size_t i = 0; i < cols[j].size(); i++)
            m[i][j] = cols[j][i];
    return m;
}

bool fq_is_zero(FqMat const& a)
{
    for (auto const& r : a)
        for (auto x : r)
            if (x)
                return false;
    return true;
}

int fq_span_dim(Fq const& F, std::vector<FqVec> const& vs)
{
    if (vs.empty())
        return 0;
    return fq_rank(F, FqMat(vs.begin(), vs.end()));
}

}  // namespace favor7
