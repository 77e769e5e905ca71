#include "favor7/f2.hpp"

#include <sstream>

namespace favor7 {

static F2Vec col_mask(int c) { return c >= 64 ? ~0ull : ((1ull << c) - 1); }

F2Matrix::F2Matrix(int rows, int cols) : c_(cols), r_(rows, 0)
{
    if (cols > 64 || cols < 0 || rows < 0)
        throw f2_error("matrix dimensions out of range");
}

F2Matrix::F2Matrix(std::initializer_list<std::initializer_list<int>> rows)
{
    c_ = rows.size() ? (int)rows.begin()->size() : 0;
    for (auto const& row : rows) {
        if ((int)row.size() != c_)
            throw f2_error("ragged matrix literal");
        F2Vec v = 0;
        int j = 0;
        for (int x : row)
            v |= (F2Vec)(x & 1) << j++;
        r_.push_back(v);
    }
}

F2Matrix F2Matrix::identity(int n)
{
    F2Matrix m(n, n);
    for (int i = 0; i < n; i++)
        m.r_[i] = 1ull << i;
    return m;
}

F2Matrix F2Matrix::from_rows(int cols, std::vector<F2Vec> const& rows)
{
    F2Matrix m((int)rows.size(), cols);
    for (size_t i = 0; i < rows.size(); i++)
        m.r_[i] = rows[i] & col_mask(cols);
    return m;
}

F2Matrix F2Matrix::from_columns(int rows, std::vector<F2Vec> const& cols)
{
    F2Matrix m(rows, (int)cols.size());
    for (size_t j = 0; j < cols.size(); j++)
        for (int i = 0; i < rows; i++)
            if (cols[j] >> i & 1)
                m.r_[i] |= 1ull << j;
    return m;
}

void F2Matrix::set(int i, int j, bool v)
{
    if (v)
        r_[i] |= 1ull << j;
    else
        r_[i] &= ~(1ull << j);
}

F2Vec F2Matrix::column(int j) const
{
    F2Vec v = 0;
    for (int i = 0; i < rows(); i++)
        v |= (r_[i] >> j & 1) << i;
    return v;
}

F2Matrix F2Matrix::operator*(F2Matrix const& b) const
{
    if (c_ != b.rows())
        throw f2_error("matrix shape mismatch");
    F2Matrix m(rows(), b.c_);
    for (int i = 0; i < rows(); i++) {
        F2Vec acc = 0, a = r_[i];
        while (a) {
            int k = __builtin_ctzll(a);
            acc ^= b.r_[k];
            a &= a - 1;
        }
        m.r_[i] = acc;
    }
    return m;
}

F2Matrix F2Matrix::operator+(F2Matrix const& b) const
{
    if (c_ != b.c_ || rows() != b.rows())
        throw f2_error("matrix shape mismatch");
    F2Matrix m = *this;
    for (int i = 0; i < rows(); i++)
        m.r_[i] ^= b.r_[i];
    return m;
}

F2Vec F2Matrix::apply(F2Vec v) const
{
    F2Vec out = 0;
    for (int i = 0; i < rows(); i++)
        out |= (F2Vec)parity(r_[i] & v) << i;
    return out;
}

bool F2Matrix::is_zero() const
{
    for (auto x : r_)
        if (x)
            return false;
    return true;
}

F2Matrix F2Matrix::transpose() const
{
    F2Matrix t(c_, rows());
    for (int i = 0; i < rows(); i++)
        for (int j = 0; j < c_; j++)
            if (get(i, j))
                t.r_[j] |= 1ull << i;
    return t;
}

int F2Matrix::rank() const
{
    F2Space s(c_);
    for (auto x : r_)
        s.insert(x);
    return s.dim();
}

std::vector<F2Vec> F2Matrix::kernel() const
{
    /* echelonize rows, then read off free columns */
    std::vector<F2Vec> a = r_;
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < c_ && r < (int)a.size(); c++) {
        int s = r;
        while (s < (int)a.size() && !(a[s] >> c & 1))
            s++;
        if (s == (int)a.size())
            continue;
        std::swap(a[r], a[s]);
        for (int i = 0; i < (int)a.size(); i++)
            if (i != r && (a[i] >> c & 1))
                a[i] ^= a[r];
        piv.push_back(c);
        r++;
    }
    std::vector<bool> is_piv(c_, false);
    for (int c : piv)
        is_piv[c] = true;
    std::vector<F2Vec> ker;
    for (int f = 0; f < c_; f++) {
        if (is_piv[f])
            continue;
        F2Vec v = 1ull << f;
        for (size_t k = 0; k < piv.size(); k++)
            if (a[k] >> f & 1)
                v |= 1ull << piv[k];
        ker.push_back(v);
    }
    return ker;
}

F2Matrix F2Matrix::inverse() const
{
    int n = rows();
    if (n != c_ || n > 32)
        throw f2_error("inverse needs a square matrix of size <= 32");
    std::vector<F2Vec> a(n);
    for (int i = 0; i < n; i++)
        a[i] = r_[i] | (1ull << (n + i));
    for (int c = 0; c < n; c++) {
        int s = c;
        while (s < n && !(a[s] >> c & 1))
            s++;
        if (s == n)
            throw f2_error("singular matrix");
        std::swap(a[c], a[s]);
        for (int i = 0; i < n; i++)
            if (i != c && (a[i] >> c & 1))
                a[i] ^= a[c];
    }
    F2Matrix m(n, n);
    for (int i = 0; i < n; i++)
        m.r_[i] = a[i] >> n;
    return m;
}

F2Matrix F2Matrix::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    F2Matrix r = identity(rows()), b = *this;
    for (; e; e >>= 1) {
        if (e & 1)
            r = r * b;
        if (e > 1)
            b = b * b;
    }
    return r;
}

F2Matrix F2Matrix::block(int i0, int j0, int nr, int nc) const
{
    F2Matrix m(nr, nc);
    for (int i = 0; i < nr; i++)
        m.r_[i] = (r_[i0 + i] >> j0) & col_mask(nc);
    return m;
}

void F2Matrix::set_block(int i0, int j0, F2Matrix const& b)
{
    for (int i = 0; i < b.rows(); i++) {
        F2Vec mask = col_mask(b.c_) << j0;
        r_[i0 + i] = (r_[i0 + i] & ~mask) | (b.r_[i] << j0);
    }
}

F2Matrix F2Matrix::block_diag(F2Matrix const& a, F2Matrix const& b)
{
    F2Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

F2Matrix F2Matrix::blocks(F2Matrix const& A, F2Matrix const& B, F2Matrix const& C, F2Matrix const& D)
{
    if (A.rows() != B.rows() || C.rows() != D.rows() || A.cols() != C.cols() || B.cols() != D.cols())
        throw f2_error("block shapes mismatch");
    F2Matrix m(A.rows() + C.rows(), A.cols() + B.cols());
    m.set_block(0, 0, A);
    m.set_block(0, A.cols(), B);
    m.set_block(A.rows(), 0, C);
    m.set_block(A.rows(), A.cols(), D);
    return m;
}

F2Vec F2Matrix::flatten() const
{
    int n = rows();
    if (n != c_ || n > 8)
        throw f2_error("flatten needs a square matrix of size <= 8");
    F2Vec v = 0;
    for (int i = 0; i < n; i++)
        v |= r_[i] << (i * n);
    return v;
}

F2Matrix F2Matrix::unflatten(int n, F2Vec v)
{
    F2Matrix m(n, n);
    for (int i = 0; i < n; i++)
        m.r_[i] = (v >> (i * n)) & col_mask(n);
    return m;
}

std::string F2Matrix::to_string() const
{
    std::ostringstream os;
    for (int i = 0; i < rows(); i++) {
        os << (i ? " " : "[");
        for (int j = 0; j < c_; j++)
            os << get(i, j);
        os << (i + 1 == rows() ? "]" : ";");
    }
    if (!rows())
        os << "[]";
    return os.str();
}

/* ------------------------------------------------------------------ */

F2Space F2Space::span(int ambient, std::vector<F2Vec> const& vs)
{
    F2Space s(ambient);
    for (auto v : vs)
        s.insert(v);
    return s;
}

F2Vec F2Space::reduce(F2Vec v) const
{
    for (size_t k = 0; k < basis_.size(); k++)
        if (v >> pivots_[k] & 1)
            v ^= basis_[k];
    return v;
}

bool F2Space::insert(F2Vec v)
{
    v = reduce(v);
    if (!v)
        return false;
    int p = 63 - __builtin_clzll(v);
    for (auto& b : basis_)
        if (b >> p & 1)
            b ^= v;
    /* keep sorted by pivot, descending */
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] > p)
        pos++;
    basis_.insert(basis_.begin() + pos, v);
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

bool F2Space::contains(F2Space const& o) const
{
    for (auto v : o.basis_)
        if (!contains(v))
            return false;
    return true;
}

F2Space F2Space::sum(F2Space const& o) const
{
    F2Space s = *this;
    for (auto v : o.basis_)
        s.insert(v);
    return s;
}

F2Space F2Space::intersect(F2Space const& o) const
{
    /* solve sum a_i u_i = sum b_j w_j */
    int k = dim(), l = o.dim();
    if (k + l > 64)
        throw f2_error("intersection too large");
    std::vector<F2Vec> cols;
    for (auto v : basis_)
        cols.push_back(v);
    for (auto v : o.basis_)
        cols.push_back(v);
    F2Matrix A = F2Matrix::from_columns(n_, cols);
    F2Space r(n_);
    for (auto x : A.kernel()) {
        F2Vec v = 0;
        for (int i = 0; i < k; i++)
            if (x >> i & 1)
                v ^= basis_[i];
        r.insert(v);
    }
    return r;
}

std::vector<F2Vec> F2Space::elements() const
{
    if (dim() > 24)
        throw f2_error("space too large to enumerate");
    std::vector<F2Vec> out(1ull << dim());
    for (size_t m = 1; m < out.size(); m++) {
        int k = __builtin_ctzll(m);
        out[m] = out[m & (m - 1)] ^ basis_[k];
    }
    return out;
}

F2Vec F2Space::coordinates(F2Vec v) const
{
    F2Vec c = 0;
    for (size_t k = 0; k < basis_.size(); k++)
        if (v >> pivots_[k] & 1) {
            v ^= basis_[k];
            c |= 1ull << k;
        }
    if (v)
        throw f2_error("vector outside the subspace");
    return c;
}

F2Space generate_subspace(int ambient, std::vector<F2Vec> const& gens, std::vector<F2Matrix> const& maps)
{
    F2Space s(ambient);
    std::vector<F2Vec> queue;
    for (auto g : gens)
        if (s.insert(g))
            queue.push_back(g);
    while (!queue.empty()) {
        F2Vec v = queue.back();
        queue.pop_back();
        for (auto const& m : maps) {
            F2Vec w = m.apply(v);
            if (s.insert(w))
                queue.push_back(w);
        }
    }
    return s;
}

}  // namespace favor7
