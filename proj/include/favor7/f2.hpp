#ifndef FAVOR7_F2_HPP_
#define FAVOR7_F2_HPP_

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace favor7 {

struct f2_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* vectors of length <= 64, bit i = coordinate i */
using F2Vec = uint64_t;

inline int parity(F2Vec v) { return __builtin_parityll(v); }

/* bit-packed matrix, at most 64 columns; row i bit j = entry (i, j).
 * Column vectors are F2Vec. */
class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols);
    /* rows of 0/1 entries */
    F2Matrix(std::initializer_list<std::initializer_list<int>> rows);

    static F2Matrix identity(int n);
    static F2Matrix from_rows(int cols, std::vector<F2Vec> const& rows);
    static F2Matrix from_columns(int rows, std::vector<F2Vec> const& cols);

    int rows() const { return (int)r_.size(); }
    int cols() const { return c_; }
    bool get(int i, int j) const { return r_[i] >> j & 1; }
    void set(int i, int j, bool v);
    F2Vec row(int i) const { return r_[i]; }
    F2Vec column(int j) const;

    F2Matrix operator*(F2Matrix const& b) const;
    F2Matrix operator+(F2Matrix const& b) const;
    F2Vec apply(F2Vec v) const;
    bool operator==(F2Matrix const& b) const { return c_ == b.c_ && r_ == b.r_; }
    bool operator!=(F2Matrix const& b) const { return !(*this == b); }
    bool operator<(F2Matrix const& b) const { return r_ < b.r_; }
    bool is_zero() const;

    F2Matrix transpose() const;
    int rank() const;
    /* basis of {x : M x = 0} */
    std::vector<F2Vec> kernel() const;
    F2Matrix inverse() const;
    F2Matrix pow(long e) const;

    F2Matrix block(int i0, int j0, int nr, int nc) const;
    void set_block(int i0, int j0, F2Matrix const& b);
    static F2Matrix block_diag(F2Matrix const& a, F2Matrix const& b);
    /* [A B; C D] */
    static F2Matrix blocks(F2Matrix const& A, F2Matrix const& B, F2Matrix const& C, F2Matrix const& D);

    /* square matrices of size <= 8 as vectors of length n^2, bit i*n+j */
    F2Vec flatten() const;
    static F2Matrix unflatten(int n, F2Vec v);

    std::string to_string() const;

  private:
    int c_ = 0;
    std::vector<F2Vec> r_;
};

/* subspace of F_2^n, n <= 64, kept in reduced echelon form */
class F2Space {
  public:
    explicit F2Space(int ambient = 0) : n_(ambient) {}
    static F2Space span(int ambient, std::vector<F2Vec> const& vs);

    int ambient() const { return n_; }
    int dim() const { return (int)basis_.size(); }
    std::vector<F2Vec> const& basis() const { return basis_; }
    /* true if v was new */
    bool insert(F2Vec v);
    F2Vec reduce(F2Vec v) const;
    bool contains(F2Vec v) const { return reduce(v) == 0; }
    bool contains(F2Space const& o) const;
    bool operator==(F2Space const& o) const { return n_ == o.n_ && contains(o) && o.contains(*this); }
    F2Space sum(F2Space const& o) const;
    F2Space intersect(F2Space const& o) const;
    /* every element, for small dimension */
    std::vector<F2Vec> elements() const;
    /* coordinates of v in basis(); v must lie in the space */
    F2Vec coordinates(F2Vec v) const;

  private:
    int n_;
    std::vector<F2Vec> basis_; /* basis_[k] has leading bit pivots_[k] */
    std::vector<int> pivots_;
};

/* smallest subspace containing gens and stable under the given maps */
F2Space generate_subspace(int ambient, std::vector<F2Vec> const& gens, std::vector<F2Matrix> const& maps);

}  // namespace favor7

#endif
