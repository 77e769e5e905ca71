#ifndef FAVOR7_FQ_HPP_
#define FAVOR7_FQ_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace favor7 {

struct field_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* F_q, q = p^n <= 4096, elements coded as integers whose base-p digits
 * are the coefficients of a residue modulo the defining polynomial.  For
 * q = 8 the modulus is z^3 + z + 1; otherwise the lexicographically first
 * primitive polynomial. */
class Fq {
  public:
    using elt = uint32_t;

    Fq(unsigned p, unsigned n);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return n_; }
    unsigned size() const { return q_; }
    std::vector<unsigned> const& modulus() const { return mod_; }

    elt zero() const { return 0; }
    elt one() const { return 1; }
    elt from_int(long v) const;
    /* the class of z (the residue of the variable) */
    elt gen() const { return n_ == 1 ? prim_ : p_; }
    elt primitive() const { return prim_; }

    elt add(elt a, elt b) const { return add_[a * q_ + b]; }
    elt neg(elt a) const { return neg_[a]; }
    elt sub(elt a, elt b) const { return add(a, neg(b)); }
    elt mul(elt a, elt b) const
    {
        if (!a || !b)
            return 0;
        unsigned s = log_[a] + log_[b];
        return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
    }
    elt inv(elt a) const;
    elt div(elt a, elt b) const { return mul(a, inv(b)); }
    elt pow(elt a, long e) const;
    /* a^(p^k), k taken modulo n (negative allowed) */
    elt frob(elt a, int k) const;

    /* discrete log base primitive(); a != 0 */
    unsigned log(elt a) const;
    std::string to_string(elt a) const;

  private:
    unsigned p_, n_, q_;
    std::vector<unsigned> mod_;
    elt prim_;
    std::vector<elt> add_, neg_, exp_;
    std::vector<unsigned> log_;
    elt polymul_raw(elt a, elt b) const;
};

/* dense matrices and vectors over an Fq */
using FqVec = std::vector<Fq::elt>;
using FqMat = std::vector<FqVec>; /* row major */

FqMat fq_zero(int r, int c);
FqMat fq_identity(int n);
FqMat fq_mul(Fq const& F, FqMat const& a, FqMat const& b);
FqMat fq_add(Fq const& F, FqMat const& a, FqMat const& b);
FqVec fq_apply(Fq const& F, FqMat const& a, FqVec const& v);
/* entrywise Frobenius power */
FqMat fq_frob(Fq const& F, FqMat const& a, int k);
FqVec fq_frob(Fq const& F, FqVec const& v, int k);
int fq_rank(Fq const& F, FqMat a);
/* basis of {x : a x = 0} */
std::vector<FqVec> fq_kernel(Fq const& F, FqMat const& a);
/* solve a x = b, throws if inconsistent */
FqVec fq_solve(Fq const& F, FqMat const& a, FqVec const& b);
FqMat fq_inverse(Fq const& F, FqMat const& a);
/* matrix whose columns are the given vectors */
FqMat fq_from_columns(std::vector<FqVec> const& cols);
bool fq_is_zero(FqMat const& a);
/* dimension of the span */
int fq_span_dim(Fq const& F, std::vector<FqVec> const& vs);

}  // namespace favor7

#endif
