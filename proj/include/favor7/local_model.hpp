#ifndef FAVOR7_LOCAL_MODEL_HPP_
#define FAVOR7_LOCAL_MODEL_HPP_

#include "favor7/arith.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace favor7 {

struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* default precision of the truncated model, in powers of the uniformizer;
 * FAVOR7_PRECISION overrides */
int default_local_precision();

/* O = W(F_8)[pi] / (pi^7 - 2) truncated modulo pi^N, the ring of integers
 * of F = Q_2(zeta_7, 2^(1/7)).  An element is sum_{j<7} a_j pi^j with a_j in
 * W(F_8)/2^m = (Z/2^m)[zeta]/(c(zeta)), c the minimal polynomial of the
 * Teichmuller root of unity reducing to a root of x^3 + x + 1. */
class LocalModel {
  public:
    using W = std::array<uint64_t, 3>;
    struct Elt {
        std::array<W, 7> a{};
        friend bool operator==(Elt const&, Elt const&) = default;
    };

    explicit LocalModel(int precision);

    int precision() const { return N_; }
    int wprec() const { return m_; }
    /* coefficients of c(X) = X^3 + c2 X^2 + c1 X + c0, mod 2^m */
    W const& zeta_minpoly() const { return cz_; }

    Elt zero() const { return Elt{}; }
    Elt one() const;
    Elt pi() const;
    Elt zeta() const;
    Elt from_int(long v) const;
    Elt from_w(W const& w) const;
    /* Teichmuller lift of an F_8 element, coded in the basis 1, z, z^2 of
     * F_2[z]/(z^3+z+1) as bits 0..2 */
    Elt teichmuller(unsigned code) const;

    Elt add(Elt const& x, Elt const& y) const;
    Elt sub(Elt const& x, Elt const& y) const;
    Elt neg(Elt const& x) const;
    Elt mul(Elt const& x, Elt const& y) const;
    Elt pow(Elt const& x, unsigned long e) const;
    Elt mul_pi(Elt const& x, int k) const;
    /* requires val(x) >= k */
    Elt div_pi(Elt const& x, int k) const;
    Elt inverse(Elt const& unit) const;

    /* pi-adic valuation, capped at the precision */
    int val(Elt const& x) const;
    bool eq_mod(Elt const& x, Elt const& y, int t) const;
    /* reduction modulo pi, as an F_8 code */
    unsigned residue(Elt const& x) const;

    /* sigma: pi -> zeta pi, trivial on W; tau: Frobenius on W, pi fixed */
    Elt sigma(Elt const& x) const;
    Elt tau(Elt const& x) const;

    Elt random(std::mt19937_64& rng, int min_val = 0) const;
    std::string to_string(Elt const& x) const;

    /* W arithmetic */
    W wadd(W const& x, W const& y) const;
    W wsub(W const& x, W const& y) const;
    W wmul(W const& x, W const& y) const;
    W wfrob(W const& x) const;
    int wval(W const& x) const;

  private:
    int N_, m_;
    uint64_t mask_;
    W cz_;
    W zeta2_, zeta4_;
    uint64_t reduce(uint64_t v) const { return v & mask_; }
};

/* pi^shift * y with y a unit of O known modulo pi^rel (or zero, known
 * modulo pi^rel); absolute precision shift + rel.  Fractional elements of
 * F for the covector computations. */
class LocalNumber {
  public:
    LocalNumber(LocalModel const& M, LocalModel::Elt const& y, int shift = 0);
    static LocalNumber zero(LocalModel const& M, int abs_prec);

    LocalModel const& model() const { return *M_; }
    bool is_zero() const { return zero_; }
    /* pi-adic valuation, or abs precision for zero */
    int val() const { return zero_ ? abs_ : shift_; }
    int abs_prec() const { return abs_; }
    LocalModel::Elt const& unit() const { return y_; }

    LocalNumber operator+(LocalNumber const& b) const;
    LocalNumber operator-(LocalNumber const& b) const;
    LocalNumber operator-() const;
    LocalNumber operator*(LocalNumber const& b) const;
    LocalNumber pow(unsigned long e) const;
    /* division by 2 = pi^7 */
    LocalNumber half() const;
    LocalNumber divide(LocalNumber const& b) const;

    /* class modulo pi^t: throws precision_error unless abs_prec >= t */
    LocalModel::Elt reduce_mod(int t) const;
    bool equal_mod(LocalNumber const& b, int t) const;

  private:
    LocalNumber(LocalModel const& M) : M_(&M) {}
    void normalize();
    LocalModel const* M_;
    bool zero_ = true;
    int shift_ = 0;
    int abs_ = 0;
    LocalModel::Elt y_{};
};

}  // namespace favor7

#endif /* FAVOR7_LOCAL_MODEL_HPP_ */
