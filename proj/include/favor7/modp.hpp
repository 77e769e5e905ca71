#ifndef FAVOR7_MODP_HPP_
#define FAVOR7_MODP_HPP_

#include "favor7/arith.hpp"

#include <cstdint>
#include <vector>

namespace favor7 {

/* Polynomials over Z/pZ for a prime p < 2^63, coefficients low to high. */
class ModpRing {
  public:
    using poly = std::vector<uint64_t>;

    explicit ModpRing(uint64_t p);
    uint64_t modulus() const { return p_; }

    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t inv(uint64_t a) const;

    poly reduce(IntPoly const& f) const;
    static void trim(poly& f);
    static int degree(poly const& f) { return (int)f.size() - 1; }

    poly add(poly const& a, poly const& b) const;
    poly sub(poly const& a, poly const& b) const;
    poly mul(poly const& a, poly const& b) const;
    poly derivative(poly const& a) const;
    poly make_monic(poly const& a) const;
    /* quotient, remainder */
    std::pair<poly, poly> divrem(poly const& a, poly const& b) const;
    poly rem(poly const& a, poly const& b) const { return divrem(a, b).second; }
    poly gcd(poly a, poly b) const;
    poly mulmod(poly const& a, poly const& b, poly const& m) const;
    /* base^e mod m, with e given as a big integer */
    poly powmod(poly const& base, Int const& e, poly const& m) const;

    /* Yun's algorithm; result[k] is the product of the irreducible factors
     * of multiplicity k (result[0] unused).  Requires deg f < p. */
    std::vector<poly> squarefree_decomposition(poly const& f) const;
    /* distinct-degree factorization of a squarefree monic polynomial:
     * pairs (degree d, product of all irreducible factors of degree d) */
    std::vector<std::pair<int, poly>> distinct_degree(poly const& f) const;
    /* multiset of degrees of the irreducible factors of a squarefree f */
    std::vector<int> factor_degrees(poly const& f) const;
    bool is_irreducible(poly const& f) const;

  private:
    uint64_t p_;
};

}  // namespace favor7

#endif /* FAVOR7_MODP_HPP_ */
