#ifndef FAVOR7_RESOLVENT_HPP_
#define FAVOR7_RESOLVENT_HPP_

#include "favor7/arith.hpp"
#include "favor7/favorable.hpp"

#include <optional>
#include <string>
#include <vector>

namespace favor7 {

struct resolvent_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* monic-rational polynomial with roots a_i + a_j (i < j), scaled to a
 * primitive integer polynomial.  Throws resolvent_error on colliding
 * pair sums. */
IntPoly pair_sum_polynomial(IntPoly const& f);

/* Tschirnhaus transform: polynomial whose roots are a^2 + c a */
IntPoly tschirnhaus(IntPoly const& f, long c);

struct PairResolvent {
    IntPoly minpoly;      /* degree 21 */
    long transform = 0;   /* 0, or c when the generator is b_i + b_j, b = a^2 + c a */
};
/* pair_sum_polynomial, falling back to Tschirnhaus transforms
 * c = 1, 2, 3, ... on collisions */
PairResolvent pair_resolvent_polynomial(IntPoly const& f);

/* real places of K = Q(a_1 + a_2) from r1 of the heptic */
int resolvent_r1_formula(int r1);

/* primitive polynomial with roots a_i/a_j + a_j/a_i (i < j), degree 21;
 * these lie in K */
IntPoly ratio_trace_polynomial(IntPoly const& f);

struct TwoAdicCertificate {
    bool ok = false;
    int e = 0, f = 0;
    std::string polygon;           /* of the pair-sum polynomial at 2 */
    std::string residue_factor;    /* gcd(ratio polynomial mod 2, x^8 - x) */
    std::string report;
};
/* slope denominator 7 of minpoly forces 7 | e at every prime above 2;
 * ratio-trace residues outside F_2 force f > 1, hence one prime, (7, 3) */
TwoAdicCertificate two_adic_certificate(IntPoly const& parent, IntPoly const& minpoly);

struct ShapeAtN {
    int exp_a = 11, exp_b = 5;       /* norms N^11 and N^5 */
    bool verified = false;
    int simple_degree = 0;           /* degree of the squarefree part mod N */
    int square_degree = 0;           /* degree of the part with multiplicity 2 */
    std::vector<int> simple_factor_degrees, square_factor_degrees;
    std::string report;
};
/* N must divide disc_parent */
ShapeAtN shape_at_N(IntPoly const& minpoly, Int const& N, Int const& disc_parent);

/* lower bound of the 2-rank of Gal(Omega_K/K) for genus 3 and residue
 * degree 3 at 2: rank C_K[2] + (g - f)(g + 1) + (r1 - 1)^2 / 4 */
Rat too_real_bound(int r1, int ck2_rank = 0);

struct ResolventField {
    FavorableRecord parent;
    PairResolvent resolvent;
    int r1_K = 0;
    TwoAdicCertificate two_adic;
    ShapeAtN shape;
    bool clean() const { return two_adic.ok && shape.verified; }
};
ResolventField make_resolvent_field(FavorableRecord const& rec);

}  // namespace favor7

#endif
