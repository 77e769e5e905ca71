#ifndef FAVOR7_PADIC_HPP_
#define FAVOR7_PADIC_HPP_

#include "favor7/arith.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace favor7 {

struct padic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Lower convex hull of the points (i, v(a_i)).  Segment slopes are
 * dv/di, non-decreasing from left to right; the roots attached to a
 * segment have valuation -slope. */
struct NewtonSegment {
    int start;       /* abscissa of left vertex */
    long height;     /* ordinate of left vertex */
    int length;      /* horizontal length */
    Rat slope;
    /* denominator of the slope in lowest terms: every local factor
     * attached to the segment has ramification index divisible by it */
    long ramification() const { return slope.get_den().get_si(); }
    int residual_degree() const { return (int)(length / ramification()); }
};

struct NewtonPolygon {
    std::vector<std::pair<int, long>> vertices;
    std::vector<NewtonSegment> segments;

    bool single_slope() const { return segments.size() == 1; }
    /* true iff some segment has slope denominator equal to its full length,
     * which forces a single totally ramified factor of that degree */
    bool certifies_total_ramification() const
    {
        return single_slope() && segments[0].ramification() == segments[0].length;
    }
    std::string to_string() const;
};

NewtonPolygon newton_polygon(IntPoly const& f, Int const& prime);
NewtonPolygon newton_polygon(RatPoly const& f, Int const& prime);

/* First order residual polynomial of a segment: the coefficients
 * a_{s+ke} / prime^{v_s + k h} reduced modulo prime, k = 0..length/e. */
std::vector<uint64_t> residual_polynomial(RatPoly const& f, Int const& prime, NewtonSegment const& seg);

/* ------------------------------------------------------------------
 * Fractional elements: classes in R_d = Kbar / (p/d) O.  Valuations are
 * in units of ord_p (so ord_p(p) = 1). */

struct FracRing {
    Rat ord_d; /* ord_p(d) < 1 */
    explicit FracRing(Rat o);
    /* ord_p of the modulus p/d */
    Rat modulus_ord() const { return Rat(1) - ord_d; }
};

struct FracElt {
    FracRing ring;
    bool zero = false;   /* the zero class */
    Rat ord = 0;         /* ord_p of a representative, or a lower bound */
    bool exact = true;   /* false if ord is only a lower bound */

    static FracElt of(FracRing const& R, Rat const& o);
    static FracElt zero_class(FracRing const& R);
    std::string to_string() const;
};

/* rule B2: x^q, defined when p x^(q-1) is integral */
FracElt fracring_pow_q(FracElt const& x, unsigned long q);
/* rule B3: (x + y)^q = x^q + y^q, needs d x^q, d y^q integral; the B2
 * condition for x and y is checked as well, with its own message */
FracElt fracring_add_freshman(FracElt const& x, FracElt const& y, unsigned long q);
/* rule B4: projection R_d -> R_d' for ord(d) <= ord(d') */
FracElt fracring_project(FracElt const& x, FracRing const& target);
/* rule B1: sums; the result is the class of x + y */
FracElt fracring_add(FracElt const& x, FracElt const& y);

/* Conductor of an Artin-Schreier-like extension x^q - x + C over a field
 * F containing the (q-1)-th roots of unity.
 *   vF_C  : v_F(C) in the normalization v_F(p) = eF (must be < 0)
 * Writes C = u w^(-p^m) with p not dividing v_F(w) and 0 <= m < n, and
 * returns v_F(w) + 1.  Throws if no admissible (m, w) exists or if the
 * bound ord_p(C) > q/(1-q) fails. */
struct AsData {
    int m;
    long vF_w;
    long conductor;
};
AsData as_conductor(long vF_C, long eF, unsigned long p, unsigned n);

}  // namespace favor7

#endif /* FAVOR7_PADIC_HPP_ */
