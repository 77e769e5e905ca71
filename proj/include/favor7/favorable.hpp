#ifndef FAVOR7_FAVORABLE_HPP_
#define FAVOR7_FAVORABLE_HPP_

#include "favor7/arith.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace favor7 {

using CurveCoeffs = std::array<long, 7>; /* g = x^7 + a0 x^6 + ... + a6 */

/* 1 + 4 g */
IntPoly curve_polynomial(CurveCoeffs const& g);
/* inverse of curve_polynomial, if h has that form */
std::optional<CurveCoeffs> curve_coefficients(IntPoly const& h);

struct FavorableRecord {
    std::optional<CurveCoeffs> g;   /* present for the curve family */
    IntPoly h;
    Int N;                          /* odd prime */
    int sign = 1;                   /* N* = sign * N */
    Int disc;
    int r1 = 0;
    int frobenius_parity = 0;       /* a with N* = 1 + 4a mod 8 */
    bool disc_shape_ok = false, newton_ok = false, prime_ok = false;

    Int n_star() const { return sign * N; }
};

enum class Rejection {
    none,
    degree,        /* not of degree 7 */
    not_squarefree,
    newton,        /* polygon at 2 not a single slope of denominator 7 */
    disc_shape,    /* 2-part of the discriminant not 2^6 (field) / 2^12 (curve) */
    up_to_index,   /* 2-part an even power above 2^6: favorable up to index */
    not_prime,     /* odd part not prime */
    n_star_mod4,   /* N* not 1 mod 4 */
};
char const* rejection_name(Rejection r);

struct FavorableResult {
    std::optional<FavorableRecord> record;
    Rejection reason = Rejection::none;
    std::string detail;
    bool accepted() const { return record.has_value(); }
};

FavorableResult verify_favorable_heptic(IntPoly const& h);

struct CoeffBox {
    std::array<std::pair<long, long>, 7> range;
    long size() const;
    /* the idx-th tuple in lexicographic order (a0 slowest) */
    CurveCoeffs at(long idx) const;
};
/* "a0=lo:hi,a1=lo:hi,..." with missing coefficients fixed at 0; a single
 * value "a3=2" is allowed */
CoeffBox parse_box(std::string const& s);

/* accepted curves with N <= n_max (no bound if n_max is empty), in
 * lexicographic order of the coefficients for any thread count */
std::vector<FavorableRecord> search_curves(CoeffBox const& box, std::optional<Int> const& n_max, int threads = 1);

}  // namespace favor7

#endif
