#ifndef FAVOR7_PARABOLIC_HPP_
#define FAVOR7_PARABOLIC_HPP_

#include "favor7/algebra.hpp"

#include <cstdint>
#include <vector>

namespace favor7 {

/* [I m; 0 I] and diag(x, x) in GL_12(F_2) */
F2Matrix radical_element(F2Matrix const& m);
F2Matrix levi_element(F2Matrix const& x);

/* G_a = Gamma_a . iota(S_7) */
struct ParabolicGroup {
    int a;
    F2Space gamma;                 /* flattened 6x6 matrices */
    std::vector<F2Matrix> gens;    /* 12 x 12: d(s), d(r), c(gamma_a) */
};
ParabolicGroup make_parabolic(int a);

struct VeryGoodReport {
    int a = 0;
    bool exhaustive = false;
    int d_r_rank = 0;              /* rank(d(r) - 1) */
    bool d_r_good = false;         /* normal closure of d(r) is G_a */
    long candidates = 0;           /* very good involutions c(m) d(r) examined */
    long classes = 0;              /* classes among them (exhaustive runs) */
    long outside_class = 0;        /* candidates not conjugate to d(r) */
    bool unique() const { return d_r_good && d_r_rank == 2 && outside_class == 0 && (!exhaustive || classes == 1); }
};
/* exhaustive over c(m) d(r), m in Gamma_a commuting with r */
VeryGoodReport very_good_involutions(int a);
/* randomized variant for large a */
VeryGoodReport very_good_spot_check(int a, int samples, uint64_t seed);

/* faithful transitive action of G_a on 42 points: cosets of an index 2
 * subgroup of Gamma_a . iota(C), C the centralizer of (12).  Generators
 * are the images of d(s), d(r), c(gamma_a).  Throws if no such action. */
std::vector<Perm> coset_action_42(int a);

}  // namespace favor7

#endif
