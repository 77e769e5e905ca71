#ifndef FAVOR7_ALGEBRA_HPP_
#define FAVOR7_ALGEBRA_HPP_

#include "favor7/f2.hpp"
#include "favor7/perm.hpp"

#include <vector>

namespace favor7 {

/* the order 7 and order 3 blocks on E_1 and E_2 = F_2^3 */
F2Matrix seven_block(int which); /* which = 1 or 2 */
F2Matrix three_block();
/* normalized generator images on F_2^6 */
F2Matrix sigma6();          /* image of (1234567) */
F2Matrix tau6();            /* image of (124)(365) */
F2Matrix transvection6();   /* image of (12) */

/* change of basis from the sum-zero hyperplane of F_2^7 (basis e_k + e_7)
 * to the normalized basis, solved from the two generator images */
F2Matrix hyperplane_basis_change();
/* S_7 -> Sp_6(F_2) */
F2Matrix iota(Perm const& g);
/* permutation action of S_7 on the sum-zero hyperplane, in the basis
 * e_k + e_7 */
F2Matrix hyperplane_action(Perm const& g);

/* unique nonzero alternating form fixed by all generators; throws
 * f2_error unless the solution space is one dimensional */
F2Matrix invariant_symplectic_form(std::vector<F2Matrix> const& gens);

/* m -> g m g^-1 on flattened n x n matrices */
F2Matrix conjugation_action(F2Matrix const& g);
/* f -> a f b on flattened n x n matrices */
F2Matrix two_sided_action(F2Matrix const& a, F2Matrix const& b);

/* Delta-module data: sigma of order 7, tau of order 3, tau sigma tau^-1
 * = sigma^2, acting on a subspace M */
struct CornerData {
    F2Space C1, C2;  /* tau-fixed, killed by s^3+s+1 resp. s^3+s^2+1 */
    F2Space fixed;   /* sigma-fixed part */
    int n_triv = 0, n_D = 0, n1 = 0, n2 = 0;
};
CornerData corner_spaces(F2Space const& M, F2Matrix const& sigma, F2Matrix const& tau);

/* the Delta-module spanned by v */
F2Space cyclic_submodule(int ambient, F2Vec v, F2Matrix const& sigma, F2Matrix const& tau);

/* Hom(E_i, E_j) = M_3(F_2) with sigma f = s_j f s_i^-1, tau f = t f t^-1 */
struct HomModule {
    F2Space space;
    F2Matrix sigma, tau;
};
HomModule hom_module(int i, int j);

/* the five generators gamma_a, a in {6, 14, 20, 29, 35}, as 6x6 matrices
 * in 3x3 blocks */
F2Matrix gamma_generator(int a);
/* S_7-stable span of gamma_a under conjugation, as flattened 6x6 matrices */
F2Space gamma_module(int a);
/* conjugation by sigma6 and tau6 on flattened 6x6 matrices */
F2Matrix delta_sigma36();
F2Matrix delta_tau36();

/* the two generators of S_7 used throughout */
Perm seven_cycle();
Perm transposition12();

/* iota(S_7) as a permutation group on the 63 nonzero vectors */
std::vector<Perm> iota_on_vectors();

}  // namespace favor7

#endif
