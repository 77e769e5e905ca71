#ifndef FAVOR7_LOCALCFT_HPP_
#define FAVOR7_LOCALCFT_HPP_

#include "favor7/algebra.hpp"
#include "favor7/local_model.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace favor7 {

struct localcft_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* U^(1) / U^(6) U^2 for F = Q_2(zeta_7, 2^(1/7)), with the classes of
 * 1 + [z^j] pi^i (i = 1, 3, 5; j = 0, 1, 2) as basis, coordinate 3 (i-1)/2 + j.
 * The full group adds the uniformizer class g0 as coordinate 9 with
 * trivial action. */
struct LocalUnitClassGroup {
    int precision = 0;
    int unit_dim = 0;                /* 9 */
    F2Matrix unit_sigma, unit_tau;   /* sigma: pi -> zeta pi, tau: Frobenius */
    F2Matrix sigma, tau;             /* on the 10-dimensional group */
    std::array<F2Vec, 4> g{};        /* g0 .. g3 in the 10-dimensional group */
    CornerData unit_corners;         /* of the unit part */
    CornerData corners;              /* of the whole group */
    int exhaustive_log2_order = -1;  /* |U1 / U6 U1^2| by enumeration */
    bool square_1_plus_pi2 = false;  /* class of 1 + pi^2 is trivial */
    bool direct_sum = false;         /* R g1 + R g2 + R g3 is the unit part */
    std::array<int, 4> cyclic_dims{}; /* dim R g_i */
    std::array<int, 4> cyclic_tau_fixed{};
};

/* class of a unit of U^(1) in the 9-dimensional quotient; throws
 * precision_error when the model cannot certify it */
F2Vec unit_class(LocalModel const& M, LocalModel::Elt const& u);

LocalUnitClassGroup compute_unit_class_group(int precision = 14);
/* cached, precision 14 raised on failure */
LocalUnitClassGroup const& unit_class_group();

/* 6x6 values of a Honda character on g0 .. g3, blocks [chi11 chi21; chi12 chi22] */
struct HondaCharacterShape {
    std::array<F2Matrix, 4> value;
    static HondaCharacterShape zero();
};
/* [0 0; t^2 0] */
F2Matrix lower_left_t2();
/* true iff chi(g2) has zero upper-right block and chi(g3) is 0 or
 * [0 0; t^2 0]; throws localcft_error if the values are not compatible
 * with the action (g0 fixed, g1 in C1, g2 and g3 in C2) */
bool honda_character_constraint_check(HondaCharacterShape const& shape, std::string* why = nullptr);

struct Cond4Entry {
    int a = 0;
    int c2_dim = 0;
    bool x_in_c2 = false;           /* [0 0; t^2 0] in C2(Gamma_a) */
    bool upper_right_nonzero = false; /* every nonzero element of C2 has nonzero upper-right block */
    int bound = 6;
    std::string reason;
};
std::vector<Cond4Entry> cond4_analysis();
std::map<int, int> cond4_bounds();

}  // namespace favor7

#endif
