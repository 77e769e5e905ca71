#ifndef FAVOR7_CONDUCTOR_HPP_
#define FAVOR7_CONDUCTOR_HPP_

#include "favor7/arith.hpp"
#include "favor7/honda.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace favor7 {

enum class Ramification { split, unramified, totally_ramified_p3, ramified };
char const* ramification_name(Ramification r);

struct ConductorVerdict {
    Family family = Family::s11;
    std::string case_label;
    int value = 0;
    bool exact = false;
    Ramification ramification = Ramification::split;
    std::string base;       /* field over which the conductor is measured */
    std::string reason;     /* which rule produced the value */
    int headline_bound = 0; /* bound stated for the whole family */
};

/* case table for the field of points of an exponent-p extension, k = F_{p^3} */
ConductorVerdict conductor_case(ExtParams const& P, unsigned p);

/* p^2 + p */
inline int conductor_upper_bound(unsigned p) { return (int)(p * p + p); }

/* Artin-Schreier-like data: C = u w^(-p^m), conductor v_F(w) + 1 */
struct ASData {
    Rat ord_C;          /* ord_p(C) */
    int e_F = 0;        /* ramification index of the base over Q_p */
    int vF_C = 0;       /* e_F ord_p(C) */
    int m = 0;
    int vF_w = 0;
    int conductor = 0;
    bool hypothesis_ok = false; /* ord_p(C) > q / (1 - q), p does not divide v_F(w), m < 3 */
};
/* from the valuation of C; nullopt for ord_p(C) >= 0 (unramified) */
std::optional<ASData> artin_schreier_conductor(Rat const& ord_C, int e_F, unsigned p);

struct FieldDescriptor {
    std::string kind;            /* "E1", "E2" or a family name */
    std::string equation;
    std::string base;
    int e_base = 0;
    std::vector<std::pair<std::string, Rat>> valuations; /* ord_p of the structural constants */
    std::optional<ASData> as;    /* present for the single-term branches */
    std::string note;
};

FieldDescriptor field_of_points_simple(int dimL, unsigned p);
FieldDescriptor field_of_points_extension(ExtParams const& P, unsigned p);

/* (p^3 - 1)(ord alpha - ord a) = p */
bool alpha_over_a_identity(unsigned p);

}  // namespace favor7

#endif
