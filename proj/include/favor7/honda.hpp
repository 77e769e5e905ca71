#ifndef FAVOR7_HONDA_HPP_
#define FAVOR7_HONDA_HPP_

#include "favor7/fq.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace favor7 {

struct honda_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* residue field k = F_{p^3} with sigma the p-power Frobenius */
std::shared_ptr<Fq const> residue_field(unsigned p);

/* Finite Honda system of exponent p over W(k): a k-space M with
 * sigma-semilinear F and sigma^-1-semilinear V given by matrices acting on
 * columns, F(v) = Fm sigma(v), V(v) = Vm sigma^-1(v), and L a subspace. */
struct HondaSystem {
    std::shared_ptr<Fq const> k;
    FqMat Vm, Fm;
    std::vector<FqVec> L;  /* basis */
    std::string kind;      /* "E1", "E2", "s11", ... */

    int dim() const { return (int)Vm.size(); }
    FqVec apply_F(FqVec const& v) const;
    FqVec apply_V(FqVec const& v) const;
    /* the identities of an exponent-p Honda system; empty when valid,
     * otherwise the first violated one */
    std::string audit() const;
    bool valid() const { return audit().empty(); }
    bool F_nilpotent() const;
    bool V_nilpotent() const;
};

/* standard simple systems of order p^3 */
HondaSystem simple_honda(std::shared_ptr<Fq const> k, int dimL, Fq::elt param);

struct SimpleClass {
    int dimL = 0;
    Fq::elt param = 0;
};
/* standard basis construction for a simple biconnected system of order p^3
 * in any basis; throws honda_error if H is not of that type */
SimpleClass simple_standard_form(HondaSystem const& H);

/* dual system: V* = sigma^-1(F^T), F* = sigma(V^T), L* the annihilator */
HondaSystem cartier_dual(HondaSystem const& H);
/* exists r in k^x with lambda = sigma^3(r) / r * mu */
bool simple_isomorphic(HondaSystem const& a, HondaSystem const& b);

enum class Family { s11, s21, s12, s22 };
char const* family_name(Family f);
std::optional<Family> parse_family(std::string const& s);
/* number of free s-parameters */
int family_arity(Family f);
/* sub and quotient types (1 or 2) */
int family_sub(Family f);
int family_quot(Family f);

struct ExtParams {
    Family family = Family::s11;
    Fq::elt lambda = 1;    /* parameter of the E1 factor, if any */
    Fq::elt lambda2 = 1;   /* parameter of the E2 factor, if any */
    std::vector<Fq::elt> s; /* s11: s1 s2 s3; s21: s; s12: s1 s2 s3 t; s22: s1 s2 s3 */

    bool is_zero() const;
    friend bool operator==(ExtParams const&, ExtParams const&) = default;
};
std::string to_string(Fq const& k, ExtParams const& P);

/* 6-dimensional extension in the standard basis e1..e6, e1..e3 the
 * submodule in standard form and e4..e6 lifting the quotient's basis */
HondaSystem build_extension(std::shared_ptr<Fq const> k, ExtParams const& P);

/* parameters of H in the declared normal form.  H must be 6-dimensional
 * with span(e1, e2, e3) stable and in the standard form of the sub-object,
 * and the images of e4, e5, e6 in the standard form of the quotient.  The
 * two simple parameters are read off; the remaining basis is rebuilt as in
 * the classification. */
ExtParams extract_params(HondaSystem const& H, Family f);

/* orbit representative of the parameters under the residual basis changes:
 * s11: s2 modulo the image of r -> sigma^2(r) - sigma^-1(r);
 * s22: s3 modulo the image of u -> sigma^-2(u) - sigma^-1(u);
 * least code in the coset; an unused simple parameter is set to 1 */
ExtParams normalize(Fq const& k, ExtParams const& P);
/* F_p-dimension of the quotient image above */
int normal_form_image_dim(Fq const& k, Family f);

ExtParams baer_sum(Fq const& k, ExtParams const& a, ExtParams const& b);
/* Baer sum of two extension systems in the standard shape, computed as the
 * fibre product over the quotient modulo the antidiagonal sub-object */
HondaSystem baer_sum_system(HondaSystem const& a, HondaSystem const& b);

/* random basis change preserving the shape required by extract_params */
HondaSystem random_admissible_change(HondaSystem const& H, Family f, uint64_t seed);

}  // namespace favor7

#endif
