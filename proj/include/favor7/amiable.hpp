#ifndef FAVOR7_AMIABLE_HPP_
#define FAVOR7_AMIABLE_HPP_

#include "favor7/favorable.hpp"
#include "favor7/perm.hpp"
#include "favor7/resolvent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace favor7 {

struct amiable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* class field data of the pair-resolvent field, computed elsewhere */
struct ClassFieldCertificate {
    std::string subject;                   /* sha256 of the resolvent record */
    std::optional<int> omega_degree;       /* degree of the maximal elementary 2-extension */
    std::optional<int> conductor_exponent; /* at the prime above 2 */
    std::optional<bool> narrow_h_odd;
    std::optional<std::vector<Perm>> closure_perm_gens; /* degree 42 */
    std::string produced_by;
    std::string script_sha256;

    /* empty if consistent, otherwise the first problem */
    std::string consistency() const;
};

struct Screen {
    bool pass = true;
    bool pending = false; /* passed natively, certificate still needed */
    std::vector<std::string> reasons;
};
Screen screen_necessary(FavorableRecord const& rec, ClassFieldCertificate const* cert);

struct WorkOrder {
    std::string request_json;
    std::string script;
    std::string script_sha256;
    std::string cas;
};
/* refuses a resolvent without clean certificates; cas is "gp" or "magma" */
WorkOrder emit_work_order(ResolventField const& rf, std::string const& subject, std::string const& cas = "gp");

enum class ClosureClass { G6, G14, G20, other };
char const* closure_class_name(ClosureClass c);
struct ClosureId {
    ClosureClass cls = ClosureClass::other;
    Int order;
    int radical_log2 = -1;       /* a with |radical| = 2^a, when found */
    bool radical_exponent2 = false;
    Int abelianization;
    bool checks_pass = false;
    std::string detail;
};
/* throws amiable_error on intransitive input or wrong degree */
ClosureId identify_closure_group(std::vector<Perm> const& gens, uint64_t seed = 1);

enum class Verdict { amiable_Z, amiable_f6, amiable_f4, not_amiable, insufficient_certificate };
char const* verdict_name(Verdict v);
/* label used in the large-curve table: Z, f6, f4 or "-" */
char const* verdict_label(Verdict v);

struct AmiabilityVerdict {
    Verdict verdict = Verdict::insufficient_certificate;
    std::vector<std::string> reasons;
    std::optional<ClosureId> closure;
    bool is_amiable() const
    {
        return verdict == Verdict::amiable_Z || verdict == Verdict::amiable_f6 || verdict == Verdict::amiable_f4;
    }
};
AmiabilityVerdict amiability_verdict(FavorableRecord const& rec, ClassFieldCertificate const* cert);

}  // namespace favor7

#endif
