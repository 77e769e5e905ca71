#ifndef FAVOR7_RECORDS_HPP_
#define FAVOR7_RECORDS_HPP_

#include "favor7/amiable.hpp"
#include "favor7/favorable.hpp"
#include "favor7/resolvent.hpp"

#include "json.hpp"

#include <string>

namespace favor7 {

using Json = nlohmann::ordered_json;

struct record_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string sha256_hex(std::string const& data);
std::string read_file(std::string const& path);
/* writes atomically (temporary file then rename) */
void write_file(std::string const& path, std::string const& data);

/* integers beyond 2^53 become decimal strings */
Json int_to_json(Int const& v);
Int int_from_json(Json const& j);
Json poly_to_json(IntPoly const& p);   /* coefficients, constant term first */
IntPoly poly_from_json(Json const& j); /* list or polynomial string */

Json record_to_json(FavorableRecord const& r);
FavorableRecord record_from_json(Json const& j);
Json resolvent_to_json(ResolventField const& rf);
/* hash of the canonical resolvent document, the certificate subject */
std::string resolvent_subject(ResolventField const& rf);

Json certificate_to_json(ClassFieldCertificate const& c);
ClassFieldCertificate certificate_from_json(Json const& j);

Json verdict_to_json(AmiabilityVerdict const& v);

/* canonical text: two-space indent, trailing newline */
std::string dump(Json const& j);

}  // namespace favor7

#endif
