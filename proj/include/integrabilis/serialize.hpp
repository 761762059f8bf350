#ifndef INTEGRABILIS_SERIALIZE_HPP
#define INTEGRABILIS_SERIALIZE_HPP

#include <json.hpp>

#include "integrabilis/exceptional.hpp"
#include "integrabilis/puiseux.hpp"

namespace integrabilis {

using Json = nlohmann::ordered_json;

// Structured forms used in command output documents; every embedded value is
// its canonical string form, so the documents are deterministic.
Json json_of(const ExtDescriptor& d);
Json json_of(const KOneForm& w);
Json json_of(const LOneForm& w);
Json json_of(const LogSum& psi);
Json json_of(const VerificationReport& r);
Json json_of(const PSeries& s);

std::string to_string(const PSeries& s);

// Inverse of json_of(PSeries) at the given order; validates the layout.
PSeries pseries_from_json(unsigned order, const Json& j);

} // namespace integrabilis

#endif
