#pragma once

#include <string>

#include "json.hpp"
#include "premod/premodular.hpp"

namespace premod {

using json = nlohmann::json;  // std::map-backed: keys serialize sorted

json to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclo_from_json(const json& j);

json to_json(const RootOfUnity& r);
RootOfUnity root_from_json(const json& j);

json to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const json& j);

json to_json(const FusionRing& F);
FusionRing ring_from_json(const json& j);

// fusion ring block merged with dims/T and optional S
json to_json(const PremodularDatum& D, bool include_s = true);
// when S is absent it is synthesized via the balancing equation and
// *s_synthesized is set
PremodularDatum datum_from_json(const json& j, bool* s_synthesized = nullptr);

// sorted keys, no insignificant whitespace, trailing LF
std::string canonical_dump(const json& j);

}  // namespace premod
