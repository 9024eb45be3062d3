#pragma once

#include <json.hpp>

#include "mutkit/broken.hpp"
#include "mutkit/floer.hpp"
#include "mutkit/geometry.hpp"
#include "mutkit/index.hpp"
#include "mutkit/mutation.hpp"

namespace mutkit {

using Json = nlohmann::json;

// Rationals cross the JSON boundary as "p/q" strings, complex rationals as
// {"re": "p/q", "im": "p/q"}; no precision is lost.

Json to_json(const GaussianRational& v);
GaussianRational gaussian_from_json(const Json& j);

Json to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const Json& j);

Json to_json(const RationalFunction& f);

Json to_json(const MutationRule& r);
/// Rule entries may be positional indices or variable names; names are
/// resolved against `variables`.
MutationRule rule_from_json(const Json& j, const std::vector<std::string>& variables = {});

Json to_json(const PlanarPath& p);
PlanarPath path_from_json(const Json& j);

Json to_json(const IndexData& d);
IndexData index_data_from_json(const Json& j);

Json to_json(const FloerComplex& c);
FloerComplex complex_from_json(const Json& j);

HolonomyAssignment assignment_from_json(const Json& j);

Json to_json(const CombType& t);
Json to_json(const Verdict& v);

}  // namespace mutkit
