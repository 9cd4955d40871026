#pragma once

#include <string>

#include <json.hpp>

#include "kmx/classify.hpp"
#include "kmx/disc.hpp"
#include "kmx/exactlin.hpp"
#include "kmx/maslov.hpp"
#include "kmx/modular.hpp"
#include "kmx/tqft.hpp"

namespace kmx {

// Insertion-ordered JSON keeps --json output byte-identical across runs.
using Json = nlohmann::ordered_json;

/// Arbitrary-precision integer -> JSON number when it fits in 53 bits,
/// decimal string beyond (exactness survives serialization).
Json json_int(const Int& v);
Int int_from_json(const Json& j);

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

Json to_json(const Phase& p);
Phase phase_from_json(const Json& j);

Json to_json(const HalfPowerScalar& s);
HalfPowerScalar half_power_from_json(const Json& j);

/// K as {"entries": [[...]]}.
Json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);

Json to_json(const SignatureTriple& s);

/// {"labels": [...], "t": [...], "omega": [[...]], "norm": {...}}; each
/// label is the concatenation of its g coordinate vectors.
Json to_json(const ModularData& d);

Json to_json(const ReconstructedTheory& th);

Json to_json(const BettiData& b);
BettiData betti_from_json(const Json& j);
Json to_json(const GluingData& d);
GluingData gluing_from_json(const Json& j);

RatMatrix rat_matrix_from_json(const Json& j);
Json to_json(const RatMatrix& m);

/// Parse text as JSON, mapping failures to ParseError.
Json parse_json(const std::string& text);

}  // namespace kmx
