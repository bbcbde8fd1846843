#pragma once

#include <string>

#include <json.hpp>

#include "slocc/classify.hpp"
#include "slocc/verify.hpp"

namespace slocc::cli {

using Json = nlohmann::ordered_json;

/// Reads a state document {"0000": "1", "1111": "1"}; absent keys are zero.
/// Throws ParseError naming the offending key or amplitude.
StateVector read_state(const std::string& path);
StateVector parse_state(const std::string& text);

/// Nonzero amplitudes keyed by bit string, in ascending bit order.
Json state_json(const StateVector& x);
Json signature_json(const InvariantSignature& sig);
Json params_json(const std::vector<GaussianRational>& params);
Json quad_json(const SL2Quad& g);

Json report_json(const ClassificationReport& r);
Json verdict_json(const ConjugacyVerdict& v);
Json entry_json(const CatalogEntry& e, bool detailed);
Json suite_json(const SuiteReport& r);

/// Text rendering of a JSON document: one "key: value" line per scalar,
/// nested objects indented, arrays of scalars joined by commas.
std::string render_text(const Json& doc);

}  // namespace slocc::cli
