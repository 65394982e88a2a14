#pragma once

#include <json.hpp>

#include "linerig/analyze.hpp"
#include "linerig/certificate.hpp"
#include "linerig/graph.hpp"
#include "linerig/multipoly.hpp"
#include "linerig/realization.hpp"
#include "linerig/refute.hpp"

namespace linerig {

using Json = nlohmann::json;

// Every *_from_json throws Error on malformed or inconsistent input.

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json realization_to_json(const Realization& p);
Realization realization_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

/// Includes the base graph so the witness is self-contained.
Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json reason_to_json(const RefutationReason& r);
RefutationReason reason_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

/// Structural equality used by the round-trip checks.
bool same_certificate(const Certificate& a, const Certificate& b);
bool same_witness(const Witness& a, const Witness& b);
bool same_reason(const RefutationReason& a, const RefutationReason& b);
bool same_verdict(const Verdict& a, const Verdict& b);

}  // namespace linerig
