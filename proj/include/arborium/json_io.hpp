#pragma once

#include <json.hpp>

#include "arborium/invariants.hpp"
#include "arborium/poly.hpp"
#include "arborium/verify.hpp"

namespace arborium {

/// {"terms": [{"coeff": "5/2", "exponents": {"u": 2}}, ...]} in canonical term order.
nlohmann::json poly_to_json(const MultiPoly& p);
/// Inverse of poly_to_json. Throws AlgebraError on unknown variables or malformed entries.
MultiPoly poly_from_json(const nlohmann::json& j);

/// {"theorem", "order", "per_order": [{"n", "pass", "lhs", "rhs"[, "diff"]}], "checks", "overall"}.
nlohmann::json report_to_json(const Report& report);

/// {"arbor": text, "size": n, <invariant>: {"text": ..., "terms": [...]}, "volume": "p/q"}.
nlohmann::json bundle_to_json(const InvariantBundle& bundle);

}  // namespace arborium
