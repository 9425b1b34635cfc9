#pragma once

#include "operadix/rewriting.hpp"
#include "operadix/theorem.hpp"

#include <nlohmann/json.hpp>

namespace operadix {

/// `{checks: [{id, name, status, details, elapsed_ms}], overall, fixtures}`.
/// Without timing every elapsed_ms is 0, so repeated runs are byte-identical.
nlohmann::json to_json(const TheoremReport& report, bool with_timing = true);

/// Order, generators, rules as (tree text, coefficient) lists and the
/// completion status.
nlohmann::json to_json(const RewriteSystem<Rational>& sys);
RewriteSystem<Rational> rewrite_system_from_json(const nlohmann::json& j);

}  // namespace operadix
