#pragma once

#include <string>

#include <json.hpp>

#include "zeroleak/graph.hpp"
#include "zeroleak/leakage.hpp"
#include "zeroleak/lp.hpp"
#include "zeroleak/rational.hpp"

namespace zeroleak::json_io {

using nlohmann::json;

/// Sorted keys, compact, trailing newline.
std::string canonical(const json& value);

json rational(const Rational& value);
/// Accepts "p/q" strings or JSON integers. Throws DomainError("parse_error").
Rational parse_rational(const json& value);

/// {"n": N, "edges": [[u, v], ...], "labels": [...]} (labels only when set).
json to_json(const Graph& g);
Graph graph_from_json(const json& value);

/// {"vertices": [...], "hyperedges": [[...], ...]}
json to_json(const Hypergraph& h);
/// {"sets": [[...], ...], "mult": [...]}
json to_json(const VertexSetFamily& family);

/// {"t": T, "codewords": [...], "rows": [["p/q", ...], ...]}
json to_json(const StochasticMapping& m);
StochasticMapping mapping_from_json(const json& value);

/// {"values": [g(1), g(2), ...], "growth": "subexp" | "exp:p/q"}
GuessBudget budget_table_from_json(const json& value);

json to_json(const BoundsReport& report);

/// Debug dump of a program and its solution, tagged "debug-v1".
json to_json(const LinearProgram& program);
json to_json(const LpSolution& solution);

}  // namespace zeroleak::json_io
