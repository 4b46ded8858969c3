#include "zeroleak/json_io.hpp"

#include "zeroleak/errors.hpp"

namespace zeroleak::json_io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw DomainError("parse_error", what); }

std::uint64_t parse_index(const json& value, const std::string& what) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    malformed(what + " must be a nonnegative integer");
  }
  return value.get<std::uint64_t>();
}

json index_array(const VertexSet& set) {
  auto out = json::array();
  for (Vertex v : set) out.push_back(v);
  return out;
}

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::less_equal:
      return "<=";
    case Relation::equal:
      return "=";
    case Relation::greater_equal:
      return ">=";
  }
  return "?";
}

const char* status_name(LpStatus s) {
  switch (s) {
    case LpStatus::optimal:
      return "optimal";
    case LpStatus::infeasible:
      return "infeasible";
    case LpStatus::unbounded:
      return "unbounded";
  }
  return "?";
}

json rational_array(const std::vector<Rational>& values) {
  auto out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace

std::string canonical(const json& value) { return value.dump() + "\n"; }

json rational(const Rational& value) { return to_string(value); }

Rational parse_rational(const json& value) {
  if (value.is_string()) return zeroleak::parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  malformed("expected a rational string \"p/q\" or an integer");
}

json to_json(const Graph& g) {
  json out;
  out["n"] = g.vertex_count();
  auto edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  out["edges"] = std::move(edges);
  if (g.labels()) out["labels"] = *g.labels();
  return out;
}

Graph graph_from_json(const json& value) {
  if (!value.is_object()) malformed("graph must be a JSON object");
  if (!value.contains("n")) malformed("graph is missing \"n\"");
  const auto n = parse_index(value.at("n"), "\"n\"");
  std::vector<Edge> edges;
  if (value.contains("edges")) {
    const auto& list = value.at("edges");
    if (!list.is_array()) malformed("\"edges\" must be an array");
    for (const auto& e : list) {
      if (!e.is_array() || e.size() != 2) malformed("every edge must be a pair [u, v]");
      edges.emplace_back(parse_index(e[0], "edge endpoint"), parse_index(e[1], "edge endpoint"));
    }
  }
  std::optional<std::vector<std::string>> labels;
  if (value.contains("labels")) {
    const auto& list = value.at("labels");
    if (!list.is_array()) malformed("\"labels\" must be an array");
    labels.emplace();
    for (const auto& l : list) {
      if (!l.is_string()) malformed("labels must be strings");
      labels->push_back(l.get<std::string>());
    }
  }
  return Graph(n, std::move(edges), std::move(labels));
}

json to_json(const Hypergraph& h) {
  auto edges = json::array();
  for (const auto& e : h.hyperedges()) edges.push_back(index_array(e));
  return {{"vertices", index_array(h.vertices())}, {"hyperedges", std::move(edges)}};
}

json to_json(const VertexSetFamily& family) {
  auto sets = json::array();
  for (const auto& s : family.sets) sets.push_back(index_array(s));
  return {{"sets", std::move(sets)}, {"mult", family.multiplicities}};
}

json to_json(const StochasticMapping& m) {
  auto rows = json::array();
  for (const auto& row : m.rows()) rows.push_back(rational_array(row));
  return {{"t", m.t()}, {"codewords", m.codewords()}, {"rows", std::move(rows)}};
}

StochasticMapping mapping_from_json(const json& value) {
  if (!value.is_object()) malformed("mapping must be a JSON object");
  for (const char* key : {"t", "codewords", "rows"}) {
    if (!value.contains(key)) malformed(std::string("mapping is missing \"") + key + "\"");
  }
  const auto t = parse_index(value.at("t"), "\"t\"");
  std::vector<std::string> codewords;
  if (!value.at("codewords").is_array()) malformed("\"codewords\" must be an array");
  for (const auto& c : value.at("codewords")) {
    if (!c.is_string()) malformed("codeword identifiers must be strings");
    codewords.push_back(c.get<std::string>());
  }
  std::vector<std::vector<Rational>> rows;
  if (!value.at("rows").is_array()) malformed("\"rows\" must be an array");
  for (const auto& row : value.at("rows")) {
    if (!row.is_array()) malformed("every row must be an array");
    auto& out = rows.emplace_back();
    for (const auto& p : row) out.push_back(parse_rational(p));
  }
  return StochasticMapping(static_cast<unsigned>(t), std::move(codewords), std::move(rows));
}

GuessBudget budget_table_from_json(const json& value) {
  if (!value.is_object() || !value.contains("values") || !value.at("values").is_array()) {
    malformed("budget table must be an object with a \"values\" array");
  }
  std::vector<std::uint64_t> values;
  for (const auto& v : value.at("values")) values.push_back(parse_index(v, "budget table entry"));
  std::optional<Rational> growth;
  if (value.contains("growth")) {
    if (!value.at("growth").is_string()) malformed("\"growth\" must be a string");
    const auto text = value.at("growth").get<std::string>();
    if (text.rfind("exp:", 0) == 0) {
      growth = zeroleak::parse_rational(text.substr(4));
    } else if (text != "subexp") {
      malformed("\"growth\" must be \"subexp\" or \"exp:p/q\"");
    }
  }
  return GuessBudget::table(std::move(values), std::move(growth));
}

json to_json(const BoundsReport& report) {
  return {{"lower", rational(report.lower.log2_of)},
          {"upper", rational(report.upper.log2_of)},
          {"lower_bits", report.lower.bits()},
          {"upper_bits", report.upper.bits()},
          {"tight", report.tight},
          {"provenance", {{"lower", report.lower_provenance}, {"upper", report.upper_provenance}}},
          {"raw_lower", rational(report.raw_lower)},
          {"notes", report.notes}};
}

json to_json(const LinearProgram& program) {
  auto rows = json::array();
  for (const auto& c : program.constraints) {
    rows.push_back({{"coefficients", rational_array(c.coefficients)},
                    {"relation", relation_symbol(c.relation)},
                    {"rhs", rational(c.rhs)}});
  }
  auto bounds = json::array();
  for (const auto& b : program.bounds) {
    bounds.push_back({{"lower", b.lower ? rational(*b.lower) : json(nullptr)},
                      {"upper", b.upper ? rational(*b.upper) : json(nullptr)}});
  }
  return {{"format", "debug-v1"},
          {"sense", program.sense == Sense::minimize ? "min" : "max"},
          {"objective", rational_array(program.objective)},
          {"constraints", std::move(rows)},
          {"bounds", std::move(bounds)}};
}

json to_json(const LpSolution& solution) {
  json out = {{"format", "debug-v1"}, {"status", status_name(solution.status)}};
  if (solution.status == LpStatus::optimal) {
    out["value"] = rational(solution.value);
    out["assignment"] = rational_array(solution.assignment);
  }
  return out;
}

}  // namespace zeroleak::json_io
