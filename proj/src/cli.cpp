#include "zeroleak/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "zeroleak/errors.hpp"
#include "zeroleak/json_io.hpp"
#include "zeroleak/leakage.hpp"
#include "zeroleak/oracle.hpp"

#ifndef ZEROLEAK_FIXTURE_DIR
#define ZEROLEAK_FIXTURE_DIR "fixtures"
#endif

namespace zeroleak::cli {

namespace {

using json_io::json;

struct Options {
  std::vector<std::string> graphs;
  std::string theta;
  std::string mapping;
  unsigned t = 1;
  std::string budget;
  unsigned grid = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::string out;
  std::string op = "or";
  std::string y1;
  std::string y2;
  std::string check;
};

std::string fixture_dir() {
  if (const char* dir = std::getenv("ZEROLEAK_FIXTURES"); dir && *dir) return dir;
  return ZEROLEAK_FIXTURE_DIR;
}

json load_json(const std::string& where) {
  std::string path = where;
  if (where.rfind("fixture:", 0) == 0) path = fixture_dir() + "/" + where.substr(8) + ".json";
  std::ifstream in(path);
  if (!in) throw DomainError("io_error", "cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("parse_error", "'" + path + "': " + e.what());
  }
}

Graph load_graph(const std::string& where) { return json_io::graph_from_json(load_json(where)); }

GuessBudget parse_budget(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw DomainError("parse_error", "budget must look like const:c, poly:d, exp:p/q or table:PATH");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  auto integer = [&] {
    const Rational r = zeroleak::parse_rational(arg);
    if (r.get_den() != 1 || r < 0 || !r.get_num().fits_ulong_p()) {
      throw DomainError("parse_error", "budget parameter must be a nonnegative integer");
    }
    return r.get_num().get_ui();
  };
  if (kind == "const") return GuessBudget::constant(integer());
  if (kind == "poly") return GuessBudget::polynomial(static_cast<unsigned>(integer()));
  if (kind == "exp") return GuessBudget::exponential(zeroleak::parse_rational(arg));
  if (kind == "table") return json_io::budget_table_from_json(load_json(arg));
  throw DomainError("parse_error", "unknown budget kind '" + kind + "'");
}

const Graph& only_graph(const std::vector<Graph>& graphs) {
  if (graphs.size() != 1) throw DomainError("usage", "exactly one --graph is required");
  return graphs.front();
}

json with_bits(json body, const char* key, const Rational& value) {
  body[key] = json_io::rational(value);
  body["bits"] = display_bits(value);
  return body;
}

void require_valid(const StochasticMapping& m, const Graph& gamma, const Budgets& budgets) {
  const auto check = validate_mapping(m, gamma, budgets);
  if (!check.valid) {
    const auto& v = *check.violation;
    throw DomainError("invalid_mapping", "codeword '" + m.codewords()[v.codeword] +
                                             "' covers adjacent sources " + std::to_string(v.x) +
                                             " and " + std::to_string(v.v));
  }
}

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw DomainError("usage", std::string(flag) + " is required");
  return value;
}

std::size_t codeword_index(const StochasticMapping& m, const std::string& id) {
  if (auto y = m.find_codeword(id)) return *y;
  throw DomainError("unknown_codeword", "no codeword named '" + id + "'");
}

json run_oracle(const Options& o, const std::vector<Graph>& graphs, const Budgets& budgets,
                bool& failed) {
  oracle::Report report;
  auto grid_for = [&](std::size_t symbols, unsigned fallback) {
    return oracle::DistributionGrid(symbols, o.grid ? o.grid : fallback, budgets);
  };
  if (o.check == "eta-duality") {
    report = oracle::verify_eta_duality(only_graph(graphs), o.t, budgets);
  } else if (o.check == "packing-reciprocity") {
    const Graph theta = o.theta.empty() ? only_graph(graphs) : load_graph(o.theta);
    if (theta.empty()) throw DomainError("empty_graph", "graph has no vertices");
    const auto n = static_cast<unsigned>(theta.vertex_count());
    report = oracle::verify_packing_reciprocity(theta, grid_for(n, n));
  } else if (o.check == "multi-guess-lower") {
    const GuessBudget g = o.budget.empty() ? GuessBudget::constant(1) : parse_budget(o.budget);
    report = oracle::verify_multi_guess_lower(only_graph(graphs), g, o.t, o.grid ? o.grid : 4,
                                              o.trials, o.seed, budgets);
  } else if (o.check == "mergeability-closure") {
    report = oracle::verify_mergeability_closure(only_graph(graphs), o.t, o.trials, o.seed,
                                                 o.grid ? o.grid : 4, budgets);
  } else if (o.check == "singleton-closed-form") {
    const Graph& gamma = only_graph(graphs);
    const auto m = json_io::mapping_from_json(load_json(need(o.mapping, "--mapping")));
    require_valid(m, gamma, budgets);
    const auto n = static_cast<unsigned>(gamma.vertex_count());
    report = oracle::verify_singleton_closed_form(m, grid_for(n, n));
  } else {
    throw DomainError("usage", "unknown oracle check '" + o.check + "'");
  }
  failed = report.status == oracle::Status::fail;
  return oracle::to_json(report);
}

json dispatch(const std::string& command, const Options& o, const Budgets& budgets,
              bool& failed) {
  std::vector<Graph> graphs;
  for (const auto& g : o.graphs) graphs.push_back(load_graph(g));
  auto base = [&]() -> const Graph& {
    const Graph& g = only_graph(graphs);
    if (g.empty()) throw DomainError("empty_graph", "graph has no vertices");
    return g;
  };
  auto powered = [&]() { return o.t == 1 ? base() : or_power(base(), o.t, budgets); };

  if (command == "info") {
    const Graph& g = base();
    const auto sets = maximal_independent_sets(g, budgets);
    json body = {{"graph", json_io::to_json(g)},
                 {"vertices", g.vertex_count()},
                 {"edges", g.edges().size()},
                 {"independent_sets", sets.size()},
                 {"alpha", independence_number(g, budgets)}};
    const Rational chi = fractional_chromatic(g, budgets).value;
    body["chi_f"] = json_io::rational(chi);
    body["chi_f_bits"] = display_bits(chi);
    body["vertex_transitive"] = g.vertex_count() <= budgets.automorphism_vertices
                                    ? json(is_vertex_transitive(g, budgets))
                                    : json(nullptr);
    return body;
  }
  if (command == "product") {
    if (o.op != "or" && o.op != "and") throw DomainError("usage", "--op must be 'or' or 'and'");
    const bool is_or = o.op == "or";
    if (graphs.size() == 2) {
      return json_io::to_json(is_or ? or_product(graphs[0], graphs[1], budgets)
                                    : and_product(graphs[0], graphs[1], budgets));
    }
    const Graph& g = only_graph(graphs);
    return json_io::to_json(is_or ? or_power(g, o.t, budgets) : and_power(g, o.t, budgets));
  }
  if (command == "chif") {
    return with_bits(json::object(), "chi_f", fractional_chromatic(powered(), budgets).value);
  }
  if (command == "alpha") {
    return {{"alpha", independence_number(powered(), budgets)}};
  }
  if (command == "mis") {
    const auto sets = mis_of_or_power(base(), o.t, budgets);
    auto list = json::array();
    for (const auto& s : sets) list.push_back(s);
    return {{"count", sets.size()}, {"sets", std::move(list)}, {"t", o.t}};
  }
  if (command == "leakage-eval") {
    const Graph& g = base();
    const auto m = json_io::mapping_from_json(load_json(need(o.mapping, "--mapping")));
    require_valid(m, g, budgets);
    return with_bits(json::object(), "log2_of", maximal_leakage(m).log2_of);
  }
  if (command == "leakage-optimal") {
    const auto opt = optimal_leakage_t(base(), o.t, budgets);
    json body = with_bits(json::object(), "log2_of", opt.value.log2_of);
    body["eta"] = json_io::rational(opt.eta);
    body["t"] = o.t;
    body["witness"] = json_io::to_json(opt.witness);
    body["witness_log2_of"] = json_io::rational(opt.witness_value.log2_of);
    body["witness_gap"] = opt.witness_gap;
    return body;
  }
  if (command == "scheme") {
    const auto scheme = optimal_scalar_scheme(base(), budgets);
    json body = with_bits(json::object(), "log2_of", maximal_leakage(scheme.mapping).log2_of);
    body["b"] = scheme.coloring.b;
    body["family"] = json_io::to_json(scheme.coloring.family);
    body["mapping"] = json_io::to_json(scheme.mapping);
    return body;
  }
  if (command == "merge") {
    const Graph& g = base();
    const auto m = json_io::mapping_from_json(load_json(need(o.mapping, "--mapping")));
    require_valid(m, g, budgets);
    const auto merged = merge_codewords(m, codeword_index(m, o.y1), codeword_index(m, o.y2), g,
                                        budgets);
    return {{"mapping", json_io::to_json(merged)},
            {"log2_of_before", json_io::rational(maximal_leakage(m).log2_of)},
            {"log2_of_after", json_io::rational(maximal_leakage(merged).log2_of)}};
  }
  if (command == "bounds-multi") {
    const GuessBudget g = parse_budget(need(o.budget, "--budget"));
    json body = json_io::to_json(multi_guess_bounds(base(), g, budgets));
    body["budget"] = g.describe();
    return body;
  }
  if (command == "bounds-approx") {
    return json_io::to_json(approx_guess_bounds(base(), load_graph(need(o.theta, "--theta")), budgets));
  }
  if (command == "bounds-multi-approx") {
    const GuessBudget g = parse_budget(need(o.budget, "--budget"));
    json body =
        json_io::to_json(multi_approx_guess_bounds(base(), load_graph(need(o.theta, "--theta")), g, budgets));
    body["budget"] = g.describe();
    return body;
  }
  if (command == "oracle") return run_oracle(o, graphs, budgets, failed);
  throw DomainError("usage", "unknown subcommand '" + command + "'");
}

void emit_error(std::ostream& err, const std::string& code, const std::string& message,
                const std::string& budget = {}) {
  json body = {{"code", code}, {"message", message}};
  if (!budget.empty()) body["budget"] = budget;
  err << json_io::canonical(json{{"error", body}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact leakage computations for zero-error source coding", "zeroleak"};
  app.require_subcommand(1);
  Options o;

  struct Spec {
    const char* name;
    const char* help;
    std::vector<std::string> flags;
  };
  const std::vector<Spec> specs = {
      {"info", "summary of a graph", {"graph"}},
      {"product", "OR/AND product or power", {"graph", "op", "t"}},
      {"chif", "fractional chromatic number", {"graph", "t"}},
      {"alpha", "independence number", {"graph", "t"}},
      {"mis", "maximal independent sets", {"graph", "t"}},
      {"leakage-eval", "maximal leakage of a valid mapping", {"graph", "mapping"}},
      {"leakage-optimal", "optimal leakage at length t with a witness", {"graph", "t"}},
      {"scheme", "optimal single-letter scheme", {"graph"}},
      {"merge", "merge two codewords", {"graph", "mapping", "y1", "y2"}},
      {"bounds-multi", "multi-guess bounds", {"graph", "budget"}},
      {"bounds-approx", "approximate-guess bounds", {"graph", "theta"}},
      {"bounds-multi-approx", "multi-approximate-guess bounds", {"graph", "theta", "budget"}},
      {"oracle",
       "brute-force verifier",
       {"graph", "theta", "mapping", "t", "budget", "grid", "seed", "trials", "check"}},
  };
  const std::map<std::string, std::function<void(CLI::App*)>> add = {
      {"graph",
       [&](CLI::App* s) { s->add_option("--graph", o.graphs, "PATH or fixture:NAME"); }},
      {"theta", [&](CLI::App* s) { s->add_option("--theta", o.theta, "approximation graph"); }},
      {"mapping", [&](CLI::App* s) { s->add_option("--mapping", o.mapping, "mapping JSON"); }},
      {"t", [&](CLI::App* s) { s->add_option("--t", o.t, "sequence length")->check(CLI::PositiveNumber); }},
      {"budget",
       [&](CLI::App* s) {
         s->add_option("--budget", o.budget, "const:c | poly:d | exp:p/q | table:PATH");
       }},
      {"grid", [&](CLI::App* s) { s->add_option("--grid", o.grid, "grid resolution"); }},
      {"seed", [&](CLI::App* s) { s->add_option("--seed", o.seed, "random seed"); }},
      {"trials", [&](CLI::App* s) { s->add_option("--trials", o.trials, "random trials"); }},
      {"op", [&](CLI::App* s) { s->add_option("--op", o.op, "or | and"); }},
      {"y1", [&](CLI::App* s) { s->add_option("--y1", o.y1, "codeword id")->required(); }},
      {"y2", [&](CLI::App* s) { s->add_option("--y2", o.y2, "codeword id")->required(); }},
      {"check", [&](CLI::App* s) { s->add_option("--check", o.check, "check name")->required(); }},
  };
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    for (const auto& flag : spec.flags) add.at(flag)(sub);
    sub->add_option("--out", o.out, "write the result here instead of stdout");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what());
    return domain_error;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    Budgets budgets;
    if (const char* env = std::getenv("ZEROLEAK_BUDGET"); env && *env) {
      budgets = Budgets::parse_override(env);
    }
    bool failed = false;
    const std::string text = json_io::canonical(dispatch(command, o, budgets, failed));
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw DomainError("io_error", "cannot write '" + o.out + "'");
      file << text;
    }
    return failed ? oracle_failure : ok;
  } catch (const DomainError& e) {
    emit_error(err, e.code(), e.what());
    return domain_error;
  } catch (const ResourceError& e) {
    emit_error(err, "resource_exhausted", e.what(), e.budget());
    return resource_error;
  }
}

}  // namespace zeroleak::cli
