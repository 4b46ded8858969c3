#include "zeroleak/leakage.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "zeroleak/errors.hpp"

namespace zeroleak {

namespace {

// x and v adjacent in the t-th OR power of gamma: distinct and adjacent in
// at least one coordinate.
bool or_power_adjacent(const Graph& gamma, unsigned t, std::size_t x, std::size_t v) {
  if (x == v) return false;
  const std::size_t n = gamma.vertex_count();
  for (unsigned j = 0; j < t; ++j) {
    if (gamma.adjacent(x % n, v % n)) return true;
    x /= n;
    v /= n;
  }
  return false;
}

std::optional<Edge> or_power_edge_within(const Graph& gamma, unsigned t, const VertexSet& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (or_power_adjacent(gamma, t, set[i], set[j])) return Edge{set[i], set[j]};
    }
  }
  return std::nullopt;
}

std::string sequence_name(const Graph& gamma, unsigned t, std::size_t index) {
  if (t == 1) return gamma.name(index);
  const auto seq = SequenceVertex::decode(index, gamma.vertex_count(), t);
  std::string out = "(";
  for (std::size_t j = 0; j < seq.symbols.size(); ++j) {
    if (j) out += ",";
    out += gamma.name(seq.symbols[j]);
  }
  return out + ")";
}

std::string set_name(const Graph& gamma, unsigned t, const VertexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += sequence_name(gamma, t, set[i]);
  }
  return out + "}";
}

// Appends "#k" to repeated identifiers so the codebook stays well-formed.
std::vector<std::string> disambiguate(std::vector<std::string> ids) {
  std::map<std::string, std::size_t> seen;
  for (const auto& id : ids) ++seen[id];
  std::map<std::string, std::size_t> next;
  std::set<std::string> used(ids.begin(), ids.end());
  for (auto& id : ids) {
    if (seen[id] == 1) continue;
    std::string candidate;
    do {
      candidate = id + "#" + std::to_string(++next[id]);
    } while (used.count(candidate));
    used.insert(candidate);
    id = std::move(candidate);
  }
  return ids;
}

void check_dimensions(const StochasticMapping& m, const Graph& gamma, const Budgets& budgets) {
  if (gamma.empty()) throw DomainError("empty_graph", "confusion graph has no vertices");
  const std::size_t expected = sequence_count(gamma.vertex_count(), m.t(), budgets.product_vertices);
  if (m.source_count() != expected) {
    throw DomainError("dimension_mismatch",
                      "mapping has " + std::to_string(m.source_count()) + " rows, expected " +
                          std::to_string(expected) + " for t=" + std::to_string(m.t()));
  }
}

std::string vertex_list(const Graph& g, const VertexSet& set) {
  return set_name(g, 1, set);
}

void check_same_alphabet(const Graph& gamma, const Graph& theta) {
  if (gamma.empty() || theta.empty()) {
    throw DomainError("empty_graph", "confusion and approximation graphs must be nonempty");
  }
  if (gamma.vertex_count() != theta.vertex_count()) {
    throw DomainError("vertex_set_mismatch",
                      "confusion graph has " + std::to_string(gamma.vertex_count()) +
                          " vertices, approximation graph has " +
                          std::to_string(theta.vertex_count()));
  }
  if (gamma.labels() && theta.labels() && *gamma.labels() != *theta.labels()) {
    throw DomainError("vertex_set_mismatch", "confusion and approximation graph labels differ");
  }
}

void set_bounds(BoundsReport& report, Rational lower, std::string lower_provenance, Rational upper,
                std::string upper_provenance) {
  report.lower = LeakageValue{std::move(lower)};
  report.upper = LeakageValue{std::move(upper)};
  report.lower_provenance = std::move(lower_provenance);
  report.upper_provenance = std::move(upper_provenance);
  report.tight = report.lower == report.upper;
}

}  // namespace

StochasticMapping::StochasticMapping(unsigned t, std::vector<std::string> codewords,
                                     std::vector<std::vector<Rational>> rows)
    : t_(t), codewords_(std::move(codewords)), rows_(std::move(rows)) {
  if (t_ == 0) throw DomainError("invalid_mapping", "t must be >= 1");
  if (codewords_.empty()) throw DomainError("invalid_mapping", "mapping has no codewords");
  if (rows_.empty()) throw DomainError("invalid_mapping", "mapping has no rows");
  std::set<std::string> distinct(codewords_.begin(), codewords_.end());
  if (distinct.size() != codewords_.size()) {
    throw DomainError("invalid_mapping", "codeword identifiers are not distinct");
  }
  supports_.assign(codewords_.size(), {});
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    const auto& row = rows_[x];
    if (row.size() != codewords_.size()) {
      throw DomainError("invalid_mapping", "row " + std::to_string(x) + " has " +
                                               std::to_string(row.size()) + " entries, expected " +
                                               std::to_string(codewords_.size()));
    }
    Rational sum = 0;
    for (std::size_t y = 0; y < row.size(); ++y) {
      if (row[y] < 0 || row[y] > 1) {
        throw DomainError("invalid_mapping", "entry (" + std::to_string(x) + "," +
                                                 std::to_string(y) + ") = " + to_string(row[y]) +
                                                 " lies outside [0,1]");
      }
      sum += row[y];
      if (row[y] != 0) supports_[y].push_back(x);
    }
    if (sum != 1) {
      throw DomainError("invalid_mapping",
                        "row " + std::to_string(x) + " sums to " + to_string(sum) + ", not 1");
    }
  }
}

std::optional<std::size_t> StochasticMapping::find_codeword(const std::string& id) const {
  const auto it = std::find(codewords_.begin(), codewords_.end(), id);
  if (it == codewords_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - codewords_.begin());
}

GuessBudget GuessBudget::constant(std::uint64_t c) {
  if (c == 0) throw DomainError("invalid_budget", "constant budget must be >= 1");
  GuessBudget g;
  g.kind_ = Kind::constant;
  g.constant_ = c;
  return g;
}

GuessBudget GuessBudget::polynomial(unsigned degree) {
  GuessBudget g;
  g.kind_ = Kind::polynomial;
  g.degree_ = degree;
  return g;
}

GuessBudget GuessBudget::exponential(const Rational& base) {
  if (base <= 1) throw DomainError("invalid_budget", "exponential base must exceed 1");
  GuessBudget g;
  g.kind_ = Kind::exponential;
  g.base_ = base;
  return g;
}

GuessBudget GuessBudget::table(std::vector<std::uint64_t> values,
                               std::optional<Rational> growth_base) {
  if (values.empty()) throw DomainError("invalid_budget", "budget table is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) throw DomainError("invalid_budget", "budget table entries must be >= 1");
    if (i && values[i] < values[i - 1]) {
      throw DomainError("invalid_budget", "budget table must be non-decreasing");
    }
  }
  if (growth_base && *growth_base <= 1) {
    throw DomainError("invalid_budget", "declared growth base must exceed 1");
  }
  GuessBudget g;
  g.kind_ = Kind::table;
  g.values_ = std::move(values);
  if (growth_base) g.base_ = *growth_base;
  return g;
}

BigInt GuessBudget::operator()(unsigned t) const {
  if (t == 0) throw DomainError("invalid_argument", "guess budget is defined for t >= 1");
  switch (kind_) {
    case Kind::constant:
      return BigInt(std::to_string(constant_));
    case Kind::polynomial: {
      BigInt r = 1;
      for (unsigned i = 0; i < degree_; ++i) r *= t;
      return r;
    }
    case Kind::exponential:
      return floor(pow(base_, t));
    case Kind::table:
      if (t > values_.size()) {
        throw DomainError("out_of_range", "budget table has no entry for t=" + std::to_string(t));
      }
      return BigInt(std::to_string(values_[t - 1]));
  }
  return 1;
}

std::optional<unsigned> GuessBudget::declared_length() const {
  if (kind_ != Kind::table) return std::nullopt;
  return static_cast<unsigned>(values_.size());
}

bool GuessBudget::sigma_is_zero() const {
  return kind_ == Kind::constant || kind_ == Kind::polynomial ||
         (kind_ == Kind::table && base_ == 1);
}

Rational GuessBudget::sigma_log2_of() const { return sigma_is_zero() ? Rational(1) : base_; }

std::string GuessBudget::describe() const {
  switch (kind_) {
    case Kind::constant:
      return "const:" + std::to_string(constant_);
    case Kind::polynomial:
      return "poly:" + std::to_string(degree_);
    case Kind::exponential:
      return "exp:" + to_string(base_);
    case Kind::table: {
      std::string out = "table:";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values_[i]);
      }
      return out + (base_ == 1 ? ";subexp" : ";exp:" + to_string(base_));
    }
  }
  return {};
}

MappingCheck validate_mapping(const StochasticMapping& m, const Graph& gamma,
                              const Budgets& budgets) {
  check_dimensions(m, gamma, budgets);
  for (std::size_t y = 0; y < m.codeword_count(); ++y) {
    if (auto edge = or_power_edge_within(gamma, m.t(), m.support(y))) {
      return MappingCheck{false, EdgeViolation{y, edge->first, edge->second}};
    }
  }
  return MappingCheck{};
}

LeakageValue maximal_leakage(const StochasticMapping& m) {
  Rational total = 0;
  for (std::size_t y = 0; y < m.codeword_count(); ++y) {
    Rational best = 0;
    for (std::size_t x = 0; x < m.source_count(); ++x) {
      if (m.probability(x, y) > best) best = m.probability(x, y);
    }
    total += best;
  }
  return LeakageValue{total};
}

OptimalLeakage optimal_leakage_t(const Graph& gamma, unsigned t, const Budgets& budgets) {
  if (gamma.empty()) throw DomainError("empty_graph", "optimal_leakage_t: graph has no vertices");
  const std::size_t count = sequence_count(gamma.vertex_count(), t, budgets.product_vertices);
  const auto sets = mis_of_or_power(gamma, t, budgets);
  const auto eta = maximin_eta(count, sets);

  std::vector<Rational> coverage(count, Rational(0));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Vertex x : sets[i]) coverage[x] += eta.weights[i];
  }

  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (eta.weights[i] != 0) used.push_back(i);
  }
  std::vector<std::string> ids;
  for (std::size_t i : used) ids.push_back(set_name(gamma, t, sets[i]));
  std::vector<std::vector<Rational>> rows(count, std::vector<Rational>(used.size(), Rational(0)));
  for (std::size_t c = 0; c < used.size(); ++c) {
    const std::size_t i = used[c];
    for (Vertex x : sets[i]) rows[x][c] = eta.weights[i] / coverage[x];
  }

  StochasticMapping witness(t, disambiguate(std::move(ids)), std::move(rows));
  const LeakageValue value{1 / eta.value};
  const LeakageValue achieved = maximal_leakage(witness);
  return OptimalLeakage{value, eta.value, std::move(witness), achieved,
                        achieved.log2_of > value.log2_of};
}

LeakageValue leakage_rate(const Graph& gamma, const Budgets& budgets) {
  return LeakageValue{fractional_chromatic(gamma, budgets).value};
}

BFoldColoring b_fold_coloring_from_weights(const Graph& gamma, std::span<const VertexSet> sets,
                                           std::span<const Rational> weights) {
  if (sets.size() != weights.size()) {
    throw DomainError("dimension_mismatch", std::to_string(weights.size()) + " weights for " +
                                                std::to_string(sets.size()) + " sets");
  }
  const std::size_t n = gamma.vertex_count();
  std::vector<Rational> coverage(n, Rational(0));
  BigInt b = 1;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (weights[i] < 0) {
      throw DomainError("infeasible_weights", "negative weight " + to_string(weights[i]));
    }
    for (Vertex v : sets[i]) {
      if (v >= n) throw DomainError("infeasible_weights", "set leaves the vertex range");
      coverage[v] += weights[i];
    }
    if (!gamma.is_independent(sets[i])) {
      throw DomainError("infeasible_weights", "set " + vertex_list(gamma, sets[i]) +
                                                  " is not independent");
    }
    if (weights[i] != 0) mpz_lcm(b.get_mpz_t(), b.get_mpz_t(), weights[i].get_den_mpz_t());
  }
  for (Vertex v = 0; v < n; ++v) {
    if (coverage[v] < 1) {
      throw DomainError("infeasible_weights", "vertex " + gamma.name(v) + " is covered only " +
                                                  to_string(coverage[v]) + " < 1");
    }
  }
  if (!b.fits_ulong_p()) throw DomainError("too_large", "b-fold scale does not fit 64 bits");

  // One entry per copy, in input order; surplus is trimmed from the last
  // copies that contain a vertex so the result is deterministic.
  std::vector<VertexSet> copies;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Rational scaled = weights[i] * b;
    const BigInt mult = scaled.get_num();
    if (!mult.fits_ulong_p() || mult.get_ui() > 10'000'000) {
      throw DomainError("too_large", "b-fold multiplicity is too large to materialize");
    }
    for (unsigned long k = 0; k < mult.get_ui(); ++k) copies.push_back(sets[i]);
  }
  const std::uint64_t fold = b.get_ui();
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t have = 0;
    for (const auto& c : copies) have += std::binary_search(c.begin(), c.end(), v);
    for (std::size_t k = copies.size(); k-- > 0 && have > fold;) {
      auto it = std::lower_bound(copies[k].begin(), copies[k].end(), v);
      if (it != copies[k].end() && *it == v) {
        copies[k].erase(it);
        --have;
      }
    }
  }

  std::map<VertexSet, std::uint64_t> grouped;
  for (auto& c : copies) {
    if (!c.empty()) ++grouped[c];
  }
  BFoldColoring result;
  result.b = fold;
  for (auto& [set, mult] : grouped) {
    result.family.sets.push_back(set);
    result.family.multiplicities.push_back(mult);
  }
  return result;
}

BFoldColoring b_fold_coloring_from_weights(const Graph& gamma, std::span<const Rational> weights,
                                           const Budgets& budgets) {
  const auto sets = maximal_independent_sets(gamma, budgets);
  return b_fold_coloring_from_weights(gamma, std::span<const VertexSet>(sets), weights);
}

ScalarScheme optimal_scalar_scheme(const Graph& gamma, const Budgets& budgets) {
  const auto fc = fractional_chromatic(gamma, budgets);
  auto coloring = b_fold_coloring_from_weights(gamma, std::span<const VertexSet>(fc.sets),
                                               std::span<const Rational>(fc.weights));
  const Rational share(1, coloring.b);
  std::vector<std::string> ids;
  std::vector<std::vector<Rational>> rows(gamma.vertex_count());
  const auto& fam = coloring.family;
  for (std::size_t i = 0; i < fam.sets.size(); ++i) {
    for (std::uint64_t k = 0; k < fam.multiplicities[i]; ++k) {
      ids.push_back(set_name(gamma, 1, fam.sets[i]));
      for (Vertex x = 0; x < gamma.vertex_count(); ++x) {
        const bool in = std::binary_search(fam.sets[i].begin(), fam.sets[i].end(), x);
        rows[x].push_back(in ? share : Rational(0));
      }
    }
  }
  StochasticMapping mapping(1, disambiguate(std::move(ids)), std::move(rows));
  return ScalarScheme{std::move(coloring), std::move(mapping)};
}

StochasticMapping optimal_scalar_mapping(const Graph& gamma, const Budgets& budgets) {
  return optimal_scalar_scheme(gamma, budgets).mapping;
}

StochasticMapping merge_codewords(const StochasticMapping& m, std::size_t y1, std::size_t y2,
                                  const Graph& gamma, const Budgets& budgets) {
  check_dimensions(m, gamma, budgets);
  if (y1 >= m.codeword_count() || y2 >= m.codeword_count()) {
    throw DomainError("out_of_range", "codeword index out of range");
  }
  if (y1 == y2) throw DomainError("invalid_argument", "cannot merge a codeword with itself");
  VertexSet joint;
  std::set_union(m.support(y1).begin(), m.support(y1).end(), m.support(y2).begin(),
                 m.support(y2).end(), std::back_inserter(joint));
  if (auto edge = or_power_edge_within(gamma, m.t(), joint)) {
    throw DomainError("not_mergeable", "codewords '" + m.codewords()[y1] + "' and '" +
                                           m.codewords()[y2] + "' cover adjacent sources " +
                                           sequence_name(gamma, m.t(), edge->first) + " and " +
                                           sequence_name(gamma, m.t(), edge->second));
  }
  const std::size_t keep = std::min(y1, y2);
  const std::size_t drop = std::max(y1, y2);
  std::vector<std::string> ids = m.codewords();
  std::string merged = m.codewords()[y1] + "+" + m.codewords()[y2];
  while (std::find(ids.begin(), ids.end(), merged) != ids.end()) merged += "'";
  ids[keep] = merged;
  ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(drop));
  std::vector<std::vector<Rational>> rows = m.rows();
  for (std::size_t x = 0; x < rows.size(); ++x) {
    rows[x][keep] = m.probability(x, y1) + m.probability(x, y2);
    rows[x].erase(rows[x].begin() + static_cast<std::ptrdiff_t>(drop));
  }
  return StochasticMapping(m.t(), std::move(ids), std::move(rows));
}

BoundsReport multi_guess_bounds(const Graph& gamma, const GuessBudget& g, const Budgets& budgets) {
  if (gamma.empty()) throw DomainError("empty_graph", "multi_guess_bounds: graph has no vertices");
  const std::size_t alpha = independence_number(gamma, budgets);
  if (auto length = g.declared_length()) {
    BigInt cap = 1;
    for (unsigned t = 1; t <= *length; ++t) {
      cap *= static_cast<unsigned long>(alpha);
      if (g(t) > cap) {
        throw DomainError("inadmissible_budget", "g(" + std::to_string(t) + ") = " +
                                                     g(t).get_str() + " exceeds alpha^t = " +
                                                     cap.get_str());
      }
    }
  }
  const Rational chi_f = fractional_chromatic(gamma, budgets).value;
  Rational ratio(static_cast<unsigned long>(gamma.vertex_count()),
                 static_cast<unsigned long>(alpha));
  ratio.canonicalize();

  BoundsReport report;
  report.raw_lower = ratio;
  bool transitive = false;
  if (gamma.vertex_count() <= budgets.automorphism_vertices) {
    transitive = is_vertex_transitive(gamma, budgets);
  } else {
    report.notes.push_back("vertex transitivity not checked: graph exceeds the automorphism budget");
  }
  if (transitive) report.notes.push_back("confusion graph is vertex-transitive");
  if (g.sigma_is_zero()) report.notes.push_back("guess budget grows sub-exponentially");

  if (transitive) {
    set_bounds(report, chi_f, "vertex_transitive", chi_f, "fractional_chromatic");
  } else if (g.sigma_is_zero()) {
    set_bounds(report, chi_f, "subexponential_budget", chi_f, "fractional_chromatic");
  } else {
    set_bounds(report, ratio, "independence_ratio", chi_f, "fractional_chromatic");
  }
  return report;
}

Rational max_associated_covering(const Graph& gamma, const Graph& theta, const Budgets& budgets) {
  check_same_alphabet(gamma, theta);
  Rational best = 0;
  for (const auto& T : maximal_independent_sets(gamma, budgets)) {
    const Rational kf = fractional_covering(associated_hypergraph(T, theta)).value;
    if (kf > best) best = kf;
  }
  return best;
}

BoundsReport approx_guess_bounds(const Graph& gamma, const Graph& theta, const Budgets& budgets) {
  check_same_alphabet(gamma, theta);
  const Rational packing = fractional_packing(theta).value;
  const Rational covering = max_associated_covering(gamma, theta, budgets);
  const Rational ratio = packing / covering;
  const Rational chi_f = fractional_chromatic(gamma, budgets).value;

  BoundsReport report;
  report.raw_lower = ratio;
  if (ratio < 1) {
    report.notes.push_back("packing/covering ratio " + to_string(ratio) +
                           " is below 1; lower bound floored at zero leakage");
    set_bounds(report, Rational(1), "zero_floor", chi_f, "fractional_chromatic");
  } else {
    set_bounds(report, ratio, "packing_over_covering", chi_f, "fractional_chromatic");
  }
  return report;
}

BoundsReport multi_approx_guess_bounds(const Graph& gamma, const Graph& theta,
                                       const GuessBudget& g, const Budgets& budgets) {
  check_same_alphabet(gamma, theta);
  if (auto length = g.declared_length()) {
    for (unsigned t = 1; t <= *length; ++t) {
      const Graph theta_power = and_power(theta, t, budgets);
      std::size_t cap = 0;
      for (const auto& T : mis_of_or_power(gamma, t, budgets)) {
        cap = std::max(cap, covering_number(associated_hypergraph(T, theta_power), budgets));
      }
      if (g(t) > static_cast<unsigned long>(cap)) {
        throw DomainError("inadmissible_budget",
                          "g(" + std::to_string(t) + ") = " + g(t).get_str() +
                              " exceeds the largest associated covering number " +
                              std::to_string(cap));
      }
    }
  }
  BoundsReport report = approx_guess_bounds(gamma, theta, budgets);
  report.notes.insert(report.notes.begin(),
                      "bounds do not depend on the number of approximate guesses");
  if (g.sigma_is_zero()) {
    report.notes.push_back(
        "guess budget grows sub-exponentially: leakage equals the single approximate guess "
        "leakage");
  }
  return report;
}

}  // namespace zeroleak
