#include "zeroleak/lp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "zeroleak/errors.hpp"

namespace zeroleak {
namespace {

// How an original variable is expressed through nonnegative tableau columns.
struct Substitution {
  enum class Kind { shifted, reflected, split } kind = Kind::shifted;
  std::size_t column = 0;    // y (or y+ for split)
  std::size_t negative = 0;  // y- for split
  Rational offset;           // lower bound (shifted) or upper bound (reflected)
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t columns)
      : cells_(rows, std::vector<Rational>(columns + 1)), basis_(rows) {}

  std::size_t rows() const { return cells_.size(); }
  std::size_t columns() const { return cells_.empty() ? 0 : cells_.front().size() - 1; }
  Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  Rational& rhs(std::size_t r) { return cells_[r].back(); }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void pivot(std::size_t row, std::size_t column, std::vector<Rational>& costs, Rational& value) {
    auto& pivot_row = cells_[row];
    const Rational inverse = 1 / pivot_row[column];
    std::vector<std::size_t> nonzero;
    for (std::size_t c = 0; c < pivot_row.size(); ++c) {
      if (sgn(pivot_row[c]) != 0) {
        pivot_row[c] *= inverse;
        nonzero.push_back(c);
      }
    }
    Rational factor;
    for (std::size_t r = 0; r < cells_.size(); ++r) {
      if (r == row || sgn(cells_[r][column]) == 0) continue;
      factor = cells_[r][column];
      for (std::size_t c : nonzero) cells_[r][c] -= factor * pivot_row[c];
    }
    if (sgn(costs[column]) != 0) {
      factor = costs[column];
      for (std::size_t c : nonzero) {
        if (c + 1 == pivot_row.size()) {
          value += factor * pivot_row[c];
        } else {
          costs[c] -= factor * pivot_row[c];
        }
      }
    }
    basis_[row] = column;
  }

  void erase_row(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
};

enum class Outcome { optimal, unbounded };

// Minimizes with reduced costs `costs`; `value` tracks the objective. Columns
// flagged in `barred` never enter.
Outcome run_simplex(Tableau& tableau, std::vector<Rational>& costs, Rational& value,
                    const std::vector<bool>& barred) {
  for (;;) {
    std::size_t entering = tableau.columns();
    for (std::size_t c = 0; c < tableau.columns(); ++c) {
      if (!barred[c] && sgn(costs[c]) < 0) {
        entering = c;
        break;
      }
    }
    if (entering == tableau.columns()) return Outcome::optimal;

    std::size_t leaving = tableau.rows();
    Rational best_ratio;
    for (std::size_t r = 0; r < tableau.rows(); ++r) {
      if (sgn(tableau.at(r, entering)) <= 0) continue;
      Rational ratio = tableau.rhs(r) / tableau.at(r, entering);
      if (leaving == tableau.rows() || ratio < best_ratio ||
          (ratio == best_ratio && tableau.basic(r) < tableau.basic(leaving))) {
        leaving = r;
        best_ratio = std::move(ratio);
      }
    }
    if (leaving == tableau.rows()) return Outcome::unbounded;
    tableau.pivot(leaving, entering, costs, value);
  }
}

void require_no_exposed(const Hypergraph& h) {
  if (const auto v = h.exposed_vertex()) {
    throw DomainError("exposed_vertex",
                      "vertex " + std::to_string(*v) + " lies in no hyperedge");
  }
}

// Covering LP over an incidence structure: minimize sum w_s subject to every
// element being covered at least once. `upper_one` adds w_s <= 1.
FractionalSolution covering_lp(const std::vector<VertexSet>& sets,
                               const std::vector<std::size_t>& elements, bool upper_one) {
  LinearProgram lp;
  lp.sense = Sense::minimize;
  lp.objective.assign(sets.size(), Rational(1));
  for (std::size_t x : elements) {
    Constraint row{std::vector<Rational>(sets.size()), Relation::greater_equal, Rational(1)};
    for (std::size_t s = 0; s < sets.size(); ++s) {
      if (std::binary_search(sets[s].begin(), sets[s].end(), x)) row.coefficients[s] = 1;
    }
    lp.constraints.push_back(std::move(row));
  }
  if (upper_one) lp.bounds.assign(sets.size(), VariableBound{Rational(0), Rational(1)});
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) {
    throw std::logic_error("covering LP unexpectedly not optimal");
  }
  return FractionalSolution{sol.value, sets, sol.assignment};
}

}  // namespace

void LinearProgram::validate() const {
  const std::size_t n = objective.size();
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].coefficients.size() != n) {
      throw DomainError("dimension_mismatch",
                        "constraint " + std::to_string(i) + " has " +
                            std::to_string(constraints[i].coefficients.size()) +
                            " coefficients, objective has " + std::to_string(n));
    }
  }
  if (!bounds.empty() && bounds.size() != n) {
    throw DomainError("dimension_mismatch", "bounds cover " + std::to_string(bounds.size()) +
                                                " variables, objective has " + std::to_string(n));
  }
}

bool LinearProgram::satisfied_by(const std::vector<Rational>& x) const {
  if (x.size() != objective.size()) return false;
  for (const auto& row : constraints) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += row.coefficients[j] * x[j];
    const int cmp = ::cmp(lhs, row.rhs);
    if ((row.relation == Relation::less_equal && cmp > 0) ||
        (row.relation == Relation::equal && cmp != 0) ||
        (row.relation == Relation::greater_equal && cmp < 0)) {
      return false;
    }
  }
  if (!bounds.empty()) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (bounds[j].lower && x[j] < *bounds[j].lower) return false;
      if (bounds[j].upper && x[j] > *bounds[j].upper) return false;
    }
  }
  return true;
}

LpSolution solve_lp(const LinearProgram& program) {
  program.validate();
  const std::size_t n = program.variable_count();

  // Rewrite every variable through nonnegative columns.
  std::vector<Substitution> subs(n);
  std::size_t columns = 0;
  struct Row {
    std::vector<std::pair<std::size_t, Rational>> terms;  // (original var, coeff)
    Relation relation;
    Rational rhs;
  };
  std::vector<Row> extra;  // finite upper bounds of shifted variables
  for (std::size_t j = 0; j < n; ++j) {
    const VariableBound bound = program.bounds.empty() ? VariableBound{} : program.bounds[j];
    if (bound.lower && bound.upper && *bound.lower > *bound.upper) {
      return LpSolution{LpStatus::infeasible, Rational(0), {}};
    }
    if (bound.lower) {
      subs[j] = {Substitution::Kind::shifted, columns++, 0, *bound.lower};
      if (bound.upper) {
        extra.push_back(Row{{{j, Rational(1)}}, Relation::less_equal, *bound.upper});
      }
    } else if (bound.upper) {
      subs[j] = {Substitution::Kind::reflected, columns++, 0, *bound.upper};
    } else {
      subs[j] = {Substitution::Kind::split, columns, columns + 1, Rational(0)};
      columns += 2;
    }
  }
  const std::size_t structural = columns;

  // Rows over structural columns with b >= 0.
  struct StdRow {
    std::vector<Rational> coefficients;
    Relation relation;
    Rational rhs;
  };
  std::vector<StdRow> rows;
  auto add_row = [&](const std::vector<std::pair<std::size_t, Rational>>& terms,
                     Relation relation, Rational rhs) {
    StdRow row{std::vector<Rational>(structural), relation, std::move(rhs)};
    for (const auto& [j, a] : terms) {
      if (sgn(a) == 0) continue;
      const Substitution& s = subs[j];
      switch (s.kind) {
        case Substitution::Kind::shifted:
          row.coefficients[s.column] += a;
          row.rhs -= a * s.offset;
          break;
        case Substitution::Kind::reflected:
          row.coefficients[s.column] -= a;
          row.rhs -= a * s.offset;
          break;
        case Substitution::Kind::split:
          row.coefficients[s.column] += a;
          row.coefficients[s.negative] -= a;
          break;
      }
    }
    if (sgn(row.rhs) < 0) {
      row.rhs = -row.rhs;
      for (auto& c : row.coefficients) c = -c;
      if (row.relation == Relation::less_equal) {
        row.relation = Relation::greater_equal;
      } else if (row.relation == Relation::greater_equal) {
        row.relation = Relation::less_equal;
      }
    }
    rows.push_back(std::move(row));
  };
  for (const auto& c : program.constraints) {
    std::vector<std::pair<std::size_t, Rational>> terms;
    for (std::size_t j = 0; j < n; ++j) terms.emplace_back(j, c.coefficients[j]);
    add_row(terms, c.relation, c.rhs);
  }
  for (const auto& r : extra) add_row(r.terms, r.relation, r.rhs);

  // Column layout: structural | slack/surplus | artificial.
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& r : rows) {
    if (r.relation != Relation::equal) ++slack_count;
    if (r.relation != Relation::less_equal) ++artificial_count;
  }
  const std::size_t total = structural + slack_count + artificial_count;
  const std::size_t first_artificial = structural + slack_count;
  Tableau tableau(rows.size(), total);
  std::vector<Rational> costs(total);
  Rational phase_value = 0;
  {
    std::size_t slack = structural;
    std::size_t artificial = first_artificial;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t c = 0; c < structural; ++c) tableau.at(i, c) = rows[i].coefficients[c];
      tableau.rhs(i) = rows[i].rhs;
      switch (rows[i].relation) {
        case Relation::less_equal:
          tableau.at(i, slack) = 1;
          tableau.basic(i) = slack++;
          break;
        case Relation::greater_equal:
          tableau.at(i, slack++) = -1;
          tableau.at(i, artificial) = 1;
          tableau.basic(i) = artificial++;
          break;
        case Relation::equal:
          tableau.at(i, artificial) = 1;
          tableau.basic(i) = artificial++;
          break;
      }
    }
  }

  std::vector<bool> barred(total, false);
  if (artificial_count > 0) {
    // Phase 1: minimize the sum of artificials.
    for (std::size_t c = first_artificial; c < total; ++c) costs[c] = 1;
    for (std::size_t i = 0; i < tableau.rows(); ++i) {
      if (tableau.basic(i) < first_artificial) continue;
      for (std::size_t c = 0; c < total; ++c) costs[c] -= tableau.at(i, c);
      phase_value += tableau.rhs(i);
    }
    run_simplex(tableau, costs, phase_value, barred);
    if (sgn(phase_value) != 0) return LpSolution{LpStatus::infeasible, Rational(0), {}};

    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = tableau.rows(); i-- > 0;) {
      if (tableau.basic(i) < first_artificial) continue;
      std::size_t column = first_artificial;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (sgn(tableau.at(i, c)) != 0) {
          column = c;
          break;
        }
      }
      if (column == first_artificial) {
        tableau.erase_row(i);
      } else {
        tableau.pivot(i, column, costs, phase_value);
      }
    }
    for (std::size_t c = first_artificial; c < total; ++c) barred[c] = true;
  }

  // Phase 2: minimize the (possibly negated) original objective.
  std::fill(costs.begin(), costs.end(), Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational c = program.objective[j];
    if (program.sense == Sense::maximize) c = -c;
    const Substitution& s = subs[j];
    switch (s.kind) {
      case Substitution::Kind::shifted:
        costs[s.column] += c;
        break;
      case Substitution::Kind::reflected:
        costs[s.column] -= c;
        break;
      case Substitution::Kind::split:
        costs[s.column] += c;
        costs[s.negative] -= c;
        break;
    }
  }
  Rational value = 0;
  for (std::size_t i = 0; i < tableau.rows(); ++i) {
    const std::size_t b = tableau.basic(i);
    if (sgn(costs[b]) == 0) continue;
    const Rational cb = costs[b];
    for (std::size_t c = 0; c < total; ++c) {
      if (sgn(tableau.at(i, c)) != 0) costs[c] -= cb * tableau.at(i, c);
    }
    value += cb * tableau.rhs(i);
  }
  if (run_simplex(tableau, costs, value, barred) == Outcome::unbounded) {
    return LpSolution{LpStatus::unbounded, Rational(0), {}};
  }

  std::vector<Rational> y(total);
  for (std::size_t i = 0; i < tableau.rows(); ++i) y[tableau.basic(i)] = tableau.rhs(i);
  LpSolution solution{LpStatus::optimal, Rational(0), std::vector<Rational>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    const Substitution& s = subs[j];
    switch (s.kind) {
      case Substitution::Kind::shifted:
        solution.assignment[j] = s.offset + y[s.column];
        break;
      case Substitution::Kind::reflected:
        solution.assignment[j] = s.offset - y[s.column];
        break;
      case Substitution::Kind::split:
        solution.assignment[j] = y[s.column] - y[s.negative];
        break;
    }
    solution.value += program.objective[j] * solution.assignment[j];
  }
  if (!program.satisfied_by(solution.assignment)) {
    throw std::logic_error("simplex produced an assignment violating a constraint");
  }
  return solution;
}

FractionalSolution fractional_chromatic(const Graph& g, const Budgets& budgets) {
  return fractional_chromatic(g.vertex_count(), maximal_independent_sets(g, budgets));
}

FractionalSolution fractional_chromatic(std::size_t vertex_count,
                                        const std::vector<VertexSet>& independent_sets) {
  std::vector<std::size_t> elements(vertex_count);
  std::iota(elements.begin(), elements.end(), std::size_t{0});
  return covering_lp(independent_sets, elements, /*upper_one=*/true);
}

FractionalSolution maximin_eta(const Graph& g, const Budgets& budgets) {
  return maximin_eta(g.vertex_count(), maximal_independent_sets(g, budgets));
}

FractionalSolution maximin_eta(std::size_t vertex_count,
                               const std::vector<VertexSet>& independent_sets) {
  if (vertex_count == 0 || independent_sets.empty()) {
    throw DomainError("empty_graph", "maximin_eta: nothing to cover");
  }
  // Variables: kappa_0..kappa_{m-1}, then the free floor z.
  const std::size_t m = independent_sets.size();
  LinearProgram lp;
  lp.sense = Sense::maximize;
  lp.objective.assign(m + 1, Rational(0));
  lp.objective[m] = 1;
  for (Vertex x = 0; x < vertex_count; ++x) {
    Constraint row{std::vector<Rational>(m + 1), Relation::greater_equal, Rational(0)};
    for (std::size_t s = 0; s < m; ++s) {
      const auto& T = independent_sets[s];
      if (std::binary_search(T.begin(), T.end(), x)) row.coefficients[s] = 1;
    }
    row.coefficients[m] = -1;
    lp.constraints.push_back(std::move(row));
  }
  Constraint total{std::vector<Rational>(m + 1, Rational(1)), Relation::equal, Rational(1)};
  total.coefficients[m] = 0;
  lp.constraints.push_back(std::move(total));
  lp.bounds.assign(m + 1, VariableBound{Rational(0), Rational(1)});
  lp.bounds[m] = VariableBound{std::nullopt, std::nullopt};

  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) throw std::logic_error("maximin LP not optimal");
  return FractionalSolution{sol.value, independent_sets,
                            std::vector<Rational>(sol.assignment.begin(),
                                                  sol.assignment.begin() + static_cast<long>(m))};
}

FractionalSolution fractional_covering(const Hypergraph& h) {
  require_no_exposed(h);
  return covering_lp(h.hyperedges(), h.vertices(), /*upper_one=*/false);
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const Hypergraph& h, std::uint64_t budget) : budget_(budget) {
    const auto& vertices = h.vertices();
    element_count_ = vertices.size();
    for (const auto& e : h.hyperedges()) {
      Bitset bits(element_count_);
      for (Vertex v : e) {
        const auto pos = std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin();
        bits.set(static_cast<std::size_t>(pos));
      }
      edges_.push_back(std::move(bits));
    }
  }

  SetCover run() {
    Bitset uncovered(element_count_);
    uncovered.set();
    greedy(uncovered);
    std::vector<std::size_t> chosen;
    search(uncovered, chosen);
    std::sort(best_.begin(), best_.end());
    return SetCover{best_.size(), best_};
  }

 private:
  void greedy(Bitset uncovered) {
    best_.clear();
    while (uncovered.any()) {
      std::size_t pick = 0;
      std::size_t gain = 0;
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        const std::size_t g = (edges_[e] & uncovered).count();
        if (g > gain) {
          gain = g;
          pick = e;
        }
      }
      best_.push_back(pick);
      uncovered -= edges_[pick];
    }
  }

  void search(const Bitset& uncovered, std::vector<std::size_t>& chosen) {
    if (++nodes_ > budget_) {
      throw ResourceError("cover_nodes", "set cover search exceeded budget of " +
                                             std::to_string(budget_) + " nodes");
    }
    if (uncovered.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + 1 >= best_.size()) return;

    std::size_t widest = 0;
    for (const auto& e : edges_) widest = std::max(widest, (e & uncovered).count());
    const std::size_t remaining = uncovered.count();
    if (chosen.size() + (remaining + widest - 1) / widest >= best_.size()) return;

    // Residual covering LP over the uncovered elements.
    std::vector<std::size_t> useful;
    std::vector<VertexSet> restricted;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const Bitset part = edges_[e] & uncovered;
      if (part.none()) continue;
      VertexSet members;
      for (auto v = part.find_first(); v != Bitset::npos; v = part.find_next(v)) {
        members.push_back(v);
      }
      useful.push_back(e);
      restricted.push_back(std::move(members));
    }
    std::vector<std::size_t> elements;
    for (auto v = uncovered.find_first(); v != Bitset::npos; v = uncovered.find_next(v)) {
      elements.push_back(v);
    }
    const FractionalSolution relaxed = covering_lp(restricted, elements, false);
    const BigInt bound = zeroleak::ceil(relaxed.value);
    if (BigInt(static_cast<unsigned long>(chosen.size())) + bound >=
        BigInt(static_cast<unsigned long>(best_.size()))) {
      return;
    }

    // Branch on the uncovered element with the fewest covering hyperedges.
    std::size_t pivot = elements.front();
    std::size_t fewest = edges_.size() + 1;
    for (std::size_t v : elements) {
      std::size_t count = 0;
      for (const auto& e : edges_) count += e.test(v) ? 1 : 0;
      if (count < fewest) {
        fewest = count;
        pivot = v;
      }
    }
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < useful.size(); ++k) {
      if (edges_[useful[k]].test(pivot)) order.push_back(k);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return relaxed.weights[a] > relaxed.weights[b];
    });
    for (std::size_t k : order) {
      chosen.push_back(useful[k]);
      search(uncovered - edges_[useful[k]], chosen);
      chosen.pop_back();
    }
  }

  std::size_t element_count_ = 0;
  std::vector<Bitset> edges_;
  std::vector<std::size_t> best_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SetCover minimum_cover(const Hypergraph& h, const Budgets& budgets) {
  require_no_exposed(h);
  if (h.vertices().empty()) return SetCover{};
  return CoverSearch(h, budgets.cover_nodes).run();
}

std::size_t covering_number(const Hypergraph& h, const Budgets& budgets) {
  return minimum_cover(h, budgets).size;
}

PackingSolution fractional_packing(const Graph& theta) {
  if (theta.empty()) throw DomainError("empty_graph", "fractional_packing: graph has no vertices");
  const std::size_t n = theta.vertex_count();
  LinearProgram lp;
  lp.sense = Sense::maximize;
  lp.objective.assign(n, Rational(1));
  for (Vertex x = 0; x < n; ++x) {
    Constraint row{std::vector<Rational>(n), Relation::less_equal, Rational(1)};
    for (Vertex v : closed_neighborhood(theta, x)) row.coefficients[v] = 1;
    lp.constraints.push_back(std::move(row));
  }
  lp.bounds.assign(n, VariableBound{Rational(0), Rational(1)});
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) throw std::logic_error("packing LP not optimal");
  return PackingSolution{sol.value, sol.assignment};
}

}  // namespace zeroleak
