#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zeroleak/budgets.hpp"
#include "zeroleak/graph.hpp"
#include "zeroleak/rational.hpp"

namespace zeroleak {

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::less_equal;
  Rational rhs;
};

/// Per-variable interval; a missing endpoint is unbounded.
struct VariableBound {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;
};

struct LinearProgram {
  Sense sense = Sense::minimize;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  /// Empty means every variable lives in [0, inf).
  std::vector<VariableBound> bounds;

  std::size_t variable_count() const noexcept { return objective.size(); }
  /// Throws DomainError("dimension_mismatch") on ragged rows or bounds.
  void validate() const;
  /// Exact feasibility check of an assignment against rows and bounds.
  bool satisfied_by(const std::vector<Rational>& assignment) const;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> assignment;
};

/// Two-phase primal simplex on a dense exact tableau with Bland's rule.
/// Infeasible and unbounded programs are reported through `status`. An
/// optimal assignment is re-checked against every row before returning.
LpSolution solve_lp(const LinearProgram& program);

/// Optimal value together with the weight placed on each set of `sets`.
struct FractionalSolution {
  Rational value;
  std::vector<VertexSet> sets;
  std::vector<Rational> weights;
};

/// chi_f(g): minimize the total weight on maximal independent sets so that
/// every vertex is covered at least once, weights in [0, 1].
FractionalSolution fractional_chromatic(const Graph& g, const Budgets& budgets = {});
/// Same LP over a caller-supplied maximal independent set family.
FractionalSolution fractional_chromatic(std::size_t vertex_count,
                                        const std::vector<VertexSet>& independent_sets);

/// eta(g): maximize the least coverage min_x sum_{T containing x} kappa_T
/// over probability vectors kappa on the maximal independent sets.
FractionalSolution maximin_eta(const Graph& g, const Budgets& budgets = {});
FractionalSolution maximin_eta(std::size_t vertex_count,
                               const std::vector<VertexSet>& independent_sets);

/// k_f(h) as the covering LP relaxation. Throws DomainError("exposed_vertex").
FractionalSolution fractional_covering(const Hypergraph& h);

/// Minimum number of hyperedges covering every vertex, found by
/// branch-and-bound with LP lower bounds.
struct SetCover {
  std::size_t size = 0;
  /// Indices into h.hyperedges(), ascending.
  std::vector<std::size_t> chosen;
};
SetCover minimum_cover(const Hypergraph& h, const Budgets& budgets = {});
std::size_t covering_number(const Hypergraph& h, const Budgets& budgets = {});

/// p_f(theta): maximize sum lambda(x) with every closed neighborhood carrying
/// total weight at most 1.
struct PackingSolution {
  Rational value;
  std::vector<Rational> weights;
};
PackingSolution fractional_packing(const Graph& theta);

}  // namespace zeroleak
