#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zeroleak/budgets.hpp"
#include "zeroleak/graph.hpp"
#include "zeroleak/lp.hpp"
#include "zeroleak/rational.hpp"

namespace zeroleak {

/// Row-stochastic encoder P(y | x^t). Rows are indexed by the big-endian
/// encoding of x^t, columns by codeword.
class StochasticMapping {
 public:
  /// Throws DomainError("invalid_mapping") unless every row has one entry per
  /// codeword, entries lie in [0, 1], rows sum to exactly 1 and codeword
  /// identifiers are distinct.
  StochasticMapping(unsigned t, std::vector<std::string> codewords,
                    std::vector<std::vector<Rational>> rows);

  unsigned t() const noexcept { return t_; }
  std::size_t source_count() const noexcept { return rows_.size(); }
  std::size_t codeword_count() const noexcept { return codewords_.size(); }
  const std::vector<std::string>& codewords() const noexcept { return codewords_; }
  const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }
  const Rational& probability(std::size_t x, std::size_t y) const { return rows_[x][y]; }

  /// Sources mapped to codeword y with nonzero probability.
  const VertexSet& support(std::size_t y) const { return supports_[y]; }
  std::optional<std::size_t> find_codeword(const std::string& id) const;

  friend bool operator==(const StochasticMapping& a, const StochasticMapping& b) {
    return a.t_ == b.t_ && a.codewords_ == b.codewords_ && a.rows_ == b.rows_;
  }

 private:
  unsigned t_;
  std::vector<std::string> codewords_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<VertexSet> supports_;
};

/// A leakage reported through the argument of its logarithm, so it stays
/// exact: leakage in bits = log2(log2_of).
struct LeakageValue {
  Rational log2_of;

  double bits() const { return display_bits(log2_of); }
  friend bool operator==(const LeakageValue&, const LeakageValue&) = default;
};

/// Adversary guessing capability g(t).
class GuessBudget {
 public:
  enum class Kind { constant, polynomial, exponential, table };

  /// g(t) = c.
  static GuessBudget constant(std::uint64_t c);
  /// g(t) = t^d.
  static GuessBudget polynomial(unsigned degree);
  /// g(t) = floor(base^t), base > 1.
  static GuessBudget exponential(const Rational& base);
  /// Explicit g(1), g(2), ... The asymptotic class cannot be read off finite
  /// data, so the caller declares it: `growth_base` empty means sub-exponential
  /// (sigma = 0), otherwise g grows like growth_base^t.
  static GuessBudget table(std::vector<std::uint64_t> values,
                           std::optional<Rational> growth_base = std::nullopt);

  Kind kind() const noexcept { return kind_; }
  /// g(t) for t >= 1. Table budgets throw DomainError past their last entry.
  BigInt operator()(unsigned t) const;
  /// Number of entries for a table budget, nullopt otherwise.
  std::optional<unsigned> declared_length() const;

  bool sigma_is_zero() const;
  /// lim (1/t) log2 g(t), as the rational whose log2 it is (1 when sigma = 0).
  Rational sigma_log2_of() const;
  /// Human-readable form, e.g. "const:2" or "exp:3/2".
  std::string describe() const;

 private:
  GuessBudget() = default;

  Kind kind_ = Kind::constant;
  std::uint64_t constant_ = 1;
  unsigned degree_ = 0;
  Rational base_ = 1;
  std::vector<std::uint64_t> values_;
};

struct BoundsReport {
  LeakageValue lower;
  LeakageValue upper;
  /// lower == upper exactly.
  bool tight = false;
  std::string lower_provenance;
  std::string upper_provenance;
  /// The raw single-letter lower bound before any tightening or flooring.
  Rational raw_lower;
  std::vector<std::string> notes;
};

struct EdgeViolation {
  std::size_t codeword = 0;
  Vertex x = 0;
  Vertex v = 0;
};

struct MappingCheck {
  bool valid = true;
  /// First offending (codeword, x, v) with x, v adjacent in the OR power.
  std::optional<EdgeViolation> violation;
};

/// Every support set must be independent in or_power(gamma, m.t()).
/// Throws DomainError("dimension_mismatch") if m has the wrong row count.
MappingCheck validate_mapping(const StochasticMapping& m, const Graph& gamma,
                              const Budgets& budgets = {});

/// log2_of = sum over codewords of the largest P(y | x). Validity is not
/// required; callers check it separately.
LeakageValue maximal_leakage(const StochasticMapping& m);

struct OptimalLeakage {
  LeakageValue value;  // 1 / eta
  Rational eta;
  StochasticMapping witness;
  LeakageValue witness_value;
  /// witness_value exceeds value.
  bool witness_gap = false;
};

/// Optimal maximal leakage at sequence length t via the maximin LP over the
/// maximal independent sets of the OR power, plus a witness mapping
/// P(T | x) = kappa_T / sum_{T' containing x} kappa_T'.
OptimalLeakage optimal_leakage_t(const Graph& gamma, unsigned t, const Budgets& budgets = {});

/// log2_of = chi_f(gamma).
LeakageValue leakage_rate(const Graph& gamma, const Budgets& budgets = {});

struct BFoldColoring {
  VertexSetFamily family;
  std::uint64_t b = 1;
};

/// Scales feasible fractional-coloring weights to an integral multiset and
/// trims vertices out of surplus copies until every vertex is covered exactly
/// b times. Throws DomainError("infeasible_weights").
BFoldColoring b_fold_coloring_from_weights(const Graph& gamma, std::span<const VertexSet> sets,
                                           std::span<const Rational> weights);
/// Weights indexed like maximal_independent_sets(gamma).
BFoldColoring b_fold_coloring_from_weights(const Graph& gamma, std::span<const Rational> weights,
                                           const Budgets& budgets = {});

struct ScalarScheme {
  BFoldColoring coloring;
  StochasticMapping mapping;
};

/// t = 1 scheme: codebook = an optimal b-fold coloring, P(y | x) = 1/b when
/// x lies in y.
ScalarScheme optimal_scalar_scheme(const Graph& gamma, const Budgets& budgets = {});
StochasticMapping optimal_scalar_mapping(const Graph& gamma, const Budgets& budgets = {});

/// Replaces codewords y1, y2 by one codeword carrying their summed column,
/// placed at the lower of the two positions. The union of both supports must
/// be independent in the OR power; otherwise DomainError("not_mergeable")
/// names the offending edge.
StochasticMapping merge_codewords(const StochasticMapping& m, std::size_t y1, std::size_t y2,
                                  const Graph& gamma, const Budgets& budgets = {});

/// Single-letter bounds for the multi-guess adversary. Table budgets are
/// checked against g(t) <= alpha(gamma)^t over their declared length and
/// rejected with DomainError("inadmissible_budget").
BoundsReport multi_guess_bounds(const Graph& gamma, const GuessBudget& g,
                                const Budgets& budgets = {});

/// Single-letter bounds for one approximate guess. The lower side is floored
/// at zero leakage.
BoundsReport approx_guess_bounds(const Graph& gamma, const Graph& theta,
                                 const Budgets& budgets = {});

/// Same numbers as approx_guess_bounds. Table budgets are checked against
/// g(t) <= max_T k(H_t(T)) over their declared length.
BoundsReport multi_approx_guess_bounds(const Graph& gamma, const Graph& theta,
                                       const GuessBudget& g, const Budgets& budgets = {});

/// max over maximal independent sets T of gamma of k_f(H_1(T)).
Rational max_associated_covering(const Graph& gamma, const Graph& theta,
                                 const Budgets& budgets = {});

}  // namespace zeroleak
