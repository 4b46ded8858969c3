#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "zeroleak/budgets.hpp"
#include "zeroleak/graph.hpp"
#include "zeroleak/leakage.hpp"
#include "zeroleak/rational.hpp"

namespace zeroleak::oracle {

/// The collection of sets an adversary may name at sequence length t. A
/// guess succeeds when the true sequence lies in the named set.
class GuessFamily {
 public:
  enum class Kind { singleton, multi_guess, approx, multi_approx };

  /// Every singleton of X^t.
  static GuessFamily singleton(const Graph& base, unsigned t, const Budgets& budgets = {});
  /// Every subset of X^t with exactly `guesses` elements.
  static GuessFamily multi_guess(const Graph& base, unsigned t, std::uint64_t guesses,
                                 const Budgets& budgets = {});
  /// Closed neighborhoods N(theta^t, x) for every x in X^t.
  static GuessFamily approx(const Graph& theta, unsigned t, const Budgets& budgets = {});
  /// Unions of `guesses` distinct closed neighborhoods of theta^t.
  static GuessFamily multi_approx(const Graph& theta, unsigned t, std::uint64_t guesses,
                                  const Budgets& budgets = {});

  Kind kind() const noexcept { return kind_; }
  unsigned t() const noexcept { return t_; }
  std::size_t source_count() const noexcept { return source_count_; }
  std::uint64_t guesses() const noexcept { return guesses_; }
  /// Deduplicated, each sorted, listed lexicographically.
  const std::vector<VertexSet>& sets() const noexcept { return sets_; }

 private:
  GuessFamily() = default;

  Kind kind_ = Kind::singleton;
  unsigned t_ = 1;
  std::size_t source_count_ = 0;
  std::uint64_t guesses_ = 1;
  std::vector<VertexSet> sets_;
};

/// Probability vectors over `symbols` letters whose entries are multiples of
/// 1/resolution, plus the uniform vector when resolution is not a multiple of
/// the alphabet size. Stored as integer weights over a common denominator.
class DistributionGrid {
 public:
  /// Throws ResourceError("grid_points") above budgets.grid_points.
  DistributionGrid(std::size_t symbols, unsigned resolution, const Budgets& budgets = {});

  std::size_t symbols() const noexcept { return symbols_; }
  unsigned resolution() const noexcept { return resolution_; }
  std::uint64_t denominator() const noexcept { return denominator_; }
  std::size_t size() const noexcept { return weights_.size(); }
  /// Point i as numerators over denominator().
  const std::vector<std::uint64_t>& weights(std::size_t i) const { return weights_[i]; }
  std::vector<Rational> point(std::size_t i) const;
  /// Some letter carries zero mass.
  bool on_boundary(std::size_t i) const;

 private:
  std::size_t symbols_;
  unsigned resolution_;
  std::uint64_t denominator_;
  std::vector<std::vector<std::uint64_t>> weights_;
};

/// Ratio of the best posterior to the best prior success probability of a
/// guess from `family` when X is i.i.d. px. Throws DomainError("zero_mass")
/// unless px has full support.
Rational rho_fixed_px(const StochasticMapping& m, const std::vector<Rational>& px,
                      const GuessFamily& family);

struct WorstCase {
  Rational value;
  std::size_t argmax = 0;
  /// The maximizing point gives some letter zero mass, so the value is only
  /// approached by full-support distributions.
  bool closure = false;
};

/// Largest ratio over the grid, boundary points included. A lower bound on
/// the supremum over all source distributions.
WorstCase worst_case_rho(const StochasticMapping& m, const GuessFamily& family,
                         const DistributionGrid& grid);

enum class Status { pass, fail, estimate };
std::string to_string(Status status);

struct Report {
  std::string check;
  Status status = Status::pass;
  nlohmann::json witness = nlohmann::json::object();
  Rational lhs;
  Rational rhs;
};

/// eta * chi_f == 1 on the t-th OR power.
Report verify_eta_duality(const Graph& gamma, unsigned t, const Budgets& budgets = {});

/// min over the grid of max_x P(N(theta, x)) against 1 / p_f(theta). Fails
/// only if the grid beats the LP; "estimate" if the LP value is not reached.
Report verify_packing_reciprocity(const Graph& theta, const DistributionGrid& grid);

/// At the uniform source every tested valid mapping must reach
/// rho >= |X|^t / alpha^t against the g(t)-guess family. MIS-codebook
/// mappings with rows in multiples of 1/resolution are enumerated when there
/// are at most `enumeration_limit` of them, otherwise `trials` are sampled.
Report verify_multi_guess_lower(const Graph& gamma, const GuessBudget& g, unsigned t,
                                unsigned resolution, std::size_t trials, std::uint64_t seed,
                                const Budgets& budgets = {},
                                std::size_t enumeration_limit = 20000);

/// Random valid mappings merged pairwise to a fixpoint: leakage must never
/// increase, and at the fixpoint no two codewords may fit in one maximal
/// independent set.
Report verify_mergeability_closure(const Graph& gamma, unsigned t, std::size_t trials,
                                   std::uint64_t seed, unsigned resolution = 4,
                                   const Budgets& budgets = {});

/// Grid maximum of the singleton-guess ratio against sum_y max_x P(y|x).
/// Fails only if the grid exceeds the closed form; "estimate" if it never
/// reaches it.
Report verify_singleton_closed_form(const StochasticMapping& m, const DistributionGrid& grid);

/// A valid mapping at length t: codewords are hosted by maximal independent
/// sets of the OR power (a set may host several codewords, so merges exist)
/// and each row spreads `resolution` equal shares over the codewords whose
/// host contains it.
StochasticMapping random_valid_mapping(const Graph& gamma, unsigned t, unsigned resolution,
                                       std::mt19937_64& rng, const Budgets& budgets = {});

nlohmann::json to_json(const Report& report);

}  // namespace zeroleak::oracle
