#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "support.hpp"
#include "zeroleak/catalog.hpp"
#include "zeroleak/errors.hpp"
#include "zeroleak/lp.hpp"

using namespace zeroleak;
using namespace zl_test;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

Constraint row(std::vector<Rational> c, Relation rel, Rational rhs) {
  return Constraint{std::move(c), rel, std::move(rhs)};
}

}  // namespace

TEST(SolveLp, UpperBoundedMaximum) {
  LinearProgram lp;
  lp.sense = Sense::maximize;
  lp.objective = {1};
  lp.constraints = {row({1}, Relation::less_equal, q(3, 2))};
  const auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.value, q(3, 2));
  EXPECT_EQ(sol.assignment, (std::vector<Rational>{q(3, 2)}));
}

TEST(SolveLp, EqualityWithZeroObjective) {
  LinearProgram lp;
  lp.objective = {0};
  lp.constraints = {row({1}, Relation::equal, 1)};
  const auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.value, 0);
  EXPECT_EQ(sol.assignment[0], 1);
}

TEST(SolveLp, InfeasibleAndUnboundedAreStatuses) {
  LinearProgram infeasible;
  infeasible.objective = {1};
  infeasible.constraints = {row({1}, Relation::greater_equal, 2), row({1}, Relation::less_equal, 1)};
  EXPECT_EQ(solve_lp(infeasible).status, LpStatus::infeasible);

  LinearProgram unbounded;
  unbounded.sense = Sense::maximize;
  unbounded.objective = {1, 1};
  unbounded.constraints = {row({1, -1}, Relation::less_equal, 1)};
  EXPECT_EQ(solve_lp(unbounded).status, LpStatus::unbounded);
}

TEST(SolveLp, FreeAndShiftedVariables) {
  // min x + y, x free, y in [2, 5], x + y >= -3, x >= -7 via a row.
  LinearProgram lp;
  lp.objective = {1, 1};
  lp.bounds = {VariableBound{std::nullopt, std::nullopt}, VariableBound{q(2), q(5)}};
  lp.constraints = {row({1, 1}, Relation::greater_equal, -3), row({1, 0}, Relation::greater_equal, -7)};
  const auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.value, -3);
  EXPECT_TRUE(lp.satisfied_by(sol.assignment));

  // max -x with x <= -1 and no lower bound.
  LinearProgram neg;
  neg.sense = Sense::maximize;
  neg.objective = {-1};
  neg.bounds = {VariableBound{std::nullopt, q(-1)}};
  neg.constraints = {row({1}, Relation::greater_equal, -4)};
  const auto s2 = solve_lp(neg);
  ASSERT_EQ(s2.status, LpStatus::optimal);
  EXPECT_EQ(s2.value, 4);
}

TEST(SolveLp, DegenerateRedundantEqualities) {
  LinearProgram lp;
  lp.sense = Sense::maximize;
  lp.objective = {2, 3};
  lp.constraints = {row({1, 1}, Relation::equal, 4), row({2, 2}, Relation::equal, 8),
                    row({1, 0}, Relation::less_equal, 4), row({0, 1}, Relation::less_equal, 3)};
  const auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.value, 11);
  EXPECT_EQ(sol.assignment, (std::vector<Rational>{q(1), q(3)}));
}

TEST(SolveLp, DimensionMismatchIsDomainError) {
  LinearProgram lp;
  lp.objective = {1, 1};
  lp.constraints = {row({1}, Relation::less_equal, 1)};
  try {
    solve_lp(lp);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "dimension_mismatch");
  }
}

TEST(SolveLp, RandomProgramsAgreeWithVertexEnumeration) {
  // Oracle: max c.x over {A x <= b, 0 <= x <= 3} by solving every square
  // subsystem of tight rows.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const std::size_t m = 2 + rng() % 3;
    LinearProgram lp;
    lp.sense = Sense::maximize;
    for (std::size_t j = 0; j < n; ++j) lp.objective.push_back(q(static_cast<long>(rng() % 7) - 2));
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> c;
      for (std::size_t j = 0; j < n; ++j) c.push_back(q(static_cast<long>(rng() % 9) - 3));
      lp.constraints.push_back(row(c, Relation::less_equal, q(static_cast<long>(rng() % 10) + 1)));
    }
    lp.bounds.assign(n, VariableBound{q(0), q(3)});

    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (const auto& c : lp.constraints) {
      rows.push_back(c.coefficients);
      rhs.push_back(c.rhs);
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> up(n, Rational(0)), down(n, Rational(0));
      up[j] = 1;
      down[j] = -1;
      rows.push_back(up);
      rhs.push_back(3);
      rows.push_back(down);
      rhs.push_back(0);
    }
    std::optional<Rational> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rows.size()); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n) continue;
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (mask >> i & 1) {
          a.push_back(rows[i]);
          b.push_back(rhs[i]);
        }
      }
      const auto x = solve_square(a, b);
      if (!x || !lp.satisfied_by(*x)) continue;
      Rational v = 0;
      for (std::size_t j = 0; j < n; ++j) v += lp.objective[j] * (*x)[j];
      if (!best || v > *best) best = v;
    }
    const auto sol = solve_lp(lp);
    ASSERT_TRUE(best.has_value());  // x = 0 is always feasible
    ASSERT_EQ(sol.status, LpStatus::optimal);
    EXPECT_EQ(sol.value, *best);
    EXPECT_TRUE(lp.satisfied_by(sol.assignment));
  }
}

TEST(FractionalChromatic, Examples) {
  EXPECT_EQ(fractional_chromatic(edgeless(4)).value, 1);
  EXPECT_EQ(fractional_chromatic(complete(4)).value, 4);
  const auto c5 = fractional_chromatic(cycle(5));
  EXPECT_EQ(c5.value, q(5, 2));
  EXPECT_EQ(c5.sets, brute_mis(cycle(5)));
  // Oracle: best weight grid with denominator 2 on the five maximal
  // independent sets; 5 sets at 1/2 form a 2-fold coloring of size 5.
  EXPECT_EQ(grid_fractional_cover(5, brute_mis(cycle(5)), 2), q(5, 2));
  EXPECT_EQ(q(5) / brute_alpha(cycle(5)), q(5, 2));
}

TEST(FractionalChromatic, WeightsAreFeasibleAndAtLeastOne) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : all_graphs(n)) {
      const auto fc = fractional_chromatic(g);
      EXPECT_GE(fc.value, 1);
      EXPECT_EQ(fc.value == 1, g.edges().empty());
      Rational total = 0;
      std::vector<Rational> cover(n, Rational(0));
      for (std::size_t i = 0; i < fc.sets.size(); ++i) {
        EXPECT_GE(fc.weights[i], 0);
        EXPECT_LE(fc.weights[i], 1);
        total += fc.weights[i];
        for (auto v : fc.sets[i]) cover[v] += fc.weights[i];
      }
      EXPECT_EQ(total, fc.value);
      for (const auto& c : cover) EXPECT_GE(c, 1);
    }
  }
}

TEST(FractionalChromatic, SmallGraphsMatchHalfIntegralGrid) {
  // On these graphs an optimum exists with weights in multiples of 1/2, so
  // the grid is exact.
  for (const Graph& g : {cycle(5), path(4), complete(3), reservoir(), edgeless(3)}) {
    EXPECT_EQ(fractional_chromatic(g).value, grid_fractional_cover(g.vertex_count(), brute_mis(g), 2));
  }
}

TEST(MaximinEta, Examples) {
  EXPECT_EQ(maximin_eta(edgeless(3)).value, 1);
  EXPECT_EQ(maximin_eta(complete(4)).value, q(1, 4));
  const auto c5 = maximin_eta(cycle(5));
  EXPECT_EQ(c5.value, q(2, 5));
  EXPECT_EQ(c5.value * fractional_chromatic(cycle(5)).value, 1);
  Rational total = 0;
  for (const auto& w : c5.weights) total += w;
  EXPECT_EQ(total, 1);
}

TEST(MaximinEta, DualityOnAllGraphsUpToFiveVertices) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : all_graphs(n)) {
      const auto eta = maximin_eta(g).value;
      EXPECT_GT(eta, 0);
      EXPECT_LE(eta, 1);
      EXPECT_EQ(eta * fractional_chromatic(g).value, 1);
    }
  }
}

TEST(FractionalChromatic, MultiplicativeUnderOrSquare) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_graph(2 + rng() % 4, rng);
    const Rational base = fractional_chromatic(g).value;
    EXPECT_EQ(fractional_chromatic(or_power(g, 2)).value, base * base);
  }
  EXPECT_EQ(fractional_chromatic(or_power(cycle(5), 2)).value, q(25, 4));
}

TEST(FractionalCovering, Examples) {
  EXPECT_EQ(fractional_covering(Hypergraph({0, 1, 2}, {{0}, {1}, {2}})).value, 3);
  EXPECT_EQ(fractional_covering(Hypergraph({0, 1, 2}, {{0, 1, 2}})).value, 1);
  const Hypergraph triangle({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(fractional_covering(triangle).value, q(3, 2));
  // Oracle: the 2-fold covering number is 3, so k_f <= 3/2; the 1-fold cover
  // needs 2, and k_f >= k_2 / 2 on this symmetric instance.
  EXPECT_EQ(brute_b_fold_cover(triangle, 2), 3u);
  EXPECT_EQ(brute_b_fold_cover(triangle, 1), 2u);
}

TEST(FractionalCovering, ExposedVertexIsDomainError) {
  try {
    fractional_covering(Hypergraph({0, 1, 2}, {{0, 1}}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "exposed_vertex");
    EXPECT_NE(std::string(e.what()).find('2'), std::string::npos);
  }
  EXPECT_THROW(covering_number(Hypergraph({0, 1}, {{0}})), DomainError);
}

TEST(FractionalCovering, BFoldCoversApproachLpValue) {
  // k_b / b >= k_f for every b, with equality reached at a small b on these
  // instances.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + rng() % 2;
    std::vector<VertexSet> edges;
    for (std::size_t v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    for (int e = 0; e < 2; ++e) {
      VertexSet s;
      for (std::size_t v = 0; v < n; ++v) {
        if (rng() % 2) s.push_back(v);
      }
      if (!s.empty()) edges.push_back(s);
    }
    VertexSet all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const Hypergraph h(all, edges);
    const Rational kf = fractional_covering(h).value;
    Rational best = -1;
    for (unsigned b = 1; b <= 3; ++b) {
      Rational ratio(static_cast<long>(brute_b_fold_cover(h, b)), b);
      ratio.canonicalize();
      EXPECT_GE(ratio, kf);
      if (best < 0 || ratio < best) best = ratio;
    }
    EXPECT_EQ(best, kf) << "no b <= 3 reaches k_f on trial " << trial;
  }
}

TEST(CoveringNumber, Examples) {
  EXPECT_EQ(covering_number(Hypergraph({0, 1, 2}, {{0, 1, 2}})), 1u);
  EXPECT_EQ(covering_number(Hypergraph({0, 1, 2}, {{0}, {1}, {2}})), 3u);
  const Hypergraph triangle({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(brute_cover(triangle), 2u);
  const auto cover = minimum_cover(triangle);
  EXPECT_EQ(cover.size, 2u);
  EXPECT_EQ(cover.chosen.size(), 2u);
}

TEST(CoveringNumber, MatchesBruteForceAndBoundsLp) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 3 + rng() % 5;
    std::vector<VertexSet> edges;
    for (std::size_t v = 0; v < n; ++v) edges.push_back({v});
    const std::size_t extra = 2 + rng() % 8;
    for (std::size_t e = 0; e < extra; ++e) {
      VertexSet s;
      for (std::size_t v = 0; v < n; ++v) {
        if (rng() % 3 == 0) s.push_back(v);
      }
      if (!s.empty()) edges.push_back(s);
    }
    VertexSet all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const Hypergraph h(all, edges);
    const auto cover = minimum_cover(h);
    EXPECT_EQ(cover.size, brute_cover(h));
    EXPECT_EQ(cover.size, cover.chosen.size());
    VertexSet covered;
    for (auto i : cover.chosen) {
      covered.insert(covered.end(), h.hyperedges()[i].begin(), h.hyperedges()[i].end());
    }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    EXPECT_EQ(covered, all);
    EXPECT_LE(fractional_covering(h).value, Rational(static_cast<long>(cover.size)));
  }
}

TEST(CoveringNumber, NodeBudgetRaisesResourceError) {
  Budgets tight;
  tight.cover_nodes = 1;
  std::vector<VertexSet> edges;
  for (std::size_t v = 0; v < 6; ++v) edges.push_back({v, (v + 1) % 6, (v + 3) % 6});
  EXPECT_THROW(covering_number(Hypergraph({0, 1, 2, 3, 4, 5}, edges), tight), ResourceError);
}

TEST(FractionalPacking, Examples) {
  EXPECT_EQ(fractional_packing(edgeless(4)).value, 4);
  EXPECT_EQ(fractional_packing(complete(4)).value, 1);
  // The center of the path sees all three vertices, which caps the total.
  EXPECT_EQ(brute_packing(path(3)), 1);
  EXPECT_EQ(fractional_packing(path(3)).value, 1);
  EXPECT_EQ(fractional_packing(reservoir_theta()).value, 2);
  EXPECT_EQ(brute_packing(reservoir_theta()), 2);
}

TEST(FractionalPacking, MatchesPolytopeVerticesOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& g : all_graphs(n)) {
      const auto p = fractional_packing(g);
      EXPECT_EQ(p.value, brute_packing(g));
      EXPECT_GE(p.value, 1);
    }
  }
}

TEST(AssociatedCovering, MultiplicativeOverProducts) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const Graph gamma = random_graph(n, rng);
    const Graph theta = random_graph(n, rng);
    const Graph theta2 = and_power(theta, 2);
    const auto base = maximal_independent_sets(gamma);
    for (const auto& t1 : base) {
      for (const auto& t2 : base) {
        VertexSet T;
        for (auto a : t1) {
          for (auto b : t2) T.push_back(a * n + b);
        }
        std::sort(T.begin(), T.end());
        const Rational lhs = fractional_covering(associated_hypergraph(T, theta2)).value;
        const Rational rhs = fractional_covering(associated_hypergraph(t1, theta, 1)).value *
                             fractional_covering(associated_hypergraph(t2, theta, 1)).value;
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}
