#pragma once

// Brute-force reference implementations. Everything here is deliberately
// naive (subset enumeration, direct definitions) and shares no code with the
// library beyond the Graph/Hypergraph containers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "zeroleak/graph.hpp"
#include "zeroleak/rational.hpp"

namespace zl_test {

using zeroleak::Edge;
using zeroleak::Graph;
using zeroleak::Hypergraph;
using zeroleak::Rational;
using zeroleak::VertexSet;

/// Every independent set, by include/exclude recursion in vertex order.
inline std::vector<VertexSet> all_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet current;
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == g.vertex_count()) {
      out.push_back(current);
      return;
    }
    go(v + 1);
    for (auto u : current) {
      if (g.adjacent(u, v)) return;
    }
    current.push_back(v);
    go(v + 1);
    current.pop_back();
  };
  go(0);
  return out;
}

/// Independent sets that no vertex can extend, sorted lexicographically.
inline std::vector<VertexSet> brute_mis(const Graph& g) {
  std::vector<VertexSet> out;
  for (const auto& s : all_independent_sets(g)) {
    bool maximal = true;
    for (std::size_t v = 0; v < g.vertex_count() && maximal; ++v) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      bool blocked = false;
      for (auto u : s) blocked = blocked || g.adjacent(u, v);
      maximal = blocked;
    }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t brute_alpha(const Graph& g) {
  std::size_t best = 0;
  for (const auto& s : all_independent_sets(g)) best = std::max(best, s.size());
  return best;
}

/// Smallest k admitting a proper k-coloring, by exhaustive assignment.
inline std::size_t brute_chromatic(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> color(n, 0);
    std::function<bool(std::size_t)> place = [&](std::size_t v) {
      if (v == n) return true;
      for (std::size_t c = 0; c < k; ++c) {
        bool ok = true;
        for (std::size_t u = 0; u < v && ok; ++u) ok = !(g.adjacent(u, v) && color[u] == c);
        if (!ok) continue;
        color[v] = c;
        if (place(v + 1)) return true;
      }
      return false;
    };
    if (place(0)) return k;
  }
  return n;
}

/// Every labeled simple graph on n vertices (2^(n choose 2) of them).
inline std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<Edge> slots;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) edges.push_back(slots[i]);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

inline bool connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (g.adjacent(u, v) && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

inline Graph random_graph(std::size_t n, std::mt19937_64& rng, unsigned percent = 50) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng() % 100 < percent) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

inline std::vector<std::size_t> digits(std::size_t index, std::size_t base, unsigned length) {
  std::vector<std::size_t> out(length);
  for (unsigned j = length; j-- > 0;) {
    out[j] = index % base;
    index /= base;
  }
  return out;
}

/// Product graph on base^t sequences built from the adjacency definitions.
inline Graph brute_power(const Graph& g, unsigned t, bool disjunctive) {
  const std::size_t n = g.vertex_count();
  std::size_t count = 1;
  for (unsigned j = 0; j < t; ++j) count *= n;
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < count; ++a) {
    const auto da = digits(a, n, t);
    for (std::size_t b = a + 1; b < count; ++b) {
      const auto db = digits(b, n, t);
      bool any = false;
      bool all = true;
      for (unsigned j = 0; j < t; ++j) {
        const bool adj = g.adjacent(da[j], db[j]);
        any = any || adj;
        all = all && (adj || da[j] == db[j]);
      }
      if (disjunctive ? any : all) edges.emplace_back(a, b);
    }
  }
  return Graph(count, std::move(edges));
}

/// Minimum set cover by trying subsets of hyperedges in order of size.
inline std::size_t brute_cover(const Hypergraph& h) {
  const auto& edges = h.hyperedges();
  std::size_t best = edges.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    const std::size_t size = __builtin_popcountll(mask);
    if (size >= best) continue;
    VertexSet covered;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (mask >> i & 1) covered.insert(covered.end(), edges[i].begin(), edges[i].end());
    }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    if (covered == h.vertices()) best = size;
  }
  return best;
}

/// Smallest multiset of hyperedges covering every vertex at least b times,
/// each hyperedge used at most b times.
inline std::size_t brute_b_fold_cover(const Hypergraph& h, unsigned b) {
  const auto& edges = h.hyperedges();
  std::vector<unsigned> mult(edges.size(), 0);
  std::size_t best = SIZE_MAX;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
    if (used >= best) return;
    if (i == edges.size()) {
      for (auto v : h.vertices()) {
        unsigned cover = 0;
        for (std::size_t k = 0; k < edges.size(); ++k) {
          if (std::binary_search(edges[k].begin(), edges[k].end(), v)) cover += mult[k];
        }
        if (cover < b) return;
      }
      best = used;
      return;
    }
    for (unsigned m = 0; m <= b; ++m) {
      mult[i] = m;
      go(i + 1, used + m);
    }
    mult[i] = 0;
  };
  go(0, 0);
  return best;
}

/// Solves A x = rhs exactly; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
  return x;
}

/// Closed-neighborhood packing optimum by visiting every vertex of the
/// polytope {lambda >= 0, sum over N[x] <= 1}: pick n tight rows, solve,
/// keep feasible points.
inline Rational brute_packing(const Graph& theta) {
  const std::size_t n = theta.vertex_count();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Rational> r(n, Rational(0));
    r[x] = 1;
    for (std::size_t v = 0; v < n; ++v) {
      if (theta.adjacent(x, v)) r[v] = 1;
    }
    rows.push_back(r);
    rhs.push_back(1);
  }
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Rational> r(n, Rational(0));
    r[x] = -1;
    rows.push_back(r);
    rhs.push_back(0);
  }
  Rational best = -1;
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
    if (!x) continue;
    bool feasible = true;
    for (std::size_t i = 0; i < rows.size() && feasible; ++i) {
      Rational lhs = 0;
      for (std::size_t k = 0; k < n; ++k) lhs += rows[i][k] * (*x)[k];
      feasible = lhs <= rhs[i];
    }
    if (!feasible) continue;
    Rational value = 0;
    for (const auto& v : *x) value += v;
    best = std::max(best, value);
  }
  return best;
}

/// Smallest total weight over assignments of multiples of 1/denominator (in
/// [0, 1]) to `sets` that cover every vertex at least once.
inline Rational grid_fractional_cover(std::size_t n, const std::vector<VertexSet>& sets,
                                      unsigned denominator) {
  std::vector<unsigned> w(sets.size(), 0);
  Rational best = -1;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == sets.size()) {
      std::vector<unsigned> cover(n, 0);
      unsigned total = 0;
      for (std::size_t k = 0; k < sets.size(); ++k) {
        total += w[k];
        for (auto v : sets[k]) cover[v] += w[k];
      }
      for (auto c : cover) {
        if (c < denominator) return;
      }
      Rational value(total, denominator);
      value.canonicalize();
      if (best < 0 || value < best) best = value;
      return;
    }
    for (unsigned k = 0; k <= denominator; ++k) {
      w[i] = k;
      go(i + 1);
    }
  };
  go(0);
  return best;
}

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

inline Graph edgeless(std::size_t n) { return Graph(n, {}); }

/// K_{2,2} with the reservoir labels and its approximation graph.
inline Graph reservoir() {
  return Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, std::vector<std::string>{"VH", "H", "VL", "L"});
}
inline Graph reservoir_theta() {
  return Graph(4, {{0, 1}, {2, 3}}, std::vector<std::string>{"VH", "H", "VL", "L"});
}

}  // namespace zl_test
