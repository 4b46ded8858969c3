#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zeroleak/budgets.hpp"

namespace zeroleak {

using Vertex = std::size_t;
/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Finite simple undirected graph over vertices 0..n-1 with optional labels.
///
/// Edges are normalized to (min, max), deduplicated and sorted. The adjacency
/// matrix is materialized, which keeps every query O(1) at the sizes this
/// library targets (products of graphs on a handful of symbols).
class Graph {
 public:
  Graph() = default;

  /// Throws DomainError("invalid_graph") on self-loops, out-of-range
  /// endpoints, or labels that are missized or repeated.
  Graph(std::size_t vertex_count, std::vector<Edge> edges,
        std::optional<std::vector<std::string>> labels = std::nullopt);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  bool empty() const noexcept { return vertex_count_ == 0; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::optional<std::vector<std::string>>& labels() const noexcept { return labels_; }

  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].count(); }

  /// Label of `v`, or its decimal index when the graph is unlabeled.
  std::string name(Vertex v) const;
  /// Index of the vertex with this label (or decimal index when unlabeled).
  std::optional<Vertex> find(const std::string& name) const;

  /// First edge with both endpoints in `set`, if any.
  std::optional<Edge> edge_within(const VertexSet& set) const;
  bool is_independent(const VertexSet& set) const { return !edge_within(set).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::vector<std::string>> labels_;
  std::vector<Bitset> adjacency_;
};

/// A length-t source sequence, encoded big-endian in base |X|.
struct SequenceVertex {
  std::vector<Vertex> symbols;
  std::size_t encoded_index = 0;

  static SequenceVertex from_symbols(std::vector<Vertex> symbols, std::size_t base);
  static SequenceVertex decode(std::size_t encoded_index, std::size_t base, unsigned length);
};

/// base^length, throwing DomainError("too_large") when it overflows or
/// exceeds `limit`.
std::size_t sequence_count(std::size_t base, unsigned length,
                           std::uint64_t limit = UINT64_MAX);

/// Vertex set plus a deduplicated family of nonempty subsets. Hyperedges are
/// kept in lexicographic order so equal families compare equal.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws DomainError("invalid_hypergraph") for empty hyperedges or ones
  /// that leave the vertex set.
  Hypergraph(VertexSet vertices, std::vector<VertexSet> hyperedges);

  const VertexSet& vertices() const noexcept { return vertices_; }
  const std::vector<VertexSet>& hyperedges() const noexcept { return hyperedges_; }

  /// A vertex lying in no hyperedge, if one exists.
  std::optional<Vertex> exposed_vertex() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  VertexSet vertices_;
  std::vector<VertexSet> hyperedges_;
};

/// Multiset of vertex sets (b-fold colorings and coverings).
struct VertexSetFamily {
  std::vector<VertexSet> sets;
  std::vector<std::uint64_t> multiplicities;

  std::uint64_t total() const;
  /// How many sets (with multiplicity) contain `v`.
  std::uint64_t coverage(Vertex v) const;
};

Graph or_product(const Graph& g, const Graph& h, const Budgets& budgets = {});
Graph or_power(const Graph& g, unsigned t, const Budgets& budgets = {});
Graph and_product(const Graph& g, const Graph& h, const Budgets& budgets = {});
Graph and_power(const Graph& g, unsigned t, const Budgets& budgets = {});

/// {v} together with its neighbors, sorted.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// All maximal independent sets, each sorted, listed lexicographically.
/// Throws ResourceError("mis_work") when the search exceeds budgets.mis_work.
std::vector<VertexSet> maximal_independent_sets(const Graph& g, const Budgets& budgets = {});

std::size_t independence_number(const Graph& g, const Budgets& budgets = {});

/// Maximal independent sets of or_power(g, t), built as Cartesian products of
/// the maximal independent sets of g and encoded as SequenceVertex indices.
std::vector<VertexSet> mis_of_or_power(const Graph& g, unsigned t, const Budgets& budgets = {});

/// Exhaustive automorphism search; every vertex must be reachable from vertex
/// 0. Throws ResourceError("automorphism_vertices") above the size budget.
bool is_vertex_transitive(const Graph& g, const Budgets& budgets = {});

/// Hypergraph on T whose hyperedges are the nonempty T ∩ N(theta^⊠t, x) over
/// every sequence x of length t.
Hypergraph associated_hypergraph(const VertexSet& T, const Graph& theta, unsigned t,
                                 const Budgets& budgets = {});
/// Same, with the AND power already built (vertex count |X|^t).
Hypergraph associated_hypergraph(const VertexSet& T, const Graph& theta_power);

}  // namespace zeroleak
