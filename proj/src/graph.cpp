#include "zeroleak/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "zeroleak/errors.hpp"

namespace zeroleak {
namespace {

void require_nonempty(const Graph& g, const char* what) {
  if (g.empty()) {
    throw DomainError("empty_graph", std::string(what) + ": graph has no vertices");
  }
}

VertexSet to_set(const Bitset& bits) {
  VertexSet out;
  out.reserve(bits.count());
  for (auto v = bits.find_first(); v != Bitset::npos; v = bits.find_next(v)) out.push_back(v);
  return out;
}

template <typename Adjacent>
Graph build_product(const Graph& g, const Graph& h, const Budgets& budgets, Adjacent&& adjacent) {
  const std::size_t ng = g.vertex_count();
  const std::size_t nh = h.vertex_count();
  if (ng > budgets.product_vertices || nh > budgets.product_vertices ||
      ng * nh > budgets.product_vertices) {
    throw ResourceError("product_vertices",
                        "product graph would exceed " + std::to_string(budgets.product_vertices) +
                            " vertices");
  }
  const std::size_t n = ng * nh;
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (adjacent(a / nh, a % nh, b / nh, b % nh)) edges.emplace_back(a, b);
    }
  }
  return Graph(n, std::move(edges));
}

// Bron-Kerbosch with Tomita pivoting over the complement graph: maximal
// cliques there are maximal independent sets here.
class MisEnumerator {
 public:
  MisEnumerator(const Graph& g, std::uint64_t budget) : budget_(budget) {
    const std::size_t n = g.vertex_count();
    complement_.assign(n, Bitset(n));
    for (Vertex v = 0; v < n; ++v) {
      complement_[v] = ~g.neighbors(v);
      complement_[v].reset(v);
    }
  }

  std::vector<VertexSet> run() {
    const std::size_t n = complement_.size();
    Bitset candidates(n);
    candidates.set();
    VertexSet current;
    expand(current, candidates, Bitset(n));
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void expand(VertexSet& current, Bitset candidates, Bitset excluded) {
    if (++work_ > budget_) {
      throw ResourceError("mis_work", "maximal independent set enumeration exceeded budget of " +
                                          std::to_string(budget_) + " steps");
    }
    if (candidates.none() && excluded.none()) {
      VertexSet set = current;
      std::sort(set.begin(), set.end());
      found_.push_back(std::move(set));
      return;
    }
    // Pivot: lowest-index vertex of P ∪ X with the most neighbors in P.
    const Bitset pool = candidates | excluded;
    Vertex pivot = Bitset::npos;
    std::size_t best = 0;
    for (auto u = pool.find_first(); u != Bitset::npos; u = pool.find_next(u)) {
      const std::size_t score = (candidates & complement_[u]).count();
      if (pivot == Bitset::npos || score > best) {
        pivot = u;
        best = score;
      }
    }
    const Bitset branch = candidates - complement_[pivot];
    for (auto v = branch.find_first(); v != Bitset::npos; v = branch.find_next(v)) {
      current.push_back(v);
      expand(current, candidates & complement_[v], excluded & complement_[v]);
      current.pop_back();
      candidates.reset(v);
      excluded.set(v);
    }
  }

  std::vector<Bitset> complement_;
  std::vector<VertexSet> found_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
};

bool automorphism_maps(const Graph& g, Vertex source, Vertex target) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> image(n, n);
  std::vector<bool> used(n, false);

  auto consistent = [&](Vertex v, Vertex w) {
    if (g.degree(v) != g.degree(w)) return false;
    for (Vertex u = 0; u < n; ++u) {
      if (image[u] == n || u == v) continue;
      if (g.adjacent(u, v) != g.adjacent(image[u], w)) return false;
    }
    return true;
  };

  image[source] = target;
  used[target] = true;
  if (!consistent(source, target)) return false;

  std::function<bool(Vertex)> assign = [&](Vertex v) -> bool {
    if (v == n) return true;
    if (v == source) return assign(v + 1);
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || !consistent(v, w)) continue;
      image[v] = w;
      used[w] = true;
      if (assign(v + 1)) return true;
      used[w] = false;
      image[v] = n;
    }
    return false;
  };
  return assign(0);
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges,
             std::optional<std::vector<std::string>> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
  for (auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw DomainError("invalid_graph", "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                             "} has an endpoint >= " +
                                             std::to_string(vertex_count));
    }
    if (u == v) {
      throw DomainError("invalid_graph", "self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  if (labels_) {
    if (labels_->size() != vertex_count) {
      throw DomainError("invalid_graph", "expected " + std::to_string(vertex_count) +
                                             " labels, got " + std::to_string(labels_->size()));
    }
    std::set<std::string> seen(labels_->begin(), labels_->end());
    if (seen.size() != labels_->size()) {
      throw DomainError("invalid_graph", "vertex labels are not pairwise distinct");
    }
  }

  adjacency_.assign(vertex_count, Bitset(vertex_count));
  for (const auto& [u, v] : edges_) {
    adjacency_[u].set(v);
    adjacency_[v].set(u);
  }
}

std::string Graph::name(Vertex v) const {
  return labels_ ? (*labels_)[v] : std::to_string(v);
}

std::optional<Vertex> Graph::find(const std::string& name) const {
  if (labels_) {
    const auto it = std::find(labels_->begin(), labels_->end(), name);
    if (it == labels_->end()) return std::nullopt;
    return static_cast<Vertex>(it - labels_->begin());
  }
  if (name.empty() || name.find_first_not_of("0123456789") != std::string::npos) {
    return std::nullopt;
  }
  const auto v = std::stoull(name);
  if (v >= vertex_count_) return std::nullopt;
  return static_cast<Vertex>(v);
}

std::optional<Edge> Graph::edge_within(const VertexSet& set) const {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (adjacent(set[i], set[j])) return Edge{set[i], set[j]};
    }
  }
  return std::nullopt;
}

SequenceVertex SequenceVertex::from_symbols(std::vector<Vertex> symbols, std::size_t base) {
  std::size_t index = 0;
  for (Vertex s : symbols) {
    if (s >= base) {
      throw DomainError("out_of_range",
                        "symbol " + std::to_string(s) + " outside alphabet of size " +
                            std::to_string(base));
    }
    index = index * base + s;
  }
  return SequenceVertex{std::move(symbols), index};
}

SequenceVertex SequenceVertex::decode(std::size_t encoded_index, std::size_t base,
                                      unsigned length) {
  SequenceVertex out{std::vector<Vertex>(length), encoded_index};
  std::size_t rest = encoded_index;
  for (unsigned j = length; j-- > 0;) {
    out.symbols[j] = rest % base;
    rest /= base;
  }
  if (rest != 0) {
    throw DomainError("out_of_range", "index " + std::to_string(encoded_index) +
                                          " exceeds base^length");
  }
  return out;
}

std::size_t sequence_count(std::size_t base, unsigned length, std::uint64_t limit) {
  std::uint64_t count = 1;
  for (unsigned j = 0; j < length; ++j) {
    if (base != 0 && count > limit / base) {
      throw DomainError("too_large", "alphabet^length exceeds " + std::to_string(limit));
    }
    count *= base;
  }
  if (count > limit) {
    throw DomainError("too_large", "alphabet^length exceeds " + std::to_string(limit));
  }
  return static_cast<std::size_t>(count);
}

Hypergraph::Hypergraph(VertexSet vertices, std::vector<VertexSet> hyperedges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (auto& e : hyperedges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.empty()) throw DomainError("invalid_hypergraph", "empty hyperedge");
    if (!std::includes(vertices.begin(), vertices.end(), e.begin(), e.end())) {
      throw DomainError("invalid_hypergraph", "hyperedge leaves the vertex set");
    }
  }
  std::sort(hyperedges.begin(), hyperedges.end());
  hyperedges.erase(std::unique(hyperedges.begin(), hyperedges.end()), hyperedges.end());
  vertices_ = std::move(vertices);
  hyperedges_ = std::move(hyperedges);
}

std::optional<Vertex> Hypergraph::exposed_vertex() const {
  std::set<Vertex> covered;
  for (const auto& e : hyperedges_) covered.insert(e.begin(), e.end());
  for (Vertex v : vertices_) {
    if (!covered.contains(v)) return v;
  }
  return std::nullopt;
}

std::uint64_t VertexSetFamily::total() const {
  std::uint64_t sum = 0;
  for (auto m : multiplicities) sum += m;
  return sum;
}

std::uint64_t VertexSetFamily::coverage(Vertex v) const {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (std::binary_search(sets[i].begin(), sets[i].end(), v)) count += multiplicities[i];
  }
  return count;
}

Graph or_product(const Graph& g, const Graph& h, const Budgets& budgets) {
  require_nonempty(g, "or_product");
  require_nonempty(h, "or_product");
  return build_product(g, h, budgets, [&](Vertex i1, Vertex j1, Vertex i2, Vertex j2) {
    return g.adjacent(i1, i2) || h.adjacent(j1, j2);
  });
}

Graph or_power(const Graph& g, unsigned t, const Budgets& budgets) {
  if (t == 0) throw DomainError("invalid_argument", "or_power: t must be >= 1");
  require_nonempty(g, "or_power");
  Graph result = g;
  for (unsigned j = 1; j < t; ++j) result = or_product(result, g, budgets);
  return result;
}

Graph and_product(const Graph& g, const Graph& h, const Budgets& budgets) {
  require_nonempty(g, "and_product");
  require_nonempty(h, "and_product");
  return build_product(g, h, budgets, [&](Vertex i1, Vertex j1, Vertex i2, Vertex j2) {
    return (i1 == i2 || g.adjacent(i1, i2)) && (j1 == j2 || h.adjacent(j1, j2));
  });
}

Graph and_power(const Graph& g, unsigned t, const Budgets& budgets) {
  if (t == 0) throw DomainError("invalid_argument", "and_power: t must be >= 1");
  require_nonempty(g, "and_power");
  Graph result = g;
  for (unsigned j = 1; j < t; ++j) result = and_product(result, g, budgets);
  return result;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw DomainError("out_of_range", "vertex " + std::to_string(v) + " not in graph of size " +
                                          std::to_string(g.vertex_count()));
  }
  Bitset bits = g.neighbors(v);
  bits.set(v);
  return to_set(bits);
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g, const Budgets& budgets) {
  require_nonempty(g, "maximal_independent_sets");
  return MisEnumerator(g, budgets.mis_work).run();
}

std::size_t independence_number(const Graph& g, const Budgets& budgets) {
  std::size_t best = 0;
  for (const auto& s : maximal_independent_sets(g, budgets)) best = std::max(best, s.size());
  return best;
}

std::vector<VertexSet> mis_of_or_power(const Graph& g, unsigned t, const Budgets& budgets) {
  if (t == 0) throw DomainError("invalid_argument", "mis_of_or_power: t must be >= 1");
  const auto base_sets = maximal_independent_sets(g, budgets);
  const std::size_t n = g.vertex_count();
  sequence_count(n, t, budgets.product_vertices);

  std::vector<VertexSet> partial{VertexSet{0}};
  for (unsigned j = 0; j < t; ++j) {
    std::vector<VertexSet> next;
    next.reserve(partial.size() * base_sets.size());
    for (const auto& prefix : partial) {
      for (const auto& s : base_sets) {
        VertexSet extended;
        extended.reserve(prefix.size() * s.size());
        for (Vertex p : prefix) {
          for (Vertex x : s) extended.push_back(p * n + x);
        }
        next.push_back(std::move(extended));
      }
    }
    partial = std::move(next);
  }
  for (auto& s : partial) std::sort(s.begin(), s.end());
  std::sort(partial.begin(), partial.end());
  return partial;
}

bool is_vertex_transitive(const Graph& g, const Budgets& budgets) {
  require_nonempty(g, "is_vertex_transitive");
  const std::size_t n = g.vertex_count();
  if (n > budgets.automorphism_vertices) {
    throw ResourceError("automorphism_vertices",
                        "vertex-transitivity check limited to " +
                            std::to_string(budgets.automorphism_vertices) + " vertices, got " +
                            std::to_string(n));
  }
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  for (Vertex v = 1; v < n; ++v) {
    if (!automorphism_maps(g, 0, v)) return false;
  }
  return true;
}

Hypergraph associated_hypergraph(const VertexSet& T, const Graph& theta, unsigned t,
                                 const Budgets& budgets) {
  if (t == 0) throw DomainError("invalid_argument", "associated_hypergraph: t must be >= 1");
  require_nonempty(theta, "associated_hypergraph");
  return associated_hypergraph(T, and_power(theta, t, budgets));
}

Hypergraph associated_hypergraph(const VertexSet& T, const Graph& theta_power) {
  if (T.empty()) throw DomainError("empty_set", "associated_hypergraph: T is empty");
  const std::size_t n = theta_power.vertex_count();
  Bitset members(n);
  for (Vertex v : T) {
    if (v >= n) {
      throw DomainError("out_of_range", "T contains vertex " + std::to_string(v) +
                                            " outside a sequence space of size " +
                                            std::to_string(n));
    }
    members.set(v);
  }
  std::vector<VertexSet> hyperedges;
  for (Vertex x = 0; x < n; ++x) {
    Bitset hit = theta_power.neighbors(x) & members;
    if (members.test(x)) hit.set(x);
    if (hit.any()) hyperedges.push_back(to_set(hit));
  }
  return Hypergraph(to_set(members), std::move(hyperedges));
}

}  // namespace zeroleak
