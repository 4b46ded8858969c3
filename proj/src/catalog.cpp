#include "zeroleak/catalog.hpp"

#include "zeroleak/errors.hpp"

namespace zeroleak::catalog {

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph edgeless(std::size_t n) { return Graph(n, {}); }

Graph cycle(std::size_t n) {
  if (n < 3) throw DomainError("invalid_argument", "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph(10, std::move(edges));
}

Graph reservoir() {
  return Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}},
               std::vector<std::string>{"VH", "H", "VL", "L"});
}

Graph reservoir_approximation() {
  return Graph(4, {{0, 1}, {2, 3}}, std::vector<std::string>{"VH", "H", "VL", "L"});
}

}  // namespace zeroleak::catalog
