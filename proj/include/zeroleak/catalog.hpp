#pragma once

#include "zeroleak/graph.hpp"

// Small named graphs used by tests, fixtures and the CLI.
namespace zeroleak::catalog {

Graph complete(std::size_t n);
Graph edgeless(std::size_t n);
/// Cycle 0-1-...-(n-1)-0, n >= 3.
Graph cycle(std::size_t n);
/// Path 0-1-...-(n-1).
Graph path(std::size_t n);
Graph petersen();
/// Water-reservoir confusion graph: K_{2,2} with parts {VH,H} and {VL,L}.
Graph reservoir();
/// Approximation graph pairing VH~H and VL~L on the reservoir alphabet.
Graph reservoir_approximation();

}  // namespace zeroleak::catalog
