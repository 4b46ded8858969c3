#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace zeroleak {

/// Work limits for the enumerations used throughout the library. None of
/// these carry mathematical meaning; they only keep desk-scale runs bounded.
struct Budgets {
  /// Bron-Kerbosch recursion steps allowed per maximal independent set run.
  std::uint64_t mis_work = std::uint64_t{1} << 20;
  /// Largest graph accepted by the exhaustive automorphism search.
  std::size_t automorphism_vertices = 10;
  /// Branch-and-bound nodes allowed per exact set cover.
  std::uint64_t cover_nodes = 1'000'000;
  /// Largest distribution grid the oracle will materialize.
  std::uint64_t grid_points = 5'000'000;
  /// Largest guess family (number of covering sets) the oracle materializes.
  std::uint64_t family_sets = 2'000'000;
  /// Largest product graph (vertex count) built explicitly.
  std::uint64_t product_vertices = 4096;

  /// Applies an override string of the form "N" (MIS work only) or
  /// "key=N,key=N" with keys mis, automorphism, cover, grid, family, product.
  /// Throws DomainError on malformed input.
  static Budgets parse_override(std::string_view spec, Budgets base);
  static Budgets parse_override(std::string_view spec);
};

inline Budgets Budgets::parse_override(std::string_view spec) {
  return parse_override(spec, Budgets{});
}

}  // namespace zeroleak
