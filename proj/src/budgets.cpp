#include "zeroleak/budgets.hpp"

#include <charconv>
#include <string>

#include "zeroleak/errors.hpp"

namespace zeroleak {
namespace {

std::uint64_t parse_count(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value == 0) {
    throw DomainError("parse_error", "bad budget override: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Budgets Budgets::parse_override(std::string_view spec, Budgets base) {
  if (spec.find('=') == std::string_view::npos) {
    base.mis_work = parse_count(spec, spec);
    return base;
  }
  std::string_view rest = spec;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("parse_error", "bad budget override: '" + std::string(spec) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const std::uint64_t value = parse_count(item.substr(eq + 1), spec);
    if (key == "mis") {
      base.mis_work = value;
    } else if (key == "automorphism") {
      base.automorphism_vertices = value;
    } else if (key == "cover") {
      base.cover_nodes = value;
    } else if (key == "grid") {
      base.grid_points = value;
    } else if (key == "family") {
      base.family_sets = value;
    } else if (key == "product") {
      base.product_vertices = value;
    } else {
      throw DomainError("parse_error", "unknown budget key '" + std::string(key) + "'");
    }
  }
  return base;
}

}  // namespace zeroleak
