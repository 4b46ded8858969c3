#include "zeroleak/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "zeroleak/errors.hpp"
#include "zeroleak/lp.hpp"

namespace zeroleak::oracle {

namespace {

using Wide = __int128;

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * static_cast<Wide>(n - k + i) / static_cast<Wide>(i);
    if (result > static_cast<Wide>(cap)) return cap + 1;
  }
  return static_cast<std::uint64_t>(result);
}

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_family_size(std::uint64_t count, const Budgets& budgets) {
  if (count > budgets.family_sets) {
    throw ResourceError("family_sets", "guess family would hold more than " +
                                           std::to_string(budgets.family_sets) + " sets");
  }
}

// Largest total of `values` over one set of the family.
template <class T>
T best_mass(const std::vector<T>& values, const GuessFamily& family) {
  switch (family.kind()) {
    case GuessFamily::Kind::singleton:
      return *std::max_element(values.begin(), values.end());
    case GuessFamily::Kind::multi_guess: {
      std::vector<T> sorted = values;
      const std::size_t g = std::min<std::size_t>(family.guesses(), sorted.size());
      std::partial_sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(g),
                        sorted.end(), [](const T& a, const T& b) { return a > b; });
      T total = 0;
      for (std::size_t i = 0; i < g; ++i) total += sorted[i];
      return total;
    }
    default: {
      T best = 0;
      for (const auto& s : family.sets()) {
        T total = 0;
        for (Vertex x : s) total += values[x];
        if (total > best) best = total;
      }
      return best;
    }
  }
}

std::vector<Rational> sequence_prior(const std::vector<Rational>& px, unsigned t,
                                     std::size_t count) {
  std::vector<Rational> prior(count);
  for (std::size_t x = 0; x < count; ++x) {
    Rational p = 1;
    std::size_t rest = x;
    for (unsigned j = 0; j < t; ++j) {
      p *= px[rest % px.size()];
      rest /= px.size();
    }
    prior[x] = p;
  }
  return prior;
}

void check_shapes(const StochasticMapping& m, const GuessFamily& family, std::size_t symbols) {
  if (family.t() != m.t() || family.source_count() != m.source_count()) {
    throw DomainError("dimension_mismatch", "guess family and mapping disagree on t or |X^t|");
  }
  if (sequence_count(symbols, m.t()) != m.source_count()) {
    throw DomainError("dimension_mismatch", "distribution length does not match the mapping");
  }
}

// Exact ratio at one source distribution; zero-mass letters are allowed here.
std::pair<Rational, Rational> ratio_parts(const StochasticMapping& m,
                                          const std::vector<Rational>& px,
                                          const GuessFamily& family) {
  const auto prior = sequence_prior(px, m.t(), m.source_count());
  Rational numerator = 0;
  std::vector<Rational> joint(m.source_count());
  for (std::size_t y = 0; y < m.codeword_count(); ++y) {
    for (std::size_t x = 0; x < m.source_count(); ++x) joint[x] = prior[x] * m.probability(x, y);
    numerator += best_mass(joint, family);
  }
  return {numerator, best_mass(prior, family)};
}

nlohmann::json rational_array(const std::vector<Rational>& values) {
  auto out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(zeroleak::to_string(v));
  return out;
}

std::vector<Bitset> as_bitsets(const std::vector<VertexSet>& sets, std::size_t n) {
  std::vector<Bitset> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    Bitset b(n);
    for (Vertex v : s) b.set(v);
    out.push_back(std::move(b));
  }
  return out;
}

Bitset support_bits(const StochasticMapping& m, std::size_t y) {
  Bitset b(m.source_count());
  for (Vertex x : m.support(y)) b.set(x);
  return b;
}

}  // namespace

GuessFamily GuessFamily::singleton(const Graph& base, unsigned t, const Budgets& budgets) {
  GuessFamily f;
  f.kind_ = Kind::singleton;
  f.t_ = t;
  f.source_count_ = sequence_count(base.vertex_count(), t, budgets.product_vertices);
  check_family_size(f.source_count_, budgets);
  for (std::size_t x = 0; x < f.source_count_; ++x) f.sets_.push_back({x});
  return f;
}

GuessFamily GuessFamily::multi_guess(const Graph& base, unsigned t, std::uint64_t guesses,
                                     const Budgets& budgets) {
  GuessFamily f;
  f.kind_ = Kind::multi_guess;
  f.t_ = t;
  f.guesses_ = guesses;
  f.source_count_ = sequence_count(base.vertex_count(), t, budgets.product_vertices);
  if (guesses == 0 || guesses > f.source_count_) {
    throw DomainError("invalid_argument", "number of guesses must lie in [1, |X|^t]");
  }
  check_family_size(binomial_capped(f.source_count_, guesses, budgets.family_sets), budgets);
  for_each_combination(f.source_count_, guesses,
                       [&](const std::vector<std::size_t>& idx) { f.sets_.push_back(idx); });
  return f;
}

GuessFamily GuessFamily::approx(const Graph& theta, unsigned t, const Budgets& budgets) {
  GuessFamily f;
  f.kind_ = Kind::approx;
  f.t_ = t;
  const Graph power = and_power(theta, t, budgets);
  f.source_count_ = power.vertex_count();
  std::set<VertexSet> unique;
  for (Vertex x = 0; x < power.vertex_count(); ++x) unique.insert(closed_neighborhood(power, x));
  f.sets_.assign(unique.begin(), unique.end());
  return f;
}

GuessFamily GuessFamily::multi_approx(const Graph& theta, unsigned t, std::uint64_t guesses,
                                      const Budgets& budgets) {
  GuessFamily f;
  f.kind_ = Kind::multi_approx;
  f.t_ = t;
  f.guesses_ = guesses;
  const Graph power = and_power(theta, t, budgets);
  f.source_count_ = power.vertex_count();
  if (guesses == 0) throw DomainError("invalid_argument", "number of guesses must be >= 1");
  const std::size_t k = std::min<std::uint64_t>(guesses, f.source_count_);
  check_family_size(binomial_capped(f.source_count_, k, budgets.family_sets), budgets);
  std::vector<Bitset> hoods;
  for (Vertex x = 0; x < power.vertex_count(); ++x) {
    Bitset b = power.neighbors(x);
    b.set(x);
    hoods.push_back(std::move(b));
  }
  std::set<VertexSet> unique;
  for_each_combination(f.source_count_, k, [&](const std::vector<std::size_t>& idx) {
    Bitset u(f.source_count_);
    for (std::size_t i : idx) u |= hoods[i];
    VertexSet s;
    for (auto v = u.find_first(); v != Bitset::npos; v = u.find_next(v)) s.push_back(v);
    unique.insert(std::move(s));
  });
  f.sets_.assign(unique.begin(), unique.end());
  return f;
}

DistributionGrid::DistributionGrid(std::size_t symbols, unsigned resolution,
                                   const Budgets& budgets)
    : symbols_(symbols), resolution_(resolution) {
  if (symbols == 0 || resolution == 0) {
    throw DomainError("invalid_argument", "grid needs at least one symbol and resolution >= 1");
  }
  const std::uint64_t count =
      binomial_capped(resolution + symbols - 1, symbols - 1, budgets.grid_points);
  if (count > budgets.grid_points) {
    throw ResourceError("grid_points", "distribution grid would exceed " +
                                           std::to_string(budgets.grid_points) + " points");
  }
  const bool add_uniform = resolution % symbols != 0;
  denominator_ = add_uniform ? std::lcm<std::uint64_t>(resolution, symbols) : resolution;
  const std::uint64_t scale = denominator_ / resolution;

  weights_.reserve(count + (add_uniform ? 1 : 0));
  // Compositions of `resolution` into `symbols` parts, lexicographically
  // descending in the first coordinate.
  std::vector<std::uint64_t> parts(symbols, 0);
  parts[0] = resolution;
  while (true) {
    std::vector<std::uint64_t> w(symbols);
    for (std::size_t i = 0; i < symbols; ++i) w[i] = parts[i] * scale;
    weights_.push_back(std::move(w));
    // Next composition: move the tail plus one unit from the last nonzero
    // part before the tail into the slot after it.
    if (symbols == 1) break;
    std::size_t i = symbols - 2;
    while (i > 0 && parts[i] == 0) --i;
    if (parts[i] == 0) break;
    const std::uint64_t tail = parts[symbols - 1];
    parts[symbols - 1] = 0;
    --parts[i];
    parts[i + 1] = tail + 1;
  }
  if (add_uniform) weights_.emplace_back(symbols, denominator_ / symbols);
}

std::vector<Rational> DistributionGrid::point(std::size_t i) const {
  std::vector<Rational> out;
  out.reserve(symbols_);
  for (auto w : weights_[i]) {
    out.emplace_back(static_cast<unsigned long>(w), static_cast<unsigned long>(denominator_));
    out.back().canonicalize();
  }
  return out;
}

bool DistributionGrid::on_boundary(std::size_t i) const {
  return std::find(weights_[i].begin(), weights_[i].end(), 0) != weights_[i].end();
}

Rational rho_fixed_px(const StochasticMapping& m, const std::vector<Rational>& px,
                      const GuessFamily& family) {
  check_shapes(m, family, px.size());
  Rational total = 0;
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (px[i] <= 0) {
      throw DomainError("zero_mass", "source distribution gives letter " + std::to_string(i) +
                                         " no mass");
    }
    total += px[i];
  }
  if (total != 1) throw DomainError("invalid_distribution", "distribution does not sum to 1");
  const auto [num, den] = ratio_parts(m, px, family);
  return num / den;
}

WorstCase worst_case_rho(const StochasticMapping& m, const GuessFamily& family,
                         const DistributionGrid& grid) {
  check_shapes(m, family, grid.symbols());
  if (grid.size() == 0) throw DomainError("invalid_argument", "empty distribution grid");
  const std::size_t count = m.source_count();
  const std::size_t words = m.codeword_count();
  const unsigned t = m.t();

  // Integer scaling: mapping entries over a common denominator, grid weights
  // over the grid denominator. Ratios are compared by cross-multiplication.
  BigInt common = 1;
  for (const auto& row : m.rows()) {
    for (const auto& p : row) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), p.get_den_mpz_t());
  }
  const double bits = std::log2(static_cast<double>(words) + 1) +
                      2 * std::log2(static_cast<double>(count) + 1) +
                      2.0 * t * std::log2(static_cast<double>(grid.denominator())) +
                      static_cast<double>(mpz_sizeinbase(common.get_mpz_t(), 2)) + 2;
  WorstCase best;
  if (bits < 124 && common.fits_slong_p()) {
    std::vector<std::vector<Wide>> scaled(count, std::vector<Wide>(words));
    for (std::size_t x = 0; x < count; ++x) {
      for (std::size_t y = 0; y < words; ++y) {
        const Rational v = m.probability(x, y) * common;
        scaled[x][y] = static_cast<Wide>(v.get_num().get_si());
      }
    }
    std::vector<Wide> prior(count), joint(count);
    Wide best_num = 0, best_den = 1;
    bool have = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& w = grid.weights(i);
      for (std::size_t x = 0; x < count; ++x) {
        Wide p = 1;
        std::size_t rest = x;
        for (unsigned j = 0; j < t; ++j) {
          p *= static_cast<Wide>(w[rest % grid.symbols()]);
          rest /= grid.symbols();
        }
        prior[x] = p;
      }
      Wide num = 0;
      for (std::size_t y = 0; y < words; ++y) {
        for (std::size_t x = 0; x < count; ++x) joint[x] = prior[x] * scaled[x][y];
        num += best_mass(joint, family);
      }
      const Wide den = best_mass(prior, family);
      if (!have || num * best_den > best_num * den) {
        best_num = num;
        best_den = den;
        best.argmax = i;
        have = true;
      }
    }
    auto to_big = [](Wide v) {
      const auto u = static_cast<unsigned __int128>(v);
      BigInt out(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
      out <<= 64;
      out += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
      return out;
    };
    best.value = Rational(to_big(best_num), to_big(best_den) * common);
    best.value.canonicalize();
  } else {
    bool have = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto [num, den] = ratio_parts(m, grid.point(i), family);
      const Rational r = num / den;
      if (!have || r > best.value) {
        best.value = r;
        best.argmax = i;
        have = true;
      }
    }
  }
  best.closure = grid.on_boundary(best.argmax);
  return best;
}

std::string to_string(Status status) {
  switch (status) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::estimate:
      return "estimate";
  }
  return "fail";
}

Report verify_eta_duality(const Graph& gamma, unsigned t, const Budgets& budgets) {
  const Graph power = or_power(gamma, t, budgets);
  const auto eta = maximin_eta(power, budgets);
  const auto chi = fractional_chromatic(power, budgets);
  Report r;
  r.check = "eta_duality";
  r.lhs = eta.value * chi.value;
  r.rhs = 1;
  r.status = r.lhs == r.rhs ? Status::pass : Status::fail;
  r.witness = {{"t", t},
               {"vertices", power.vertex_count()},
               {"independent_sets", chi.sets.size()},
               {"eta", zeroleak::to_string(eta.value)},
               {"chi_f", zeroleak::to_string(chi.value)}};
  return r;
}

Report verify_packing_reciprocity(const Graph& theta, const DistributionGrid& grid) {
  if (grid.symbols() != theta.vertex_count()) {
    throw DomainError("dimension_mismatch", "grid alphabet differs from the graph");
  }
  const auto packing = fractional_packing(theta);
  std::vector<Bitset> hoods;
  for (Vertex x = 0; x < theta.vertex_count(); ++x) {
    Bitset b = theta.neighbors(x);
    b.set(x);
    hoods.push_back(std::move(b));
  }
  // Integer min-max over the grid; every point shares one denominator.
  std::uint64_t best = UINT64_MAX;
  std::size_t argmin = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& w = grid.weights(i);
    std::uint64_t worst = 0;
    for (const auto& h : hoods) {
      std::uint64_t mass = 0;
      for (auto v = h.find_first(); v != Bitset::npos; v = h.find_next(v)) mass += w[v];
      worst = std::max(worst, mass);
    }
    if (worst < best) {
      best = worst;
      argmin = i;
    }
  }
  Report r;
  r.check = "packing_reciprocity";
  r.lhs = Rational(static_cast<unsigned long>(best), static_cast<unsigned long>(grid.denominator()));
  r.lhs.canonicalize();
  r.rhs = 1 / packing.value;
  if (r.lhs < r.rhs) {
    r.status = Status::fail;
  } else {
    r.status = r.lhs == r.rhs ? Status::pass : Status::estimate;
  }
  r.witness = {{"p_f", zeroleak::to_string(packing.value)},
               {"px", rational_array(grid.point(argmin))},
               {"closure", grid.on_boundary(argmin)},
               {"resolution", grid.resolution()}};
  return r;
}

Report verify_multi_guess_lower(const Graph& gamma, const GuessBudget& g, unsigned t,
                                unsigned resolution, std::size_t trials, std::uint64_t seed,
                                const Budgets& budgets, std::size_t enumeration_limit) {
  if (gamma.empty()) throw DomainError("empty_graph", "graph has no vertices");
  if (resolution == 0) throw DomainError("invalid_argument", "resolution must be >= 1");
  const std::size_t alpha = independence_number(gamma, budgets);
  BigInt alpha_t = 1;
  for (unsigned j = 0; j < t; ++j) alpha_t *= static_cast<unsigned long>(alpha);
  const BigInt guesses = g(t);
  if (guesses > alpha_t) {
    throw DomainError("inadmissible_budget", "g(" + std::to_string(t) + ") = " +
                                                 guesses.get_str() + " exceeds alpha^t = " +
                                                 alpha_t.get_str());
  }
  const auto family = GuessFamily::multi_guess(gamma, t, guesses.get_ui(), budgets);
  const std::size_t count = family.source_count();
  const auto sets = mis_of_or_power(gamma, t, budgets);
  std::vector<std::vector<std::size_t>> hosts(count);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Vertex x : sets[i]) hosts[x].push_back(i);
  }
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < sets.size(); ++i) ids.push_back("T" + std::to_string(i));
  const std::vector<Rational> uniform(gamma.vertex_count(),
                                      Rational(1, static_cast<unsigned long>(gamma.vertex_count())));

  // Per-row compositions of `resolution` units over the hosting sets.
  std::vector<std::vector<std::vector<unsigned>>> choices(count);
  std::uint64_t total = 1;
  bool enumerate = true;
  for (std::size_t x = 0; x < count; ++x) {
    const std::size_t d = hosts[x].size();
    const std::uint64_t c = binomial_capped(resolution + d - 1, d - 1, enumeration_limit);
    if (c > enumeration_limit || total > enumeration_limit / std::max<std::uint64_t>(c, 1)) {
      enumerate = false;
      break;
    }
    total *= c;
  }
  if (enumerate) {
    for (std::size_t x = 0; x < count; ++x) {
      const std::size_t d = hosts[x].size();
      // Stars and bars: choose bar positions among resolution + d - 1 slots.
      for_each_combination(resolution + d - 1, d - 1, [&](const std::vector<std::size_t>& bars) {
        std::vector<unsigned> parts(d);
        std::size_t prev = 0;
        for (std::size_t k = 0; k < bars.size(); ++k) {
          parts[k] = static_cast<unsigned>(bars[k] - prev);
          prev = bars[k] + 1;
        }
        parts[d - 1] = static_cast<unsigned>(resolution + d - 1 - prev);
        choices[x].push_back(std::move(parts));
      });
    }
  }

  const Rational unit(1, resolution);
  auto build = [&](const std::vector<std::vector<unsigned>>& shares) {
    std::vector<std::vector<Rational>> rows(count, std::vector<Rational>(sets.size(), Rational(0)));
    for (std::size_t x = 0; x < count; ++x) {
      for (std::size_t k = 0; k < hosts[x].size(); ++k) rows[x][hosts[x][k]] = unit * shares[x][k];
    }
    return StochasticMapping(t, ids, std::move(rows));
  };

  Rational worst;
  bool have = false;
  nlohmann::json worst_rows;
  std::size_t tested = 0;
  auto consider = [&](const StochasticMapping& m) {
    const Rational rho = rho_fixed_px(m, uniform, family);
    ++tested;
    if (!have || rho < worst) {
      worst = rho;
      have = true;
      worst_rows = nlohmann::json::array();
      for (const auto& row : m.rows()) worst_rows.push_back(rational_array(row));
    }
  };

  if (enumerate) {
    std::vector<std::size_t> odometer(count, 0);
    std::vector<std::vector<unsigned>> shares(count);
    while (true) {
      for (std::size_t x = 0; x < count; ++x) shares[x] = choices[x][odometer[x]];
      consider(build(shares));
      std::size_t x = 0;
      while (x < count && ++odometer[x] == choices[x].size()) odometer[x++] = 0;
      if (x == count) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
      std::vector<std::vector<unsigned>> shares(count);
      for (std::size_t x = 0; x < count; ++x) {
        shares[x].assign(hosts[x].size(), 0);
        for (unsigned u = 0; u < resolution; ++u) ++shares[x][rng() % hosts[x].size()];
      }
      consider(build(shares));
    }
  }

  Report r;
  r.check = "multi_guess_lower";
  r.lhs = worst;
  r.rhs = Rational(BigInt(static_cast<unsigned long>(count)), alpha_t);
  r.rhs.canonicalize();
  r.status = have && r.lhs >= r.rhs ? Status::pass : Status::fail;
  r.witness = {{"t", t},
               {"guesses", guesses.get_str()},
               {"mode", enumerate ? "enumerated" : "sampled"},
               {"mappings", tested},
               {"resolution", resolution},
               {"seed", seed},
               {"worst_rows", worst_rows}};
  return r;
}

StochasticMapping random_valid_mapping(const Graph& gamma, unsigned t, unsigned resolution,
                                       std::mt19937_64& rng, const Budgets& budgets) {
  if (resolution == 0) throw DomainError("invalid_argument", "resolution must be >= 1");
  const auto sets = mis_of_or_power(gamma, t, budgets);
  const std::size_t count = sequence_count(gamma.vertex_count(), t, budgets.product_vertices);
  const auto bits = as_bitsets(sets, count);
  std::vector<std::vector<std::size_t>> containing(count);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Vertex x : sets[i]) containing[x].push_back(i);
  }

  std::vector<std::size_t> host;
  for (std::size_t x = 0; x < count; ++x) host.push_back(containing[x][rng() % containing[x].size()]);
  for (std::size_t k = 0; k < count / 2; ++k) host.push_back(rng() % sets.size());

  std::vector<std::vector<unsigned>> shares(count, std::vector<unsigned>(host.size(), 0));
  for (std::size_t x = 0; x < count; ++x) {
    std::vector<std::size_t> eligible;
    for (std::size_t c = 0; c < host.size(); ++c) {
      if (bits[host[c]].test(x)) eligible.push_back(c);
    }
    for (unsigned u = 0; u < resolution; ++u) ++shares[x][eligible[rng() % eligible.size()]];
  }

  std::vector<std::size_t> used;
  for (std::size_t c = 0; c < host.size(); ++c) {
    for (std::size_t x = 0; x < count; ++x) {
      if (shares[x][c]) {
        used.push_back(c);
        break;
      }
    }
  }
  std::vector<std::string> ids;
  for (std::size_t k = 0; k < used.size(); ++k) ids.push_back("y" + std::to_string(k));
  std::vector<std::vector<Rational>> rows(count);
  const Rational unit(1, resolution);
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t c : used) rows[x].push_back(unit * shares[x][c]);
  }
  return StochasticMapping(t, std::move(ids), std::move(rows));
}

Report verify_mergeability_closure(const Graph& gamma, unsigned t, std::size_t trials,
                                   std::uint64_t seed, unsigned resolution,
                                   const Budgets& budgets) {
  const auto sets = mis_of_or_power(gamma, t, budgets);
  const std::size_t count = sequence_count(gamma.vertex_count(), t, budgets.product_vertices);
  const auto bits = as_bitsets(sets, count);
  auto hosts_of = [&](const Bitset& support) {
    Bitset out(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (support.is_subset_of(bits[i])) out.set(i);
    }
    return out;
  };

  std::mt19937_64 rng(seed);
  std::size_t violations = 0;
  std::size_t merges = 0;
  std::size_t longest = 0;
  nlohmann::json first_violation;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    StochasticMapping m = random_valid_mapping(gamma, t, resolution, rng, budgets);
    Rational leak = maximal_leakage(m).log2_of;
    std::size_t chain = 0;
    auto flag = [&](const std::string& what) {
      if (violations++ == 0) {
        first_violation = {{"trial", trial}, {"step", chain}, {"reason", what}};
      }
    };
    while (true) {
      std::vector<Bitset> hosts;
      for (std::size_t y = 0; y < m.codeword_count(); ++y) hosts.push_back(hosts_of(support_bits(m, y)));
      std::optional<std::pair<std::size_t, std::size_t>> pair;
      for (std::size_t a = 0; a < hosts.size() && !pair; ++a) {
        if (hosts[a].none()) flag("support outside every maximal independent set");
        for (std::size_t b = a + 1; b < hosts.size() && !pair; ++b) {
          if (hosts[a].intersects(hosts[b])) pair.emplace(a, b);
        }
      }
      if (!pair) break;
      m = merge_codewords(m, pair->first, pair->second, gamma, budgets);
      ++chain;
      ++merges;
      const Rational next = maximal_leakage(m).log2_of;
      if (next > leak) flag("leakage increased from " + zeroleak::to_string(leak) + " to " +
                            zeroleak::to_string(next));
      leak = next;
    }
    // Fixpoint: the map codeword -> hosting maximal independent sets must be
    // injective with pairwise disjoint images.
    std::set<std::size_t> claimed;
    for (std::size_t y = 0; y < m.codeword_count(); ++y) {
      const Bitset h = hosts_of(support_bits(m, y));
      for (auto i = h.find_first(); i != Bitset::npos; i = h.find_next(i)) {
        if (!claimed.insert(i).second) flag("two codewords share a maximal independent set");
      }
    }
    longest = std::max(longest, chain);
  }

  Report r;
  r.check = "mergeability_closure";
  r.lhs = static_cast<unsigned long>(violations);
  r.rhs = 0;
  r.status = violations == 0 ? Status::pass : Status::fail;
  r.witness = {{"t", t},
               {"trials", trials},
               {"seed", seed},
               {"resolution", resolution},
               {"merges", merges},
               {"longest_chain", longest}};
  if (violations) r.witness["first_violation"] = first_violation;
  return r;
}

Report verify_singleton_closed_form(const StochasticMapping& m, const DistributionGrid& grid) {
  const std::size_t symbols = grid.symbols();
  GuessFamily family = [&] {
    const Graph alphabet(symbols, {});
    return GuessFamily::singleton(alphabet, m.t());
  }();
  const auto worst = worst_case_rho(m, family, grid);
  Report r;
  r.check = "singleton_closed_form";
  r.lhs = worst.value;
  r.rhs = maximal_leakage(m).log2_of;
  if (r.lhs > r.rhs) {
    r.status = Status::fail;
  } else {
    r.status = r.lhs == r.rhs ? Status::pass : Status::estimate;
  }
  r.witness = {{"px", rational_array(grid.point(worst.argmax))},
               {"closure", worst.closure},
               {"resolution", grid.resolution()}};
  return r;
}

nlohmann::json to_json(const Report& report) {
  return {{"check", report.check},
          {"status", to_string(report.status)},
          {"witness", report.witness},
          {"lhs", zeroleak::to_string(report.lhs)},
          {"rhs", zeroleak::to_string(report.rhs)}};
}

}  // namespace zeroleak::oracle
