#include "zeroleak/rational.hpp"

#include <cmath>
#include <string>

#include "zeroleak/errors.hpp"

namespace zeroleak {

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+') {
    throw DomainError("parse_error", "not a rational: '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  BigInt n(num_str, 10);
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw DomainError("parse_error", "zero denominator: '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

double log2_double(const Rational& value) {
  // mpz_get_d_2exp keeps huge numerators/denominators out of double overflow.
  long num_exp = 0;
  long den_exp = 0;
  const double num_mant = mpz_get_d_2exp(&num_exp, value.get_num_mpz_t());
  const double den_mant = mpz_get_d_2exp(&den_exp, value.get_den_mpz_t());
  return std::log2(num_mant) - std::log2(den_mant) + static_cast<double>(num_exp - den_exp);
}

double display_bits(const Rational& value) {
  const double bits = log2_double(value);
  const double rounded = std::round(bits * 1e12) / 1e12;
  return rounded == 0.0 ? 0.0 : rounded;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

BigInt ceil(const Rational& value) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigInt floor(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

}  // namespace zeroleak
