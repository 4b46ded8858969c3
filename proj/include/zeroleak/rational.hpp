#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zeroleak {

/// Exact fraction, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

/// Renders as "p/q"; integers keep the "/1" suffix so the wire format is
/// uniform.
std::string to_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p". Throws DomainError("parse_error").
Rational parse_rational(std::string_view text);

/// log2 of a positive rational as a double. Display only.
double log2_double(const Rational& value);

/// log2 rounded to 12 decimal places, the rendering used for every "bits"
/// field in reports.
double display_bits(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

BigInt ceil(const Rational& value);
BigInt floor(const Rational& value);

}  // namespace zeroleak
