#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ramsey {

/// Arbitrary-precision exact rational. All verdict paths compare values of
/// this type; nothing in the library converts them to floating point.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q" or "p" (optionally signed). Decimal or exponent notation is
/// rejected with Errc::ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

/// binom(m, 2) as an exact integer.
inline BigInt choose2(std::int64_t m) {
  if (m < 2) return 0;
  return BigInt(m) * (m - 1) / 2;
}

}  // namespace ramsey
