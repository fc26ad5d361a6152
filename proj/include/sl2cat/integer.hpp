#pragma once

// Arbitrary-precision scalars shared by every module.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace sl2cat {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) {
    return boost::multiprecision::numerator(q).str();
  }
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

/// Parses "p" or "p/q" with optional sign; nullopt on malformed input or q = 0.
std::optional<Rational> parse_rational(const std::string& text);

/// Value as int64 when it fits.
std::optional<std::int64_t> to_int64(const Integer& v);

}  // namespace sl2cat
