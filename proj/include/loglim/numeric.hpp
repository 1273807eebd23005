#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace loglim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Natural logarithm of a positive big integer. Values beyond the double
/// range are shifted down first, so the result is accurate to ~1 ulp of the
/// leading 60 bits.
double log_big(const BigInt& x);

/// Natural logarithm of a positive rational, computed as log(num) - log(den).
double log_rational(const Rational& x);

BigInt pow_big(const BigInt& base, unsigned exponent);
BigInt pow_big(std::uint64_t base, unsigned exponent);

double to_double(const Rational& x);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);  // "num/den", or "num" if den == 1

/// Parses "a/b", "a" or an exact decimal "0.75" into a rational; throws Error(Parse) on bad input.
Rational parse_rational(const std::string& text);

}  // namespace loglim
