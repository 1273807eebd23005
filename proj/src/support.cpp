#include <cmath>
#include <sstream>

#include "loglim/error.hpp"
#include "loglim/numeric.hpp"

namespace loglim {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
    case ErrorCode::DuplicateEdge: return "duplicate-edge";
    case ErrorCode::CapExceeded: return "cap-exceeded";
    case ErrorCode::NotConverged: return "not-converged";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::Io: return "io-error";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

void fail_cap(const std::string& cap_name, double requested, double limit) {
  std::ostringstream os;
  os << cap_name << " exceeded: requested " << requested << ", limit " << limit;
  throw Error(ErrorCode::CapExceeded, os.str());
}

double log_big(const BigInt& x) {
  if (x <= 0) fail(ErrorCode::InvalidArgument, "log_big: argument must be positive");
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 900) return std::log(x.convert_to<double>());
  const std::size_t shift = bits - 64;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

double log_rational(const Rational& x) {
  return log_big(boost::multiprecision::numerator(x)) -
         log_big(boost::multiprecision::denominator(x));
}

BigInt pow_big(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

BigInt pow_big(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

double to_double(const Rational& x) {
  const BigInt& num = boost::multiprecision::numerator(x);
  const BigInt& den = boost::multiprecision::denominator(x);
  if (num == 0) return 0.0;
  // Integer quotient with at least 64 significant bits, then rescale.
  const BigInt a = abs(num);
  const long shift = 64 + long(boost::multiprecision::msb(den)) - long(boost::multiprecision::msb(a));
  const BigInt q = shift >= 0 ? BigInt(a << shift) / den : BigInt(a / (den << -shift));
  const double v = std::ldexp(q.convert_to<double>(), int(-shift));
  return num < 0 ? -v : v;
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
  const BigInt& den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto bad = [&]() -> Rational { fail(ErrorCode::Parse, "bad rational '" + text + "'"); };
  // Integer or exact decimal such as "-0.75".
  auto parse_decimal = [&](const std::string& s) -> Rational {
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
    BigInt num = 0, den = 1;
    bool digits = false, point = false;
    for (; i < s.size(); ++i) {
      if (s[i] == '.' && !point) {
        point = true;
      } else if (s[i] >= '0' && s[i] <= '9') {
        num = num * 10 + (s[i] - '0');
        if (point) den *= 10;
        digits = true;
      } else {
        return bad();
      }
    }
    if (!digits) return bad();
    Rational r(num, den);
    return negative ? Rational(-r) : r;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + text + "'");
  return parse_decimal(text.substr(0, slash)) / den;
}

}  // namespace loglim
