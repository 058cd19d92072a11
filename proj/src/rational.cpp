#include "weaknet/rational.hpp"

#include <cmath>

#include "weaknet/error.hpp"

namespace weaknet {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw Error(ErrorKind::ParseError, "malformed rational literal '" + std::string(text) + "'");
  }
  Integer num{std::string(num_text)};
  Integer den{std::string(den_text)};
  if (den == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  // The two-argument constructor canonicalizes; string construction does not.
  return Rational(num, den);
}

std::string to_string(const Rational& q) { return q.str(); }

Integer floor(const Rational& q) {
  const Integer n = numerator(q);
  const Integer d = denominator(q);
  Integer quotient = n / d;  // truncates toward zero
  if (n.sign() < 0 && quotient * d != n) quotient -= 1;
  return quotient;
}

Integer ceil(const Rational& q) { return -floor(Rational(-q)); }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  const Integer n = numerator(q);
  const Integer d = denominator(q);
  const Integer rn = boost::multiprecision::sqrt(n);
  const Integer rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

Integer smallest_int_with_square_above(const Rational& q) {
  if (q.sign() < 0) return Integer(1);
  // floor(sqrt(q)) == isqrt(floor(q)) for q >= 0.
  Integer i = boost::multiprecision::sqrt(floor(q)) + 1;
  if (i < 1) i = 1;
  return i;
}

Rational round_to_denominator(double value, std::int64_t denominator) {
  const double scaled = std::nearbyint(value * static_cast<double>(denominator));
  return Rational(Integer(static_cast<long long>(scaled)), Integer(denominator));
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace weaknet
