#pragma once

// Exact scalar field used by every decisive predicate in the library.
//
// Expression templates are disabled so the type composes cleanly with Eigen's
// own expression machinery (boost/multiprecision/eigen.hpp supplies NumTraits).

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace weaknet {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p/q" or "p" (optional leading '-' or '+'; q > 0). Decimal points,
/// exponents and whitespace are rejected with ErrorKind::ParseError.
Rational parse_rational(std::string_view text);

/// Lowest-terms decimal rendering, "p/q" or "p".
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return q.sign(); }

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

inline Rational abs(const Rational& q) { return q.sign() < 0 ? Rational(-q) : q; }

/// Square root when it is rational, nullopt otherwise (and for q < 0).
std::optional<Rational> exact_sqrt(const Rational& q);

/// Smallest positive integer i with i*i > q (q >= 0).
Integer smallest_int_with_square_above(const Rational& q);

/// Nearest rational with the given denominator; used to bring sampled doubles
/// into the exact field at a controlled bit size.
Rational round_to_denominator(double value, std::int64_t denominator);

/// Lossy, for diagnostics and numeric oracles only.
double to_double(const Rational& q);

}  // namespace weaknet
