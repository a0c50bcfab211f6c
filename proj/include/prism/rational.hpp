#pragma once

/**
 * @file rational.hpp
 * @brief Exact integer and rational arithmetic primitives.
 *
 * Everything downstream (continued fractions, Dedekind sums, lattice
 * correction terms) is decided by exact equalities of quarters and
 * eighths, so no floating point is used anywhere in this library.
 *
 * Key design decisions:
 * - Arbitrary-precision integers and rationals from Boost.Multiprecision;
 *   rationals are always stored reduced with a positive denominator.
 * - Division helpers (floor, ceil, integer square root) are total on the
 *   documented domains and throw std::invalid_argument otherwise.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <set>
#include <stdexcept>
#include <string>

namespace prism {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A multiset of correction terms, one per discriminant class.
using DInvariant = std::multiset<Rational>;

/// Thrown when a computation would exceed the configured desk-scale limits.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// @return floor(a / b) for b != 0.
inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("floor_div: division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// @return ceil(a / b) for b != 0.
inline Int ceil_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("ceil_div: division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

/// @return the largest integer r with r*r <= n; requires n >= 0.
inline Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
  return boost::multiprecision::sqrt(n);
}

/// @return floor of the rational x as an integer.
inline Int rational_floor(const Rational& x) {
  return floor_div(numerator(x), denominator(x));
}

/// @return ceil of the rational x as an integer.
inline Int rational_ceil(const Rational& x) {
  return ceil_div(numerator(x), denominator(x));
}

/// @return an integer nearest to x (ties broken toward floor).
inline Int rational_round(const Rational& x) {
  return rational_floor(x + Rational(1, 2));
}

/// Renders a rational exactly as "numerator/denominator", e.g. "-1/4", "3/1".
inline std::string format_rational(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Display-only decimal rendering of a rational; never used in computations.
inline std::string format_decimal(const Rational& x, unsigned digits = 12) {
  const bool negative = x < 0;
  Rational a = negative ? Rational(-x) : x;
  Int whole = rational_floor(a);
  Rational frac = a - Rational(whole);
  std::string out = (negative ? "-" : "") + whole.str();
  if (frac == 0) return out;
  out += '.';
  for (unsigned i = 0; i < digits && frac != 0; ++i) {
    frac *= 10;
    Int digit = rational_floor(frac);
    out += static_cast<char>('0' + digit.convert_to<int>());
    frac -= Rational(digit);
  }
  return out;
}

}  // namespace prism
