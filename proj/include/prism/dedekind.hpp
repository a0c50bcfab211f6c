#pragma once

/**
 * @file dedekind.hpp
 * @brief Dedekind sums, evaluated exactly.
 *
 * s(m,n) = sum_{i=1}^{n-1} ((i/n)) ((im/n)) with ((x)) = {x} - 1/2 away from
 * integers and 0 on integers.  For gcd(m,n) = 1 no im/n lands on an integer,
 * so each term is (2i-n)(2(im mod n)-n)/(4n^2); the numerators are summed in
 * one integer accumulator and divided once at the end.
 */

#include "prism/rational.hpp"

namespace prism {

/**
 * @brief The Dedekind sum s(m, n).
 * @param m any integer coprime to n (reduced mod n internally)
 * @param n a positive integer
 * @throws std::invalid_argument unless n >= 1 and gcd(m,n) = 1
 */
inline Rational dedekind_sum(Int m, const Int& n) {
  if (n < 1) throw std::invalid_argument("dedekind_sum: need n >= 1");
  m %= n;
  if (m < 0) m += n;
  if (boost::multiprecision::gcd(m, n) != 1)
    throw std::invalid_argument("dedekind_sum: m and n must be coprime");
  Int acc = 0;
  Int r = 0;  // r = (i * m) mod n, maintained incrementally
  for (Int i = 1; i < n; ++i) {
    r += m;
    if (r >= n) r -= n;
    acc += (2 * i - n) * (2 * r - n);
  }
  return Rational(acc, 4 * n * n);
}

}  // namespace prism
