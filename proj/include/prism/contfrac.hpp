#pragma once

/**
 * @file contfrac.hpp
 * @brief Hirzebruch-Jung continued fractions.
 *
 * A fraction p/q > 1 with gcd(p,q) = 1 has a unique expansion
 *
 *   p/q = [a_0, a_1, ..., a_n]^- = a_0 - 1/(a_1 - 1/(... - 1/a_n))
 *
 * with every a_i >= 2, produced by the greedy rule a = ceil(p/q).  The
 * evaluator is deliberately more permissive than the expander: identities
 * between expansions with small or negative terms are meaningful, so
 * hj_evaluate folds any term sequence exactly and only rejects sequences
 * whose fold hits a zero denominator.
 */

#include <utility>
#include <vector>

#include "prism/rational.hpp"

namespace prism {

/**
 * @brief Expands p/q into its unique all->=2 continued fraction.
 * @param p numerator, p > q
 * @param q denominator, q >= 1, gcd(p,q) = 1
 * @return the terms [a_0, ..., a_n], all >= 2
 * @throws std::invalid_argument unless p > q >= 1 and gcd(p,q) = 1
 */
inline std::vector<Int> hj_expand(Int p, Int q) {
  if (q < 1 || p <= q)
    throw std::invalid_argument("hj_expand: need p > q >= 1");
  if (boost::multiprecision::gcd(p, q) != 1)
    throw std::invalid_argument("hj_expand: p and q must be coprime");
  std::vector<Int> terms;
  while (true) {
    const Int a = ceil_div(p, q);
    terms.push_back(a);
    const Int r = a * q - p;
    if (r == 0) break;
    p = q;
    q = r;
  }
  return terms;
}

/**
 * @brief Evaluates a continued fraction [t_0, ..., t_n]^- exactly.
 *
 * Folds right to left: x <- t_i - 1/x.  Terms may be arbitrary integers
 * (including values < 2), which is needed for blow-down identities between
 * expansions.
 *
 * @return the value as a reduced pair (numerator, denominator > 0)
 * @throws std::invalid_argument on an empty term list
 * @throws std::domain_error when the fold divides by zero
 */
inline std::pair<Int, Int> hj_evaluate(const std::vector<Int>& terms) {
  if (terms.empty())
    throw std::invalid_argument("hj_evaluate: empty term list");
  Rational x(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    if (x == 0)
      throw std::domain_error("hj_evaluate: zero denominator in fold");
    x = Rational(terms[i]) - 1 / x;
  }
  return {numerator(x), denominator(x)};
}

}  // namespace prism
