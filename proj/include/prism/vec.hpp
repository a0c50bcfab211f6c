#pragma once

/**
 * @file vec.hpp
 * @brief Small integer vectors and their inner products.
 *
 * Vectors of machine integers are enough for every combinatorial object in
 * this library (changemaker vectors, characteristic covectors, basis vectors
 * of orthogonal complements); their entries and norms stay far below 2^62 at
 * the supported desk scales. Determinants and coset arithmetic, which can
 * genuinely grow, use arbitrary precision instead (see gram.hpp).
 */

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace prism {

using IntVector = std::vector<long long>;

/// @return the standard inner product of a and b; sizes must match.
inline long long dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: size mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// @return the squared euclidean norm of a.
inline long long norm2(const IntVector& a) { return dot(a, a); }

/// @return the sum of the entries of a.
inline long long vector_sum(const IntVector& a) {
  long long s = 0;
  for (long long x : a) s += x;
  return s;
}

/// Renders a vector as "(a,b,c)".
inline std::string format_vector(const IntVector& a) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ',';
    out << a[i];
  }
  out << ')';
  return out.str();
}

}  // namespace prism
