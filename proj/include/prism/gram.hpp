#pragma once

/**
 * @file gram.hpp
 * @brief Integer Gram matrices: construction, determinants, linear solves.
 *
 * Matrices are dense vectors of arbitrary-precision integers; ranks in this
 * library stay below twenty, so simplicity wins over sparsity.  Determinants
 * use fraction-free (Bareiss) elimination; tridiagonal determinants also get
 * a three-term recurrence that is cheap enough to sweep over many lattices.
 */

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "prism/rational.hpp"
#include "prism/vec.hpp"

namespace prism {

using IntMatrix = std::vector<std::vector<Int>>;

/// @return the n x n identity matrix (the Gram matrix of Z^n).
inline IntMatrix identity_gram(std::size_t n) {
  IntMatrix g(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
  return g;
}

/**
 * @brief Gram matrix of a path of vertices with the given self-pairings.
 *
 * Diagonal entries are the weights, entries for consecutive vertices are -1,
 * all other entries vanish.  An empty weight list yields the 0 x 0 matrix.
 */
inline IntMatrix tridiagonal_gram(const std::vector<Int>& weights) {
  const std::size_t n = weights.size();
  IntMatrix g(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = weights[i];
    if (i + 1 < n) g[i][i + 1] = g[i + 1][i] = -1;
  }
  return g;
}

/// @return the Gram matrix of a list of integer vectors.
inline IntMatrix gram_of(const std::vector<IntVector>& vectors) {
  const std::size_t n = vectors.size();
  IntMatrix g(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = dot(vectors[i], vectors[j]);
  return g;
}

/// @return the block diagonal sum of two Gram matrices.
inline IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), m = b.size();
  IntMatrix g(n + m, std::vector<Int>(n + m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = a[i][j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g[n + i][n + j] = b[i][j];
  return g;
}

/**
 * @brief Gram matrix of D_k, the index-2 sublattice of Z^k with even
 *        coordinate sum, in the basis e_1-e_2, ..., e_{k-1}-e_k, e_{k-1}+e_k.
 *
 * Requires k >= 2; the determinant is 4 for every k.
 */
inline IntMatrix dk_gram(std::size_t k) {
  if (k < 2) throw std::invalid_argument("dk_gram: need k >= 2");
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    IntVector v(k, 0);
    v[i] = 1;
    v[i + 1] = -1;
    basis.push_back(v);
  }
  IntVector w(k, 0);
  w[k - 2] = 1;
  w[k - 1] = 1;
  basis.push_back(w);
  return gram_of(basis);
}

/**
 * @brief Exact determinant by fraction-free (Bareiss) elimination.
 *
 * Works for any square integer matrix; the 0 x 0 matrix has determinant 1.
 */
inline Int gram_det(IntMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("gram_det: not square");
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/**
 * @brief Determinant of tridiagonal_gram(weights) by the continuant
 *        recurrence d_k = w_k d_{k-1} - d_{k-2}.
 */
inline Int tridiagonal_det(const std::vector<Int>& weights) {
  Int prev = 0;  // the (-1)-st minor
  Int cur = 1;   // the 0 x 0 minor
  for (const Int& w : weights) {
    Int next = w * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// @return the matrix-vector product a * x over the rationals.
inline std::vector<Rational> mat_vec(const IntMatrix& a,
                                     const std::vector<Rational>& x) {
  const std::size_t n = a.size();
  if (x.size() != n) throw std::invalid_argument("mat_vec: size mismatch");
  std::vector<Rational> y(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += Rational(a[i][j]) * x[j];
  return y;
}

inline std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& x) {
  const std::size_t n = a.size();
  if (x.size() != n) throw std::invalid_argument("mat_vec: size mismatch");
  std::vector<Int> y(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += a[i][j] * x[j];
  return y;
}

/**
 * @brief Solves a x = b exactly over the rationals.
 * @throws std::domain_error when a is singular
 */
inline std::vector<Rational> solve_linear(const IntMatrix& a,
                                          const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  if (b.size() != n)
    throw std::invalid_argument("solve_linear: size mismatch");
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
    m[i][n] = b[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("solve_linear: singular matrix");
    std::swap(m[k], m[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

}  // namespace prism
