#pragma once

/**
 * @file enumerate.hpp
 * @brief Exact enumeration over positive definite quadratic forms.
 *
 * Provides the three primitives every coset-minimum computation in this
 * library reduces to:
 *
 * - an LDL^T decomposition of an integer form over the rationals,
 * - branch-and-bound minimization of (x+c)^T A (x+c) over integer x for a
 *   positive definite A and a rational shift c (a closest-vector search),
 * - coset representatives of Z^r modulo the column span of an integer matrix.
 *
 * All interval endpoints in the search are integers obtained from exact
 * rational comparisons; an integer-square-root overestimate is corrected by
 * at most two exact decrement steps, so no floating point enters anywhere.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "prism/gram.hpp"
#include "prism/rational.hpp"

namespace prism {

/// Unit lower-triangular l and positive diagonal d with a = l * diag(d) * l^T.
struct LdlDecomposition {
  std::vector<Rational> d;
  std::vector<std::vector<Rational>> l;
};

/// @throws std::domain_error when a is not positive definite.
inline LdlDecomposition ldl_decompose(const IntMatrix& a) {
  const std::size_t n = a.size();
  LdlDecomposition out;
  out.d.assign(n, Rational(0));
  out.l.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    Rational dj(a[j][j]);
    for (std::size_t k = 0; k < j; ++k)
      dj -= out.l[j][k] * out.l[j][k] * out.d[k];
    if (dj <= 0)
      throw std::domain_error("ldl_decompose: form is not positive definite");
    out.d[j] = dj;
    out.l[j][j] = 1;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational v(a[i][j]);
      for (std::size_t k = 0; k < j; ++k)
        v -= out.l[i][k] * out.l[j][k] * out.d[k];
      out.l[i][j] = v / dj;
    }
  }
  return out;
}

/// @return the largest integer <= g + sqrt(rho); requires rho >= 0.
inline Int floor_plus_sqrt(const Rational& g, const Rational& rho) {
  if (rho < 0) throw std::invalid_argument("floor_plus_sqrt: negative rho");
  const Int num = numerator(rho), den = denominator(rho);
  const Int s = isqrt_floor(num * den);
  Int x = rational_floor(g + Rational(s + 1, den));
  while (true) {
    const Rational diff = Rational(x) - g;
    if (diff <= 0 || diff * diff <= rho) break;
    --x;
  }
  return x;
}

/// @return the smallest integer >= g - sqrt(rho); requires rho >= 0.
inline Int ceil_minus_sqrt(const Rational& g, const Rational& rho) {
  return -floor_plus_sqrt(-g, rho);
}

namespace detail {

struct ShiftedFormSearch {
  const LdlDecomposition& ldl;
  const std::vector<Rational>& c;
  std::size_t n;
  std::uint64_t nodes = 0;
  std::uint64_t node_limit;
  std::vector<Rational> shifted;  // shifted[i] = x_i + c_i for fixed levels
  Rational best;

  // alpha_i = c_i + sum_{j > i} l[j][i] * (x_j + c_j)
  Rational alpha(std::size_t i) const {
    Rational a = c[i];
    for (std::size_t j = i + 1; j < n; ++j)
      a += ldl.l[j][i] * shifted[j];
    return a;
  }

  // Descends picking only the nearest integer per level; seeds the bound.
  void greedy(std::size_t i, const Rational& partial) {
    const std::size_t lv = i - 1;
    const Rational a = alpha(lv);
    const Int x = rational_round(-a);
    const Rational w = Rational(x) + a;
    shifted[lv] = Rational(x) + c[lv];
    const Rational next = partial + ldl.d[lv] * w * w;
    if (lv == 0) {
      best = next;
      return;
    }
    greedy(lv, next);
  }

  void search(std::size_t i, const Rational& partial) {
    if (++nodes > node_limit)
      throw resource_limit_error(
          "minimize_shifted_form: node limit exceeded");
    const std::size_t lv = i - 1;
    const Rational a = alpha(lv);
    const Rational budget = best - partial;
    if (budget < 0) return;
    const Rational rho = budget / ldl.d[lv];
    const Int hi = floor_plus_sqrt(-a, rho);
    const Int lo = ceil_minus_sqrt(-a, rho);
    for (Int x = lo; x <= hi; ++x) {
      const Rational w = Rational(x) + a;
      const Rational term = ldl.d[lv] * w * w;
      const Rational next = partial + term;
      if (next > best) continue;
      if (lv == 0) {
        if (next < best) best = next;
      } else {
        shifted[lv] = Rational(x) + c[lv];
        search(lv, next);
      }
    }
  }
};

}  // namespace detail

/**
 * @brief Exact minimum of (x+c)^T a (x+c) over integer vectors x.
 *
 * @param a positive definite integer matrix
 * @param c rational shift, same dimension as a
 * @param node_limit branch-and-bound node budget
 * @throws std::domain_error when a is not positive definite
 * @throws resource_limit_error when the node budget is exhausted
 */
inline Rational minimize_shifted_form(const IntMatrix& a,
                                      const std::vector<Rational>& c,
                                      std::uint64_t node_limit = 50000000) {
  const std::size_t n = a.size();
  if (c.size() != n)
    throw std::invalid_argument("minimize_shifted_form: size mismatch");
  if (n == 0) return Rational(0);
  const LdlDecomposition ldl = ldl_decompose(a);
  detail::ShiftedFormSearch s{ldl, c, n, 0, node_limit, {}, Rational(0)};
  s.shifted.assign(n, Rational(0));
  s.greedy(n, Rational(0));
  s.search(n, Rational(0));
  return s.best;
}

/// An integer point of a shifted form together with its form value.
struct ShiftedVector {
  std::vector<Int> x;
  Rational value;  // (x+c)^T a (x+c)
};

/**
 * @brief All integer x with (x+c)^T a (x+c) <= bound, with form values.
 *
 * With shell_only set, only the points of form value exactly bound are
 * collected; the innermost level then solves a quadratic equation instead
 * of scanning an interval, so thin shells of large radius stay cheap.
 *
 * The order of the result is the deterministic depth-first order of the
 * branch-and-bound tree (last coordinate outermost, each level ascending).
 *
 * @param a positive definite integer matrix
 * @param c rational shift, same dimension as a
 * @param bound inclusive bound on the form value
 * @param max_count cap on the number of collected points
 * @throws std::domain_error when a is not positive definite
 * @throws resource_limit_error when more than max_count points qualify
 */
inline std::vector<ShiftedVector> enumerate_shifted_vectors(
    const IntMatrix& a, const std::vector<Rational>& c, const Rational& bound,
    std::uint64_t max_count = 1000000, bool shell_only = false) {
  const std::size_t n = a.size();
  if (c.size() != n)
    throw std::invalid_argument("enumerate_shifted_vectors: size mismatch");
  std::vector<ShiftedVector> out;
  if (bound < 0) return out;
  if (n == 0) {
    if (!shell_only || bound == 0) out.push_back({{}, Rational(0)});
    return out;
  }
  const LdlDecomposition ldl = ldl_decompose(a);
  std::vector<Rational> shifted(n, Rational(0));
  std::vector<Int> x(n, 0);
  auto alpha = [&](std::size_t i) {
    Rational s = c[i];
    for (std::size_t j = i + 1; j < n; ++j) s += ldl.l[j][i] * shifted[j];
    return s;
  };
  auto take = [&](const Rational& value) {
    if (out.size() >= max_count)
      throw resource_limit_error("enumerate_shifted_vectors: too many points");
    out.push_back({x, value});
  };
  auto descend = [&](auto&& self, std::size_t i,
                     const Rational& partial) -> void {
    const std::size_t lv = i - 1;
    const Rational g = alpha(lv);
    const Rational rho = (bound - partial) / ldl.d[lv];
    if (shell_only && lv == 0) {
      // Need d_0 (v + g)^2 == bound - partial exactly.
      const Int nr = numerator(rho), dr = denominator(rho);
      const Int prod = nr * dr;
      const Int sq = isqrt_floor(prod);
      if (sq * sq != prod) return;
      const Rational root(sq, dr);
      for (const Rational& cand : {Rational(-g + root), Rational(-g - root)}) {
        if (denominator(cand) != 1) continue;
        x[0] = numerator(cand);
        take(bound);
        if (root == 0) break;  // both roots coincide
      }
      return;
    }
    const Int hi = floor_plus_sqrt(-g, rho);
    const Int lo = ceil_minus_sqrt(-g, rho);
    for (Int v = lo; v <= hi; ++v) {
      const Rational w = Rational(v) + g;
      const Rational next = partial + ldl.d[lv] * w * w;
      if (next > bound) continue;
      x[lv] = v;
      if (lv == 0) {
        take(next);
      } else {
        shifted[lv] = Rational(v) + c[lv];
        self(self, lv, next);
      }
    }
  };
  descend(descend, n, Rational(0));
  return out;
}

/// Solution set of an integer linear system: particular + span(kernel).
struct IntegerAffineSolution {
  std::vector<Int> particular;
  std::vector<std::vector<Int>> kernel;  // basis vectors of the kernel
};

/**
 * @brief Solves a x = b over the integers.
 *
 * Reduces a to column echelon form by unimodular column operations and back
 * substitutes. Returns one integer solution together with a basis of the
 * integer kernel of a, or nullopt when no integer solution exists. The rows
 * of a need not be independent; inconsistent systems return nullopt.
 */
inline std::optional<IntegerAffineSolution> integer_solve(
    const std::vector<std::vector<Int>>& a, const std::vector<Int>& b) {
  const std::size_t rows = a.size();
  if (rows == 0)
    throw std::invalid_argument("integer_solve: empty system");
  if (b.size() != rows)
    throw std::invalid_argument("integer_solve: size mismatch");
  const std::size_t cols = a[0].size();
  for (const auto& row : a)
    if (row.size() != cols)
      throw std::invalid_argument("integer_solve: ragged matrix");
  std::vector<std::vector<Int>> m = a;
  // u starts as the identity and tracks the column operations, so the
  // echelon columns are m_original * u throughout.
  std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;
  auto col_sub = [&](std::size_t dst, std::size_t src, const Int& t) {
    for (std::size_t i = 0; i < rows; ++i) m[i][dst] -= t * m[i][src];
    for (std::size_t i = 0; i < cols; ++i) u[i][dst] -= t * u[i][src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][x], m[i][y]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(u[i][x], u[i][y]);
  };
  std::size_t lead = 0;
  std::vector<Int> w(cols, 0);  // coordinates in the transformed basis
  for (std::size_t r = 0; r < rows; ++r) {
    while (true) {
      std::size_t pivot = cols;
      for (std::size_t j = lead; j < cols; ++j) {
        if (m[r][j] == 0) continue;
        if (pivot == cols ||
            boost::multiprecision::abs(m[r][j]) <
                boost::multiprecision::abs(m[r][pivot]))
          pivot = j;
      }
      if (pivot == cols) break;
      col_swap(lead, pivot);
      bool reduced_all = true;
      for (std::size_t j = lead + 1; j < cols; ++j) {
        if (m[r][j] == 0) continue;
        col_sub(j, lead, floor_div(m[r][j], m[r][lead]));
        if (m[r][j] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    // Row r now has at most one nonzero entry at or past column lead.
    Int residual = b[r];
    for (std::size_t j = 0; j < lead; ++j) residual -= m[r][j] * w[j];
    if (lead < cols && m[r][lead] != 0) {
      if (residual % m[r][lead] != 0) return std::nullopt;
      w[lead] = residual / m[r][lead];
      ++lead;
    } else if (residual != 0) {
      return std::nullopt;
    }
  }
  IntegerAffineSolution out;
  out.particular.assign(cols, 0);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < lead; ++j)
      out.particular[i] += u[i][j] * w[j];
  for (std::size_t j = lead; j < cols; ++j) {
    std::vector<Int> k(cols);
    for (std::size_t i = 0; i < cols; ++i) k[i] = u[i][j];
    out.kernel.push_back(std::move(k));
  }
  return out;
}

/**
 * @brief Lower-triangular column form of a nonsingular integer matrix.
 *
 * Returns h with positive diagonal, zero above the diagonal, and the same
 * column span as m (h = m u for a unimodular u).
 *
 * @throws std::domain_error when m is singular
 */
inline IntMatrix column_lower_triangular(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      throw std::invalid_argument("column_lower_triangular: not square");
  auto col_sub = [&](std::size_t dst, std::size_t src, const Int& t) {
    for (std::size_t i = 0; i < n; ++i) m[i][dst] -= t * m[i][src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < n; ++i) std::swap(m[i][x], m[i][y]);
  };
  for (std::size_t r = 0; r < n; ++r) {
    while (true) {
      std::size_t pivot = n;
      for (std::size_t j = r; j < n; ++j) {
        if (m[r][j] == 0) continue;
        if (pivot == n ||
            boost::multiprecision::abs(m[r][j]) <
                boost::multiprecision::abs(m[r][pivot]))
          pivot = j;
      }
      if (pivot == n)
        throw std::domain_error("column_lower_triangular: singular matrix");
      col_swap(r, pivot);
      bool reduced_all = true;
      for (std::size_t j = r + 1; j < n; ++j) {
        if (m[r][j] == 0) continue;
        const Int t = floor_div(m[r][j], m[r][r]);
        col_sub(j, r, t);
        if (m[r][j] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (m[r][r] < 0)
      for (std::size_t i = 0; i < n; ++i) m[i][r] = -m[i][r];
  }
  return m;
}

/**
 * @brief Representatives of Z^r / m Z^r (cosets of the column span of m).
 *
 * The representatives are the box 0 <= x_i < h_ii over the lower-triangular
 * column form h of m; their count is |det m|.
 *
 * @throws std::domain_error when m is singular
 * @throws resource_limit_error when |det m| exceeds max_count
 */
inline std::vector<std::vector<Int>> coset_representatives(
    const IntMatrix& m, std::uint64_t max_count = 1000000) {
  const IntMatrix h = column_lower_triangular(m);
  const std::size_t n = h.size();
  Int count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= h[i][i];
  if (count > max_count)
    throw resource_limit_error("coset_representatives: index too large");
  std::vector<std::vector<Int>> reps;
  reps.reserve(count.convert_to<std::size_t>());
  std::vector<Int> x(n, 0);
  while (true) {
    reps.push_back(x);
    std::size_t i = 0;
    while (i < n) {
      if (++x[i] < h[i][i]) break;
      x[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return reps;
}

}  // namespace prism
