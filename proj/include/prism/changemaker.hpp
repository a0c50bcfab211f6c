#pragma once

/**
 * @file changemaker.hpp
 * @brief Changemaker vectors, their complement lattices, and the linear
 *        lattice recognizer.
 *
 * A nondecreasing vector of nonnegative integers sigma is a changemaker if
 * every integer between 0 and the total sum is a subset sum.  That holds
 * exactly when sigma_0 <= 1 and each entry is at most one more than the sum
 * of the entries before it.
 *
 * For a changemaker with all entries positive, the orthogonal complement of
 * sigma in Z^len carries a preferred basis v_1, ..., v_{len-1} built greedily:
 * when sigma_j exceeds the sum of the earlier entries the vector is "tight"
 * (it uses e_0 twice), otherwise sigma_j is written as a subset sum over the
 * largest available indices.  The recognizer then decides whether the
 * complement is a linear (path) lattice and, if so, reads off the surgery
 * pair (p, q) with q = |sigma|^2 and q < p < 2q.
 *
 * Key design decisions:
 *  - The fast recognizer path works directly on the standard basis; it only
 *    applies when the basis itself is a path basis up to signs.  The general
 *    search in path_basis.hpp covers the rest.
 *  - A path lattice and its reverse have the same abstract isometry type, so
 *    the bare recognizer canonicalizes to the lexicographically larger of
 *    the two weight readings.  Callers that carry extra structure can orient
 *    the path themselves from the vertex list.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "prism/contfrac.hpp"
#include "prism/gram.hpp"
#include "prism/path_basis.hpp"
#include "prism/rational.hpp"
#include "prism/vec.hpp"

namespace prism {

/// True when every integer in [0, sum(sigma)] is a subset sum of sigma.
/// @throws std::invalid_argument unless sigma is nondecreasing and >= 0.
inline bool is_changemaker(const std::vector<long long>& sigma) {
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] < 0)
      throw std::invalid_argument("is_changemaker: negative entry");
    if (i > 0 && sigma[i] < sigma[i - 1])
      throw std::invalid_argument("is_changemaker: entries must be sorted");
  }
  long long prefix = 0;
  for (const long long s : sigma) {
    if (s > 1 + prefix) return false;
    prefix += s;
  }
  return true;
}

/// How a standard basis vector represents its top entry.
enum class VectorKind { tight, just_right, gappy };

/// One basis vector of the complement lattice, with its combinatorial shape.
struct StandardBasisVector {
  IntVector vector;                        ///< coordinates in Z^len
  std::size_t index = 0;                   ///< the j with top coordinate -e_j
  VectorKind kind = VectorKind::just_right;
  std::vector<std::size_t> gappy_indices;  ///< i in support, i+1 skipped
};

/// The complement lattice of a changemaker: basis plus its Gram matrix.
struct ComplementLattice {
  std::vector<StandardBasisVector> basis;
  IntMatrix gram;
};

/**
 * @brief Builds the standard basis of the orthogonal complement of sigma.
 *
 * @param sigma a changemaker vector with every entry >= 1
 * @throws std::invalid_argument if sigma is not a changemaker, has an entry
 *         below 1, or has fewer than two entries
 */
inline ComplementLattice standard_basis(const std::vector<long long>& sigma) {
  if (!is_changemaker(sigma))
    throw std::invalid_argument("standard_basis: not a changemaker vector");
  if (sigma.size() < 2 || sigma.front() < 1)
    throw std::invalid_argument(
        "standard_basis: need at least two positive entries");
  const std::size_t len = sigma.size();
  ComplementLattice out;
  long long prefix = sigma[0];
  for (std::size_t j = 1; j < len; ++j) {
    StandardBasisVector v;
    v.index = j;
    v.vector.assign(len, 0);
    v.vector[j] = -1;
    if (sigma[j] == 1 + prefix) {
      v.kind = VectorKind::tight;
      v.vector[0] = 2;
      for (std::size_t i = 1; i < j; ++i) v.vector[i] = 1;
    } else {
      // Greedy subset sum over descending indices; exactness is guaranteed
      // by the changemaker condition, and j-1 is always taken first.
      long long rest = sigma[j];
      std::vector<std::size_t> support;
      for (std::size_t k = j; k-- > 0;) {
        if (sigma[k] <= rest) {
          rest -= sigma[k];
          v.vector[k] = 1;
          support.push_back(k);
        }
      }
      if (rest != 0)
        throw std::logic_error("standard_basis: greedy subset sum failed");
      std::sort(support.begin(), support.end());
      bool contiguous = true;
      for (const std::size_t i : support) {
        const bool skipped = v.vector[i + 1] != 1 && i + 1 < j;
        if (skipped) {
          contiguous = false;
          v.gappy_indices.push_back(i);
        }
      }
      v.kind = contiguous ? VectorKind::just_right : VectorKind::gappy;
    }
    out.basis.push_back(std::move(v));
    prefix += sigma[j];
  }
  std::vector<IntVector> raw;
  for (const StandardBasisVector& v : out.basis) raw.push_back(v.vector);
  out.gram = gram_of(raw);
  return out;
}

namespace detail {

/// Orders path vertices from one endpoint and flips signs so that every
/// consecutive pairing is -1.  Expects adjacency to form a Hamiltonian path.
inline std::optional<PathBasis> orient_path(
    const std::vector<IntVector>& vectors) {
  const std::size_t n = vectors.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (norm2(vectors[i]) < 2) return std::nullopt;
    for (std::size_t j = i + 1; j < n; ++j) {
      const long long d = dot(vectors[i], vectors[j]);
      if (d == 0) continue;
      if (d != 1 && d != -1) return std::nullopt;
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  }
  std::size_t start = n;
  std::size_t ends = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 2) return std::nullopt;
    if (adj[i].size() <= 1) {
      ++ends;
      if (start == n || i < start) start = i;
    }
  }
  if (n == 1) {
    PathBasis out;
    out.vertices = {vectors[0]};
    out.weights = {Int(norm2(vectors[0]))};
    return out;
  }
  if (ends != 2) return std::nullopt;
  PathBasis out;
  std::vector<char> seen(n, 0);
  std::size_t cur = start;
  IntVector signed_prev;
  while (true) {
    seen[cur] = 1;
    IntVector v = vectors[cur];
    if (!out.vertices.empty() && dot(v, signed_prev) == 1)
      for (long long& x : v) x = -x;
    signed_prev = v;
    out.weights.push_back(Int(norm2(v)));
    out.vertices.push_back(std::move(v));
    std::size_t next = n;
    for (const std::size_t cand : adj[cur]) {
      if (!seen[cand]) {
        if (next != n) return std::nullopt;
        next = cand;
      }
    }
    if (next == n) break;
    cur = next;
  }
  if (out.vertices.size() != n) return std::nullopt;  // disconnected graph
  return out;
}

}  // namespace detail

/**
 * @brief Finds a path basis of the complement lattice of sigma, if one
 *        exists, in an arbitrary orientation.
 *
 * Tries the standard basis first; when that basis is not itself a path up to
 * signs, falls back to the exhaustive search over short vectors.
 */
inline std::optional<PathBasis> complement_path_basis(
    const std::vector<long long>& sigma) {
  const ComplementLattice lattice = standard_basis(sigma);
  std::vector<IntVector> raw;
  for (const StandardBasisVector& v : lattice.basis) raw.push_back(v.vector);
  const Int q = Int(norm2(sigma));
  if (std::optional<PathBasis> fast = detail::orient_path(raw)) {
    if (tridiagonal_det(fast->weights) == q) return fast;
  }
  return path_basis_search(raw, q);
}

/// A recognized linear complement lattice with its surgery pair.
struct RecognizedLinear {
  Int p;
  Int q;
  std::vector<Int> weights;          ///< vertex norms read from x_0
  std::vector<IntVector> vertices;   ///< oriented path basis of sigma-perp
};

namespace detail {

/// Reads (p, q) off an oriented path basis: q is the lattice determinant and
/// the weight sequence expands q/(2q - p).
inline RecognizedLinear read_surgery_pair(PathBasis path, const Int& q) {
  const auto [num, den] = hj_evaluate(path.weights);
  if (num != q)
    throw std::logic_error("read_surgery_pair: determinant mismatch");
  RecognizedLinear out;
  out.q = q;
  out.p = 2 * q - den;
  out.weights = std::move(path.weights);
  out.vertices = std::move(path.vertices);
  return out;
}

}  // namespace detail

/**
 * @brief Decides whether the complement lattice of sigma is linear.
 *
 * On success returns the surgery pair (p, q) with q = |sigma|^2 and
 * q < p < 2q, together with the oriented path basis that produced it.  A
 * path read from either end is a valid presentation; with no extra structure
 * to break the tie this canonicalizes to the lexicographically larger
 * weight sequence.
 */
inline std::optional<RecognizedLinear> recognize_linear(
    const std::vector<long long>& sigma) {
  std::optional<PathBasis> path = complement_path_basis(sigma);
  if (!path) return std::nullopt;
  std::vector<Int> reversed(path->weights.rbegin(), path->weights.rend());
  if (std::lexicographical_compare(path->weights.begin(), path->weights.end(),
                                   reversed.begin(), reversed.end())) {
    path->weights = std::move(reversed);
    std::reverse(path->vertices.begin(), path->vertices.end());
  }
  return detail::read_surgery_pair(std::move(*path), Int(norm2(sigma)));
}

}  // namespace prism
