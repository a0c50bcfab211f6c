#pragma once

/**
 * @file path_basis.hpp
 * @brief Desk-scale oracle: does a lattice admit a path basis?
 *
 * A path basis is an ordered basis x_0, ..., x_n with |x_i|^2 >= 2,
 * <x_i, x_{i+1}> = -1 and all other pairings zero; its Gram matrix is the
 * tridiagonal matrix of the weight sequence (|x_0|^2, ..., |x_n|^2).
 *
 * Rather than enumerating short vectors blindly, the search works backwards
 * from the determinant: a weight sequence with all terms >= 2 and continuant
 * q is exactly the Hirzebruch-Jung expansion of q/v for some 0 < v < q
 * coprime to q (reversal swaps v with its inverse mod q).  So the candidate
 * weight sequences of the right length are listed first, and each is then
 * realized vertex by vertex.  Placing a vertex against a partial chain is a
 * closed-vector problem: the pairing conditions cut out an affine sublattice
 * and the vertex must hit an exact norm on it, so only a thin shifted-form
 * shell is ever enumerated.  Vertices are placed from whichever end of the
 * sequence carries the smaller weight, which keeps the radius small while
 * the unconstrained dimension is large; an end weight w forces det >= w, so
 * the smaller end never exceeds sqrt(det) + 1.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "prism/contfrac.hpp"
#include "prism/enumerate.hpp"
#include "prism/gram.hpp"
#include "prism/rational.hpp"
#include "prism/vec.hpp"

namespace prism {

/// An ordered path basis: ambient vectors plus their weight sequence.
struct PathBasis {
  std::vector<IntVector> vertices;
  std::vector<Int> weights;
};

namespace detail {

/// Weight sequences of the given length whose tridiagonal determinant is q,
/// one per reversal pair (the lexicographically smaller orientation), sorted.
/// Scans the q/v expansions in machine integers when q permits, since this
/// runs once per recognition over every v coprime to q.
inline std::vector<std::vector<Int>> path_weight_sequences(
    const Int& q, std::size_t length, const Int& max_weight) {
  std::set<std::vector<Int>> seqs;
  auto insert_canonical = [&](std::vector<Int> w) {
    std::vector<Int> rev(w.rbegin(), w.rend());
    seqs.insert(std::min(w, rev));
  };
  if (q <= (std::numeric_limits<long long>::max)() / 4) {
    const long long qq = q.convert_to<long long>();
    const long long cap = max_weight > qq ? qq
                                          : max_weight.convert_to<long long>();
    std::vector<long long> w;
    w.reserve(length + 1);
    for (long long v = 1; v < qq; ++v) {
      if (std::gcd(v, qq) != 1) continue;
      w.clear();
      long long num = qq, den = v;
      bool fits = true;
      while (den > 0) {
        if (w.size() == length) {
          fits = false;
          break;
        }
        const long long a = (num + den - 1) / den;
        if (a > cap) {
          fits = false;
          break;
        }
        w.push_back(a);
        const long long next = a * den - num;
        num = den;
        den = next;
      }
      if (!fits || w.size() != length) continue;
      insert_canonical(std::vector<Int>(w.begin(), w.end()));
    }
  } else {
    for (Int v = 1; v < q; ++v) {
      if (boost::multiprecision::gcd(v, q) != 1) continue;
      std::vector<Int> w = hj_expand(q, v);
      if (w.size() != length) continue;
      if (*std::max_element(w.begin(), w.end()) > max_weight) continue;
      insert_canonical(std::move(w));
    }
  }
  return {seqs.begin(), seqs.end()};
}

/// Order in which to place the vertices of a weight sequence: always the
/// cheaper of the two open ends, so large weights wait until few coordinates
/// remain free.  Depends only on the weights, keeping searches deterministic.
inline std::vector<std::size_t> placement_schedule(const std::vector<Int>& w) {
  std::vector<std::size_t> order;
  std::size_t lo = 0, hi = w.size();
  while (lo < hi) {
    if (w[lo] <= w[hi - 1])
      order.push_back(lo++);
    else
      order.push_back(--hi);
  }
  return order;
}

}  // namespace detail

/**
 * @brief Searches the span of the generators for an acceptable path basis.
 *
 * A lattice can admit several path bases (norm-2 chains contribute extra
 * isometries), and properties read off the vertices may differ between
 * them.  The accept callback sees each realization in a deterministic
 * order; returning false resumes the search, so the call finds the first
 * realization the caller accepts, or reports that none exists.
 *
 * @param generators linearly independent integer vectors, rank <= 10
 * @param q the determinant of their Gram matrix (cross-checked)
 * @param norm_bound cap on vertex weights; defaults to q, which is complete
 *        because no weight of a path lattice exceeds its determinant
 * @param accept realization filter; the first accepted one is returned
 * @return the first accepted path basis, or absence
 * @throws std::invalid_argument on rank > 10 or determinant mismatch
 * @throws resource_limit_error when the search space explodes
 */
inline std::optional<PathBasis> path_basis_search(
    const std::vector<IntVector>& generators, const Int& q,
    std::optional<Int> norm_bound,
    const std::function<bool(const PathBasis&)>& accept) {
  const std::size_t r = generators.size();
  if (r > 10)
    throw std::invalid_argument("path_basis_search: rank above desk scale");
  if (r == 0) return std::nullopt;
  const IntMatrix g = gram_of(generators);
  if (gram_det(g) != q)
    throw std::invalid_argument(
        "path_basis_search: generators do not have determinant q");

  Int bound = norm_bound.value_or(q);
  if (bound > q) bound = q;  // weights of a path lattice never exceed det
  const std::vector<std::vector<Int>> sequences =
      detail::path_weight_sequences(q, r, bound);
  if (sequences.empty()) return std::nullopt;

  // Isometric lattices share every shell size, and the small shells of a
  // path lattice have closed forms: norm-2 vectors are the interval sums
  // inside maximal runs of weight-2 vertices, norm-3 vectors are intervals
  // covering exactly one weight-3 vertex and otherwise weight-2 ones.  (Any
  // other support or a coefficient of size 2 already costs norm 4 or more.)
  // Counting the two shells of the given lattice is cheap and rejects
  // nearly every unrealizable weight sequence before placement work starts.
  const std::vector<Rational> zero_shift(r, Rational(0));
  std::size_t pairs2 = 0, pairs3 = 0;
  for (const Int& u : {Int(2), Int(3)}) {
    const std::size_t n =
        enumerate_shifted_vectors(g, zero_shift, Rational(u), 2000000, true)
            .size() /
        2;
    (u == 2 ? pairs2 : pairs3) = n;
  }
  auto plausible = [&](const std::vector<Int>& w) {
    std::size_t c2 = 0, c3 = 0;
    for (std::size_t i = 0; i < w.size();) {
      if (w[i] != 2) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < w.size() && w[j] == 2) ++j;
      c2 += (j - i) * (j - i + 1) / 2;
      i = j;
    }
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] != 3) continue;
      std::size_t left = 0, right = 0;
      for (std::size_t t = k; t-- > 0 && w[t] == 2;) ++left;
      for (std::size_t t = k + 1; t < w.size() && w[t] == 2; ++t) ++right;
      c3 += (left + 1) * (right + 1);
    }
    return c2 == pairs2 && c3 == pairs3;
  };

  // First-vertex candidates of an exact norm, canonical sign, cached across
  // sequences that open with the same weight.
  std::map<Int, std::vector<std::vector<Int>>> heads;
  auto head_candidates =
      [&](const Int& w) -> const std::vector<std::vector<Int>>& {
    auto it = heads.find(w);
    if (it != heads.end()) return it->second;
    std::vector<std::vector<Int>> out;
    const std::vector<Rational> zero(r, Rational(0));
    for (ShiftedVector& sv :
         enumerate_shifted_vectors(g, zero, Rational(w), 2000000, true)) {
      auto nz = std::find_if(sv.x.begin(), sv.x.end(),
                             [](const Int& t) { return t != 0; });
      if (nz == sv.x.end() || *nz < 0) continue;
      out.push_back(std::move(sv.x));
    }
    std::sort(out.begin(), out.end());
    return heads.emplace(w, std::move(out)).first->second;
  };

  std::uint64_t nodes = 0;
  std::vector<std::vector<Int>> placed(r);  // coefficient vectors by position
  std::vector<char> is_placed(r, 0);

  const std::size_t m = generators[0].size();
  auto to_ambient = [&](const std::vector<Int>& z) {
    IntVector v(m, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < m; ++k)
        v[k] += z[i].convert_to<long long>() * generators[i][k];
    return v;
  };

  PathBasis found;

  // Places the vertex at schedule step k.  The pairing conditions against
  // the vertices placed so far form an integer linear system; its solution
  // torsor is searched for vectors of the exact norm.
  auto place = [&](auto&& self, const std::vector<Int>& w,
                   const std::vector<std::size_t>& order,
                   std::size_t k) -> bool {
    if (k == r) {
      PathBasis candidate;
      candidate.weights = w;
      for (const std::vector<Int>& z : placed)
        candidate.vertices.push_back(to_ambient(z));
      if (!accept(candidate)) return false;
      found = std::move(candidate);
      return true;
    }
    if (++nodes > 2000000)
      throw resource_limit_error("path_basis_search: node limit exceeded");
    const std::size_t pos = order[k];
    std::vector<std::vector<Int>> rows;
    std::vector<Int> rhs;
    for (std::size_t t = 0; t < r; ++t) {
      if (!is_placed[t]) continue;
      rows.push_back(mat_vec(g, placed[t]));
      rhs.push_back(t + 1 == pos || t == pos + 1 ? Int(-1) : Int(0));
    }
    const auto torsor = integer_solve(rows, rhs);
    if (!torsor) return false;
    const std::vector<std::vector<Int>>& ker = torsor->kernel;
    const std::size_t d = ker.size();  // r - k >= 1 while placing

    // Norm along the torsor: f(y) = (p + K y)^T g (p + K y) with p the
    // particular solution; complete the square about its minimum, then
    // collect the shell where f equals the required weight.
    IntMatrix b(d, std::vector<Int>(d, 0));
    const std::vector<Int> gp = mat_vec(g, torsor->particular);
    std::vector<std::vector<Int>> gk(d);
    for (std::size_t i = 0; i < d; ++i) gk[i] = mat_vec(g, ker[i]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t t = 0; t < r; ++t) b[i][j] += ker[i][t] * gk[j][t];
    std::vector<Rational> s(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t t = 0; t < r; ++t) s[i] += Rational(ker[i][t] * gp[t]);
    Rational base(0);
    for (std::size_t t = 0; t < r; ++t)
      base += Rational(torsor->particular[t] * gp[t]);
    const std::vector<Rational> shift = solve_linear(b, s);
    Rational slack = Rational(w[pos]) - base;
    for (std::size_t i = 0; i < d; ++i) slack += shift[i] * s[i];
    if (slack < 0) return false;

    for (const ShiftedVector& sv :
         enumerate_shifted_vectors(b, shift, slack, 200000, true)) {
      std::vector<Int> z = torsor->particular;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t t = 0; t < r; ++t) z[t] += sv.x[i] * ker[i][t];
      placed[pos] = std::move(z);
      is_placed[pos] = 1;
      if (self(self, w, order, k + 1)) return true;
      is_placed[pos] = 0;
    }
    return false;
  };

  for (const std::vector<Int>& w : sequences) {
    if (!plausible(w)) continue;
    const std::vector<std::size_t> order = detail::placement_schedule(w);
    std::fill(is_placed.begin(), is_placed.end(), 0);
    for (const std::vector<Int>& head : head_candidates(w[order[0]])) {
      placed[order[0]] = head;
      is_placed[order[0]] = 1;
      if (place(place, w, order, 1)) return found;
      is_placed[order[0]] = 0;
    }
  }
  return std::nullopt;
}

/// Overload accepting any realization.
inline std::optional<PathBasis> path_basis_search(
    const std::vector<IntVector>& generators, const Int& q,
    std::optional<Int> norm_bound = std::nullopt) {
  return path_basis_search(generators, q, norm_bound,
                           [](const PathBasis&) { return true; });
}

}  // namespace prism
