#pragma once

/**
 * @file d4.hpp
 * @brief Marked changemaker embeddings and the short covector tests.
 *
 * A marking singles out four indices a > b > c > d of a changemaker vector
 * sigma; it is admissible when, within every run of equal sigma values, the
 * marked indices sit topmost.  Against a marking there are two families of
 * short covectors on Z^len:
 *
 *  - even type: every coordinate is +-1, giving 2^len covectors;
 *  - odd type: the four marked coordinates are either all zero or a single
 *    +-2 with the rest zero, the unmarked coordinates are +-1, giving
 *    9 * 2^(len-4) covectors.
 *
 * Shifting a short covector of type k by the base covector chi^k and halving
 * pairs it integrally against sigma; the two resulting value sets must each
 * fill an interval starting at 0, and the interval lengths must differ by
 * exactly one, for sigma-perp to embed the way the classification needs.
 * The genus bound read off the full pairing range and the parity of a vector
 * against the marked block are the two downstream consumers.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "prism/changemaker.hpp"
#include "prism/vec.hpp"

namespace prism {

/// A changemaker vector with four marked indices a > b > c > d.
struct MarkedEmbedding {
  std::vector<long long> sigma;
  std::array<int, 4> marks;  ///< stored as (a, b, c, d), descending
};

/// @throws std::invalid_argument unless sigma is a changemaker with positive
/// entries, the marks are descending, in range, and topmost within ties.
inline void validate_embedding(const MarkedEmbedding& emb) {
  if (!is_changemaker(emb.sigma))
    throw std::invalid_argument("marked embedding: not a changemaker vector");
  if (emb.sigma.size() < 4 || emb.sigma.front() < 1)
    throw std::invalid_argument(
        "marked embedding: need at least four positive entries");
  const long long len = static_cast<long long>(emb.sigma.size());
  for (int i = 0; i < 4; ++i) {
    if (emb.marks[i] < 0 || emb.marks[i] >= len)
      throw std::invalid_argument("marked embedding: mark out of range");
    if (i > 0 && emb.marks[i] >= emb.marks[i - 1])
      throw std::invalid_argument("marked embedding: marks must descend");
  }
  for (const int m : emb.marks) {
    for (long long i = m + 1; i < len; ++i) {
      if (emb.sigma[i] != emb.sigma[m]) break;
      if (std::find(emb.marks.begin(), emb.marks.end(), static_cast<int>(i)) ==
          emb.marks.end())
        throw std::invalid_argument(
            "marked embedding: marks must sit topmost within equal entries");
    }
  }
}

/// All admissible markings of sigma, each descending, in lexicographic order
/// of the (a, b, c, d) tuples.  Returns nothing when sigma itself does not
/// qualify.  Avoids validate_embedding so brute-force sweeps stay cheap.
inline std::vector<std::array<int, 4>> all_markings(
    const std::vector<long long>& sigma) {
  const int len = static_cast<int>(sigma.size());
  std::vector<std::array<int, 4>> out;
  if (len < 4 || sigma.front() < 1 || !is_changemaker(sigma)) return out;
  // Equal entries are contiguous, so marking the topmost copies of each
  // value is equivalent to: whenever index i is marked and sigma[i + 1]
  // has the same value, index i + 1 is marked as well.
  auto topmost = [&](const std::array<int, 4>& m) {
    for (const int i : m) {
      if (i + 1 < len && sigma[i + 1] == sigma[i] && i + 1 != m[0] &&
          i + 1 != m[1] && i + 1 != m[2] && i + 1 != m[3])
        return false;
    }
    return true;
  };
  for (int a = 3; a < len; ++a)
    for (int b = 2; b < a; ++b)
      for (int c = 1; c < b; ++c)
        for (int d = 0; d < c; ++d) {
          const std::array<int, 4> marks{a, b, c, d};
          if (topmost(marks)) out.push_back(marks);
        }
  std::sort(out.begin(), out.end());
  return out;
}

/// Parity of a characteristic covector against the marked block.
enum class CovectorParity { even, odd };

/// A characteristic covector: even means every coordinate is odd, odd means
/// the four marked coordinates are even and the rest odd.
struct CharCovector {
  IntVector coords;
  CovectorParity parity = CovectorParity::even;
};

/**
 * @brief All short characteristic covectors against the marking.
 *
 * Even type: every coordinate +-1 (2^len covectors).  Odd type: the marked
 * block is either all zero or a single +-2 among zeros, the unmarked
 * coordinates are +-1 (9 * 2^(len-4) covectors).  The all-zero marked block
 * is what makes the odd pairing set reach 0; dropping it leaves a gap.
 */
inline std::vector<CharCovector> short_covectors(const MarkedEmbedding& emb) {
  validate_embedding(emb);
  const std::size_t len = emb.sigma.size();
  std::vector<std::size_t> unmarked;
  for (std::size_t i = 0; i < len; ++i) {
    if (std::find(emb.marks.begin(), emb.marks.end(), static_cast<int>(i)) ==
        emb.marks.end())
      unmarked.push_back(i);
  }
  std::vector<CharCovector> out;
  const std::size_t even_total = std::size_t{1} << len;
  out.reserve(even_total + 9 * (std::size_t{1} << unmarked.size()));
  for (std::size_t mask = 0; mask < even_total; ++mask) {
    CharCovector chi;
    chi.parity = CovectorParity::even;
    chi.coords.assign(len, -1);
    for (std::size_t i = 0; i < len; ++i)
      if (mask & (std::size_t{1} << i)) chi.coords[i] = 1;
    out.push_back(std::move(chi));
  }
  std::vector<IntVector> marked_patterns;
  marked_patterns.push_back(IntVector(len, 0));
  for (const int m : emb.marks)
    for (const long long s : {2LL, -2LL}) {
      IntVector base(len, 0);
      base[m] = s;
      marked_patterns.push_back(std::move(base));
    }
  const std::size_t odd_total = std::size_t{1} << unmarked.size();
  for (const IntVector& base : marked_patterns) {
    for (std::size_t mask = 0; mask < odd_total; ++mask) {
      CharCovector chi;
      chi.parity = CovectorParity::odd;
      chi.coords = base;
      for (std::size_t i = 0; i < unmarked.size(); ++i)
        chi.coords[unmarked[i]] = (mask & (std::size_t{1} << i)) ? 1 : -1;
      out.push_back(std::move(chi));
    }
  }
  return out;
}

/// The pairing value sets of the two short covector families, shifted to
/// start at zero, plus their upper endpoints.
struct TestVectorIntervals {
  std::vector<long long> set0;  ///< sorted distinct values of type 0
  std::vector<long long> set1;  ///< sorted distinct values of type 1
  long long m0 = 0;             ///< sum of sigma, the type 0 maximum
  long long m1 = 0;             ///< 2 sigma_a + unmarked sum, type 1 maximum
};

namespace detail {

/// Sorted distinct sums {base + subset sum of values} for each base.
inline std::vector<long long> shifted_subset_sums(
    const std::vector<long long>& bases, const std::vector<long long>& values,
    long long cap) {
  std::vector<char> hit(static_cast<std::size_t>(cap) + 1, 0);
  std::vector<char> reach(static_cast<std::size_t>(cap) + 1, 0);
  reach[0] = 1;
  long long total = 0;
  for (const long long v : values) {
    for (long long s = std::min(total, cap - v); s >= 0; --s)
      if (reach[s]) reach[s + v] = 1;
    total += v;
  }
  for (const long long b : bases)
    for (long long s = 0; s + b <= cap; ++s)
      if (reach[s]) hit[s + b] = 1;
  std::vector<long long> out;
  for (long long s = 0; s <= cap; ++s)
    if (hit[s]) out.push_back(s);
  return out;
}

}  // namespace detail

/// Computes both pairing value sets; see the file comment for the shapes.
inline TestVectorIntervals test_vector_intervals(const MarkedEmbedding& emb) {
  validate_embedding(emb);
  const auto [a, b, c, d] = emb.marks;
  const long long sa = emb.sigma[a], sb = emb.sigma[b], sc = emb.sigma[c],
                  sd = emb.sigma[d];
  std::vector<long long> unmarked_values;
  long long unmarked_sum = 0;
  for (std::size_t i = 0; i < emb.sigma.size(); ++i) {
    if (std::find(emb.marks.begin(), emb.marks.end(), static_cast<int>(i)) ==
        emb.marks.end()) {
      unmarked_values.push_back(emb.sigma[i]);
      unmarked_sum += emb.sigma[i];
    }
  }
  TestVectorIntervals out;
  out.m0 = std::accumulate(emb.sigma.begin(), emb.sigma.end(), 0LL);
  out.m1 = 2 * sa + unmarked_sum;
  out.set0 = detail::shifted_subset_sums(
      {0}, std::vector<long long>(emb.sigma.begin(), emb.sigma.end()), out.m0);
  const std::vector<long long> marked_bases = {
      0,       2 * sa,  sa,      sa + sb, sa - sb,
      sa + sc, sa - sc, sa + sd, sa - sd};
  out.set1 = detail::shifted_subset_sums(marked_bases, unmarked_values, out.m1);
  return out;
}

/// True when both pairing sets are gap-free intervals from 0 and their
/// endpoints differ by exactly one.
inline bool interval_condition(const MarkedEmbedding& emb) {
  const TestVectorIntervals iv = test_vector_intervals(emb);
  const bool full0 =
      static_cast<long long>(iv.set0.size()) == iv.m0 + 1;
  const bool full1 =
      static_cast<long long>(iv.set1.size()) == iv.m1 + 1;
  const long long diff = iv.m0 > iv.m1 ? iv.m0 - iv.m1 : iv.m1 - iv.m0;
  return full0 && full1 && diff == 1;
}

/**
 * @brief Genus bound from the short covector pairings.
 *
 * Collects the raw pairings of every short covector of both types against
 * sigma; when they form the full interval [-m, m] the genus reading is
 * 2 |sigma|^2 - m, otherwise absent.
 */
inline std::optional<long long> genus_from_shorts(const MarkedEmbedding& emb) {
  validate_embedding(emb);
  std::vector<long long> pairings;
  for (const CharCovector& chi : short_covectors(emb)) {
    long long s = 0;
    for (std::size_t i = 0; i < chi.coords.size(); ++i)
      s += chi.coords[i] * emb.sigma[i];
    pairings.push_back(s);
  }
  std::sort(pairings.begin(), pairings.end());
  pairings.erase(std::unique(pairings.begin(), pairings.end()),
                 pairings.end());
  const long long m = std::max(-pairings.front(), pairings.back());
  if (static_cast<long long>(pairings.size()) != 2 * m + 1 ||
      pairings.front() != -m || pairings.back() != m)
    return std::nullopt;
  return 2 * norm2(emb.sigma) - m;
}

/// True when v pairs oddly with e_a + e_b + e_c + e_d.
inline bool contains_x0(const IntVector& v, const MarkedEmbedding& emb) {
  validate_embedding(emb);
  long long s = 0;
  for (const int m : emb.marks)
    if (static_cast<std::size_t>(m) < v.size()) s += v[m];
  return (s % 2 + 2) % 2 == 1;
}

/**
 * @brief Marking-aware linear recognizer.
 *
 * Requires the complement of sigma to admit a path basis whose interior
 * vertices all pair evenly with the marked block while exactly one endpoint
 * pairs oddly; that endpoint is the distinguished first vertex, which fixes
 * the orientation and hence the surgery pair without a tie-break.
 *
 * A lattice can carry several path bases with differing parity patterns
 * (norm-2 chains contribute extra isometries), so the pattern is an
 * existence condition over realizations: the search resumes until some
 * realization matches, and only then is the pair read off.
 */
inline std::optional<RecognizedLinear> recognize_linear_marked(
    const MarkedEmbedding& emb) {
  validate_embedding(emb);
  const Int q(norm2(emb.sigma));

  auto odd_parity = [&emb](const IntVector& v) {
    long long s = 0;
    for (const int m : emb.marks) s += v[m];
    return (s % 2 + 2) % 2 == 1;
  };
  auto pattern_ok = [&](const PathBasis& path) {
    const std::size_t n = path.vertices.size();
    for (std::size_t i = 1; i + 1 < n; ++i)
      if (odd_parity(path.vertices[i])) return false;
    if (n == 1) return odd_parity(path.vertices[0]);
    return odd_parity(path.vertices.front()) !=
           odd_parity(path.vertices.back());
  };
  auto read = [&](PathBasis path) {
    if (path.vertices.size() > 1 && !odd_parity(path.vertices.front())) {
      std::reverse(path.vertices.begin(), path.vertices.end());
      std::reverse(path.weights.begin(), path.weights.end());
    }
    return detail::read_surgery_pair(std::move(path), q);
  };

  const ComplementLattice lattice = standard_basis(emb.sigma);
  std::vector<IntVector> raw;
  for (const StandardBasisVector& v : lattice.basis) raw.push_back(v.vector);
  if (std::optional<PathBasis> fast = detail::orient_path(raw)) {
    if (tridiagonal_det(fast->weights) == q && pattern_ok(*fast))
      return read(std::move(*fast));
  }
  std::optional<PathBasis> path =
      path_basis_search(raw, q, std::nullopt, pattern_ok);
  if (!path) return std::nullopt;
  return read(std::move(*path));
}

}  // namespace prism
