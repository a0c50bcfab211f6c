#pragma once

/**
 * @file torsion.hpp
 * @brief Torsion coefficients read off a marked changemaker embedding.
 *
 * Against a marking of sigma the characteristic covectors of the ambient
 * lattice split into an even family (every coordinate odd) and an odd family
 * (marked coordinates even, unmarked odd).  The i-th torsion coefficient is
 *
 *   t_i = min { ceil((|chi|^2 - len) / 8) : <chi, sigma> = 2q - i }
 *
 * over both families, with q = |sigma|^2 and len the coordinate count.  The
 * minimum is found by a coordinate dynamic program over partial pairing
 * values inside a box |chi_j| <= B.  A boxed minimum m is certified exact
 * when m < (B+1)^2: any covector leaving the box pays at least (B+1)^2 in a
 * single coordinate.  The box starts at 2 max(sigma) + 3 and doubles until
 * every class certifies; failure to certify raises instead of truncating.
 */

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "prism/d4.hpp"
#include "prism/floer.hpp"
#include "prism/rational.hpp"

namespace prism {

namespace detail {

/// Minimal covector norms per pairing value in [0, max_pairing], for fixed
/// coordinate parities, inside the box |chi_j| <= bound.  INF marks
/// unreachable pairings.
inline std::vector<long long> boxed_covector_minima(
    const std::vector<long long>& sigma, const std::vector<int>& parity,
    long long bound, long long max_pairing) {
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  long long spread = 0;
  for (const long long s : sigma) spread += s * bound;
  const std::size_t width = static_cast<std::size_t>(2 * spread + 1);
  std::vector<long long> dp(width, kInf), next(width);
  dp[static_cast<std::size_t>(spread)] = 0;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    std::fill(next.begin(), next.end(), kInf);
    long long start = -bound;
    if (((start % 2) + 2) % 2 != parity[j]) ++start;
    for (std::size_t s = 0; s < width; ++s) {
      if (dp[s] == kInf) continue;
      for (long long v = start; v <= bound; v += 2) {
        const long long pos = static_cast<long long>(s) + v * sigma[j];
        if (pos < 0 || pos >= static_cast<long long>(width)) continue;
        const long long cand = dp[s] + v * v;
        if (cand < next[static_cast<std::size_t>(pos)])
          next[static_cast<std::size_t>(pos)] = cand;
      }
    }
    dp.swap(next);
  }
  std::vector<long long> out(static_cast<std::size_t>(max_pairing) + 1, kInf);
  for (long long p = 0; p <= max_pairing && p <= spread; ++p)
    out[static_cast<std::size_t>(p)] = dp[static_cast<std::size_t>(spread + p)];
  return out;
}

}  // namespace detail

/**
 * @brief Torsion coefficients t_0..t_{2q} of the embedding, q = |sigma|^2.
 *
 * @throws std::invalid_argument when the interval condition fails
 * @throws resource_limit_error when the minimization box cannot certify
 */
inline TorsionProfile torsion_from_lattice(const MarkedEmbedding& emb) {
  validate_embedding(emb);
  if (!interval_condition(emb))
    throw std::invalid_argument(
        "torsion_from_lattice: embedding fails the interval condition");
  const std::vector<long long>& sigma = emb.sigma;
  const long long len = static_cast<long long>(sigma.size());
  const long long q = norm2(sigma);
  const long long classes = 2 * q;
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

  std::vector<int> parity_even(sigma.size(), 1);
  std::vector<int> parity_odd(sigma.size(), 1);
  for (const int m : emb.marks) parity_odd[static_cast<std::size_t>(m)] = 0;

  long long bound = 3;
  for (const long long s : sigma) bound = std::max(bound, 2 * s + 3);
  std::vector<long long> t(static_cast<std::size_t>(classes) + 1, 0);
  for (;; bound *= 2) {
    if (bound > 4096)
      throw resource_limit_error(
          "torsion_from_lattice: minimization bound would not stabilize");
    const std::vector<long long> even_min =
        detail::boxed_covector_minima(sigma, parity_even, bound, classes);
    const std::vector<long long> odd_min =
        detail::boxed_covector_minima(sigma, parity_odd, bound, classes);
    const long long certified = (bound + 1) * (bound + 1);
    bool stable = true;
    for (long long i = 0; i <= classes; ++i) {
      const std::size_t p = static_cast<std::size_t>(classes - i);
      const long long m = std::min(even_min[p], odd_min[p]);
      if (m == kInf || m >= certified) {
        stable = false;
        break;
      }
      t[static_cast<std::size_t>(i)] =
          ceil_div(Int(m - len), Int(8)).convert_to<long long>();
    }
    if (stable) break;
  }
  return make_torsion_profile(q, std::move(t));
}

}  // namespace prism
