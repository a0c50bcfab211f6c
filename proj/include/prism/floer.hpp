#pragma once

/**
 * @file floer.hpp
 * @brief Knot surgery invariants: torsion profiles, correction terms of
 *        lens spaces and P(a,1), Alexander coefficients, Casson-Walker.
 *
 * The canonical knot datum here is the torsion profile t_0 >= t_1 >= ... of
 * an L-space knot: the steps eps_i = t_i - t_(i+1) all lie in {0,1}, the
 * profile vanishes exactly from the genus onward, and the Alexander
 * coefficients are second differences of t.  Everything downstream (the
 * surgery correction term formula, Delta(-1), Delta''(1), the Casson-Walker
 * surgery formula) is a closed form over the profile, kept exact in
 * rationals.
 *
 * Key design decisions:
 *  - Profiles are validated at one choke point (make_torsion_profile and
 *    alexander_from_torsion both reject eps outside {0,1}), so Alexander
 *    coefficients are always derived, never accepted as input.
 *  - Delta''(1) is computed from the symmetric Laurent expansion as
 *    2 * sum i^2 alpha_i, the form the Casson-Walker cross-check consumes.
 */

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "prism/dedekind.hpp"
#include "prism/rational.hpp"

namespace prism {

/// Torsion coefficients t_0..t_{2q} of a knot with a 4q surgery, plus the
/// Alexander coefficients and genus they determine.
struct TorsionProfile {
  long long q = 0;
  std::vector<long long> t;      ///< indices 0..2q
  std::vector<long long> alpha;  ///< indices 0..2q, second differences of t
  long long genus = 0;           ///< least i with t_i = 0
};

/**
 * @brief Validates raw torsion coefficients and derives alpha and genus.
 *
 * @throws std::invalid_argument unless t has length 2q+1, is nonnegative,
 *         ends at 0, and steps down by 0 or 1 at every index
 */
inline TorsionProfile make_torsion_profile(long long q,
                                           std::vector<long long> t) {
  if (q < 1) throw std::invalid_argument("torsion profile: q must be >= 1");
  if (static_cast<long long>(t.size()) != 2 * q + 1)
    throw std::invalid_argument("torsion profile: need exactly 2q+1 values");
  if (t.back() != 0)
    throw std::invalid_argument("torsion profile: t_{2q} must vanish");
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const long long step = t[i] - t[i + 1];
    if (t[i] < 0 || step < 0 || step > 1)
      throw std::invalid_argument(
          "torsion profile: steps must be 0 or 1 and values nonnegative");
  }
  TorsionProfile out;
  out.q = q;
  out.t = std::move(t);
  out.genus = 2 * q;
  for (long long i = 0; i <= 2 * q; ++i) {
    if (out.t[i] == 0) {
      out.genus = i;
      break;
    }
  }
  out.alpha.assign(out.t.size(), 0);
  auto eps = [&](long long i) {
    return i + 1 < static_cast<long long>(out.t.size())
               ? out.t[i] - out.t[i + 1]
               : 0;
  };
  out.alpha[0] = 1 - 2 * eps(0);
  for (long long i = 1; i <= 2 * q; ++i) out.alpha[i] = eps(i - 1) - eps(i);
  return out;
}

/// d(L(n,1), i) = -1/4 + (2i-n)^2 / (4n) for 0 <= i < n.
inline Rational lens_d(const Int& n, const Int& i) {
  if (n < 1 || i < 0 || i >= n)
    throw std::invalid_argument("lens_d: need 0 <= i < n");
  const Int s = 2 * i - n;
  return Rational(-1, 4) + Rational(s * s, 4 * n);
}

/// d(S^3_n(K), i) = d(L(n,1), i) - 2 t_{min(i, n-i)}.
/// @throws std::out_of_range when min(i, n-i) exceeds the profile length
inline Rational surgery_d(const Int& n, const Int& i,
                          const TorsionProfile& profile) {
  if (n < 1 || i < 0 || i >= n)
    throw std::invalid_argument("surgery_d: need 0 <= i < n");
  const Int j = i < n - i ? i : n - i;
  if (j >= Int(static_cast<long long>(profile.t.size())))
    throw std::out_of_range("surgery_d: index beyond torsion profile");
  return lens_d(n, i) - 2 * profile.t[j.convert_to<std::size_t>()];
}

/// Correction terms of P(a,1): the multiset {0, 0, -(a+2)/4, -(a-2)/4}.
inline DInvariant prism_a1_d(const Int& a) {
  if (a < 1) throw std::invalid_argument("prism_a1_d: a must be positive");
  return DInvariant{Rational(0), Rational(0), Rational(-(a + 2), 4),
                    Rational(-(a - 2), 4)};
}

/// Alexander data derived from a torsion profile.
struct AlexanderData {
  std::vector<long long> alpha;  ///< symmetric coefficients, indices 0..2q
  Int delta_minus_one;           ///< Delta(-1)
  Int delta_second_at_one;       ///< Delta''(1) = 2 sum i^2 alpha_i
};

/**
 * @brief Second-difference Alexander coefficients plus Delta(-1), Delta''(1).
 *
 * alpha_i = t_{i-1} - 2 t_i + t_{i+1} for i > 0, alpha_0 balancing the total
 * to Delta(1) = 1, and Delta(-1) via the closed form 1 - 4 sum (-1)^i eps_i.
 *
 * @throws std::invalid_argument when some step eps_i is outside {0,1}
 */
inline AlexanderData alexander_from_torsion(const TorsionProfile& profile) {
  const std::vector<long long>& t = profile.t;
  if (t.empty() || t.back() != 0)
    throw std::invalid_argument("alexander_from_torsion: malformed profile");
  auto eps = [&](std::size_t i) {
    return i + 1 < t.size() ? t[i] - t[i + 1] : 0;
  };
  for (std::size_t i = 0; i < t.size(); ++i) {
    const long long e = eps(i);
    if (t[i] < 0 || e < 0 || e > 1)
      throw std::invalid_argument(
          "alexander_from_torsion: steps outside {0,1}");
  }
  AlexanderData out;
  out.alpha.assign(t.size(), 0);
  long long tail = 0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    out.alpha[i] = eps(i - 1) - eps(i);
    tail += out.alpha[i];
  }
  out.alpha[0] = 1 - 2 * tail;
  Int alt = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    alt += (i % 2 == 0 ? 1 : -1) * eps(i);
  out.delta_minus_one = 1 - 4 * alt;
  out.delta_second_at_one = 0;
  for (std::size_t i = 1; i < t.size(); ++i)
    out.delta_second_at_one += Int(2) * Int(i) * Int(i) * out.alpha[i];
  return out;
}

/// Casson-Walker invariant of P(p,q): p/(8q) - s(p,q).
inline Rational casson_walker_prism(const Int& p, const Int& q) {
  if (p < 1 || q < 1 || boost::multiprecision::gcd(p, q) != 1)
    throw std::invalid_argument(
        "casson_walker_prism: need coprime positive p, q");
  return Rational(p, 8 * q) - dedekind_sum(p, q);
}

/// Casson-Walker invariant of the 4q surgery with Delta''(1) = delta2.
/// @throws std::invalid_argument on odd delta2
inline Rational casson_walker_surgery(const Int& q, const Int& delta2) {
  if (q < 1) throw std::invalid_argument("casson_walker_surgery: q >= 1");
  if (delta2 % 2 != 0)
    throw std::invalid_argument(
        "casson_walker_surgery: delta2 must be even");
  return Rational(-(2 * q - 1) * (4 * q - 1), 24 * q) + Rational(delta2, 4 * q);
}

/// True iff p = 3 (mod 4); for odd q a necessary realizability condition.
/// @throws std::invalid_argument when q is even or shares a factor with p
inline bool mod4_obstruction(const Int& p, const Int& q) {
  if (q < 1 || q % 2 == 0)
    throw std::invalid_argument("mod4_obstruction: q must be odd positive");
  if (boost::multiprecision::gcd(p, q) != 1)
    throw std::invalid_argument("mod4_obstruction: p, q must be coprime");
  return ((p % 4) + 4) % 4 == 3;
}

}  // namespace prism
