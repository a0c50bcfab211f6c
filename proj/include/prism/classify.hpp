#pragma once

/**
 * @file classify.hpp
 * @brief Which prism manifolds P(p,q) come from positive integral surgery
 *        on a knot: closed-form family, decision procedure, brute search.
 *
 * The realizable pairs with q < p < 2q form a two-parameter family
 *
 *   p = 11 + 4s + 14t + 16st + 4s^2 t,   q = 7 + 4s + 9t + 12st + 4s^2 t
 *
 * indexed by s, t >= 0, equivalently by the odd root r = -2s-3 <= -3 of
 * r^2 (p - q) + 2 q r + (q - 1) = 0 together with t = (q - 7 - 4s) / r^2
 * (integrality of t is forced by the root; it is asserted, not assumed).
 * decide() resolves a pair by scope checks, parity, the p <= 2q + 1 bound,
 * the torus-knot boundary case p = 2q + 1, and finally the quadratic.
 *
 * enumerate_search() reproduces the classification at desk scale with no
 * knowledge of the family: it enumerates marked changemaker embeddings,
 * keeps those passing the interval condition, a defined genus reading, the
 * oriented linear recognizer, and the parity obstructions, and returns the
 * surviving (embedding, p, q) triples.  That list must coincide with the
 * family; the tests freeze that comparison.
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "prism/changemaker.hpp"
#include "prism/d4.hpp"
#include "prism/dinvariant.hpp"
#include "prism/floer.hpp"
#include "prism/rational.hpp"
#include "prism/torsion.hpp"

namespace prism {

/// One member of the closed-form realizable family.
struct FamilyMember {
  long long s = 0;
  long long t = 0;
  Int r;  ///< the odd root -2s-3
  Int p;
  Int q;
  std::vector<long long> sigma;
};

/**
 * @brief The family member at parameters (s, t), with all identities
 *        asserted: q (r^2 - 2r - 1) = r^2 p - 1, p = -2r + 5 modulo
 *        r^2 - 2r - 1, and |sigma|^2 = q.
 */
inline FamilyMember family_pq(long long s, long long t) {
  if (s < 0 || t < 0)
    throw std::invalid_argument("family_pq: s and t must be nonnegative");
  if (s + t > 100000)
    throw resource_limit_error("family_pq: parameters above desk scale");
  FamilyMember m;
  m.s = s;
  m.t = t;
  m.r = -2 * Int(s) - 3;
  const Int ss(s), tt(t);
  m.p = 11 + 4 * ss + 14 * tt + 16 * ss * tt + 4 * ss * ss * tt;
  m.q = 7 + 4 * ss + 9 * tt + 12 * ss * tt + 4 * ss * ss * tt;
  m.sigma = {1, 1, 1};
  for (long long i = 0; i < s; ++i) m.sigma.push_back(2);
  m.sigma.push_back(2);
  for (long long i = 0; i < t; ++i) m.sigma.push_back(2 * s + 3);
  const Int disc = m.r * m.r - 2 * m.r - 1;
  if (m.q * disc != m.r * m.r * m.p - 1)
    throw std::logic_error("family_pq: root identity failed");
  if (((m.p - (-2 * m.r + 5)) % disc) != 0)
    throw std::logic_error("family_pq: congruence identity failed");
  if (Int(norm2(m.sigma)) != m.q)
    throw std::logic_error("family_pq: changemaker norm mismatch");
  return m;
}

/// The marked embedding carried by a family member: marks (s+3, 2, 1, 0).
inline MarkedEmbedding family_embedding(const FamilyMember& m) {
  return MarkedEmbedding{m.sigma,
                         {static_cast<int>(m.s) + 3, 2, 1, 0}};
}

/// Outcome of the realizability decision.
enum class VerdictStatus { realizable, not_realizable, out_of_scope };

/// Witness parameters for a realizable pair inside the q < p < 2q window.
struct Witness {
  Int r;
  long long s = 0;
  long long t = 0;
};

/// Decision result: status, optional witness, and a short reason code.
struct PrismVerdict {
  VerdictStatus status = VerdictStatus::out_of_scope;
  std::optional<Witness> witness;
  std::string reason;  ///< parity | p-too-large | no-odd-root | torus-knot |
                       ///< family | out-of-scope
};

/**
 * @brief Decides whether P(p,q) arises from positive integral surgery on a
 *        knot in the three-sphere.
 *
 * @throws std::invalid_argument unless p > 1, q > 0, gcd(p,q) = 1
 */
inline PrismVerdict decide(const Int& p, const Int& q) {
  if (q < 1 || p <= 1)
    throw std::invalid_argument("decide: need p > 1 and q > 0");
  if (boost::multiprecision::gcd(p, q) != 1)
    throw std::invalid_argument("decide: p and q must be coprime");
  PrismVerdict v;
  if (q >= p) {
    v.status = VerdictStatus::out_of_scope;
    v.reason = "out-of-scope";
    return v;
  }
  if (p % 2 == 0) {
    v.status = VerdictStatus::not_realizable;
    v.reason = "parity";
    return v;
  }
  if (p > 2 * q + 1) {
    v.status = VerdictStatus::not_realizable;
    v.reason = "p-too-large";
    return v;
  }
  if (p == 2 * q + 1) {
    v.status = VerdictStatus::realizable;
    v.reason = "torus-knot";
    return v;
  }
  // q < p < 2q: look for an odd integer root r <= -3 of
  // (p - q) r^2 + 2 q r + (q - 1) = 0, larger root first.
  const Int a = p - q;
  const Int disc = q * q - a * (q - 1);
  if (disc >= 0) {
    const Int root = isqrt_floor(disc);
    if (root * root == disc) {
      for (const Int& num : {Int(-q + root), Int(-q - root)}) {
        if (num % a != 0) continue;
        const Int r = num / a;
        if (r > -3 || r % 2 == 0) continue;
        const Int s_big = (-r - 3) / 2;
        const Int t_num = q - 7 - 4 * s_big;
        if (t_num % (r * r) != 0)
          throw std::logic_error("decide: root without integral t");
        const Int t_big = t_num / (r * r);
        if (t_big < 0) continue;
        const Int ident = r * r - 2 * r - 1;
        if (q * ident != r * r * p - 1 ||
            ((p - (-2 * r + 5)) % ident) != 0)
          throw std::logic_error("decide: witness identity failed");
        v.status = VerdictStatus::realizable;
        v.reason = "family";
        v.witness = Witness{r, s_big.convert_to<long long>(),
                            t_big.convert_to<long long>()};
        return v;
      }
    }
  }
  v.status = VerdictStatus::not_realizable;
  v.reason = "no-odd-root";
  return v;
}

/// One survivor of the brute-force search.
struct SearchHit {
  MarkedEmbedding emb;
  Int p;
  Int q;
};

namespace detail {

/// Runs the full filter chain on one embedding; null unless it survives.
inline std::optional<SearchHit> search_filter(const MarkedEmbedding& emb) {
  const auto [a, b, c, d] = emb.marks;
  const long long theta = emb.sigma[a] - emb.sigma[b] - emb.sigma[c] -
                          emb.sigma[d];
  if (theta != 1 && theta != -1) return std::nullopt;
  if (!interval_condition(emb)) return std::nullopt;
  if (!genus_from_shorts(emb)) return std::nullopt;
  const std::optional<RecognizedLinear> rec = recognize_linear_marked(emb);
  if (!rec) return std::nullopt;
  if (!(rec->q < rec->p && rec->p < 2 * rec->q)) return std::nullopt;
  if (rec->q != norm2(emb.sigma)) return std::nullopt;
  if (rec->p % 2 == 0) return std::nullopt;
  if (rec->q % 2 != 0 && !mod4_obstruction(rec->p, rec->q))
    return std::nullopt;
  return SearchHit{emb, rec->p, rec->q};
}

/// Extends a changemaker prefix to every sorted changemaker within bounds,
/// invoking fn on each completion of length >= 4.
template <typename Fn>
void extend_changemakers(std::vector<long long>& sigma, long long sum,
                         int max_len, long long max_entry, Fn&& fn) {
  if (sigma.size() >= 4) fn(sigma);
  if (static_cast<int>(sigma.size()) >= max_len) return;
  const long long lo = sigma.back();
  const long long hi = std::min(max_entry, 1 + sum);
  for (long long v = lo; v <= hi; ++v) {
    sigma.push_back(v);
    extend_changemakers(sigma, sum + v, max_len, max_entry,
                        std::forward<Fn>(fn));
    sigma.pop_back();
  }
}

}  // namespace detail

/**
 * @brief Brute-force search over marked changemaker embeddings.
 *
 * Enumerates every sorted changemaker starting at 1 with length in [4,
 * max_len] and entries at most max_entry, tries every admissible marking,
 * and keeps the embeddings that survive the interval condition, genus
 * reading, oriented recognizer, and parity obstructions.  Work is sharded
 * across jobs threads by changemaker prefix; the result is sorted by
 * (sigma, marks) and does not depend on jobs.
 *
 * @throws std::invalid_argument outside 4 <= max_len <= 8, 1 <= max_entry
 *         <= 15, jobs >= 1
 * @throws resource_limit_error when the candidate count explodes
 */
inline std::vector<SearchHit> enumerate_search(int max_len,
                                               long long max_entry,
                                               int jobs = 1) {
  if (max_len < 4 || max_len > 8)
    throw std::invalid_argument("enumerate_search: max_len must be in [4,8]");
  if (max_entry < 1 || max_entry > 15)
    throw std::invalid_argument(
        "enumerate_search: max_entry must be in [1,15]");
  if (jobs < 1 || jobs > 64)
    throw std::invalid_argument("enumerate_search: jobs must be in [1,64]");

  std::atomic<std::uint64_t> embeddings_seen{0};
  std::vector<std::vector<SearchHit>> results(
      static_cast<std::size_t>(jobs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));

  // Every worker walks the same cheap changemaker enumeration and keeps the
  // candidates whose running index lands in its residue class.  Per-vector
  // work varies wildly, so round-robin at this granularity balances far
  // better than splitting the tree, and the output stays independent of
  // jobs because the enumeration order is shared.
  auto worker = [&](int id) {
    try {
      std::uint64_t index = 0;
      for (long long b = 1; b <= std::min(max_entry, 2LL); ++b) {
        for (long long c = b; c <= std::min(max_entry, 2 + b); ++c) {
          std::vector<long long> sigma{1, b, c};
          detail::extend_changemakers(
              sigma, 1 + b + c, max_len, max_entry,
              [&](const std::vector<long long>& cm) {
                if (index++ % static_cast<std::uint64_t>(jobs) !=
                    static_cast<std::uint64_t>(id))
                  return;
                for (const std::array<int, 4>& marks : all_markings(cm)) {
                  if (embeddings_seen.fetch_add(1) > 400000000)
                    throw resource_limit_error(
                        "enumerate_search: embedding count exploded");
                  const MarkedEmbedding emb{cm, marks};
                  if (std::optional<SearchHit> hit =
                          detail::search_filter(emb))
                    results[static_cast<std::size_t>(id)].push_back(
                        std::move(*hit));
                }
              });
        }
      }
    } catch (...) {
      errors[static_cast<std::size_t>(id)] = std::current_exception();
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (std::thread& th : threads) th.join();
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<SearchHit> out;
  for (std::vector<SearchHit>& part : results)
    for (SearchHit& hit : part) out.push_back(std::move(hit));
  std::sort(out.begin(), out.end(), [](const SearchHit& x, const SearchHit& y) {
    if (x.emb.sigma != y.emb.sigma) return x.emb.sigma < y.emb.sigma;
    return x.emb.marks < y.emb.marks;
  });
  return out;
}

/// Exact values and pass flags from the consistency loops on one member.
struct CrossCheckReport {
  bool d_invariants_match = false;   ///< surgery formula vs lattice assembly
  bool casson_walker_match = false;  ///< prism formula vs surgery formula
  bool alexander_det_match = false;  ///< |Delta(-1)| = p
  bool torsion_symmetry_match = false;  ///< t_{q-i} - t_{q+i} relations
  bool genus_match = false;          ///< short covectors vs torsion profile
  Rational casson_walker_prism_value;
  Rational casson_walker_surgery_value;
  Int delta_minus_one;
  long long genus_shorts = -1;
  long long genus_profile = -1;

  bool all_pass() const {
    return d_invariants_match && casson_walker_match && alexander_det_match &&
           torsion_symmetry_match && genus_match;
  }
};

/// The consistency loops evaluated against a caller-supplied profile;
/// lets tests verify that a corrupted profile is detected.
inline CrossCheckReport cross_check_with_profile(const FamilyMember& m,
                                                 const TorsionProfile& profile) {
  CrossCheckReport rep;
  const MarkedEmbedding emb = family_embedding(m);

  const DInvariant lattice_side = prism_d_invariants(m.p, m.q);
  DInvariant surgery_side;
  const Int n = 4 * m.q;
  for (Int i = 0; i < n; ++i) surgery_side.insert(surgery_d(n, i, profile));
  rep.d_invariants_match = lattice_side == surgery_side;

  const AlexanderData alex = alexander_from_torsion(profile);
  rep.casson_walker_prism_value = casson_walker_prism(m.p, m.q);
  rep.casson_walker_surgery_value =
      casson_walker_surgery(m.q, alex.delta_second_at_one);
  rep.casson_walker_match =
      rep.casson_walker_prism_value == rep.casson_walker_surgery_value;

  rep.delta_minus_one = alex.delta_minus_one;
  rep.alexander_det_match = abs(alex.delta_minus_one) == m.p;

  const long long q = profile.q;
  bool symmetry = true;
  for (long long i = 0; i <= q; ++i) {
    const long long lhs = profile.t[static_cast<std::size_t>(q - i)] -
                          profile.t[static_cast<std::size_t>(q + i)];
    if (i % 2 == 0) {
      if (lhs != i / 2) symmetry = false;
    } else {
      if (lhs != (i - 1) / 2 && lhs != (i + 1) / 2) symmetry = false;
    }
  }
  rep.torsion_symmetry_match = symmetry;

  const std::optional<long long> g = genus_from_shorts(emb);
  rep.genus_shorts = g.value_or(-1);
  rep.genus_profile = profile.genus;
  rep.genus_match = g.has_value() && *g == profile.genus;
  return rep;
}

/// Runs all five consistency loops on a family member.
inline CrossCheckReport cross_check(const FamilyMember& m) {
  return cross_check_with_profile(m, torsion_from_lattice(family_embedding(m)));
}

}  // namespace prism
