#pragma once

/**
 * @file dinvariant.hpp
 * @brief Lattice d-invariants and the assembled correction terms of P(p,q).
 *
 * For a positive definite lattice L with Gram matrix G, characteristic
 * covectors are represented by their pairing vectors u = diag(G) + 2k; the
 * classes mod 2L correspond to k in Z^r / G Z^r and the minimal norm in a
 * class is a shifted-form minimum, so each class yields the exact value
 * (min |chi|^2 - r) / 4.
 *
 * The correction terms of P(p,q) in the window q < p < 2q are assembled
 * from the path lattice of weights expanding q / (2q - p).  Covector classes
 * are indexed through the sublattice generated by the doubled first vertex:
 * classes that stay characteristic for the full lattice contribute one
 * minimum twice against base value 0, classes that do not split into two
 * torsors whose maxima combine against the two spin base values -1 and 0 of
 * P(2,1).  The combination emits the multiset {max(M0-1, M1), max(M1-1, M0)},
 * which does not depend on how the two torsors are labeled.
 */

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "prism/enumerate.hpp"
#include "prism/gram.hpp"
#include "prism/lattice.hpp"
#include "prism/rational.hpp"

namespace prism {

/// Minimal norm |chi|^2 over the characteristic covector class with pairing
/// vector u against the basis with Gram matrix gram.
inline Rational min_characteristic_norm(const IntMatrix& gram,
                                        const std::vector<Rational>& u) {
  std::vector<Rational> c = solve_linear(gram, u);
  for (Rational& x : c) x /= 2;
  IntMatrix four = gram;
  for (auto& row : four)
    for (Int& v : row) v *= 4;
  return minimize_shifted_form(four, c);
}

/**
 * @brief The d-invariant multiset {(min |chi|^2 - r) / 4} over all
 *        characteristic covector classes of a positive definite lattice.
 *
 * @throws resource_limit_error above rank 10 or discriminant 10^4
 * @throws std::domain_error when gram is not positive definite
 */
inline DInvariant lattice_d_invariant(const IntMatrix& gram) {
  const std::size_t r = gram.size();
  if (r > 10)
    throw resource_limit_error("lattice_d_invariant: rank above desk scale");
  const Int disc = gram_det(gram);
  if (disc <= 0)
    throw std::domain_error("lattice_d_invariant: not positive definite");
  if (disc > 10000)
    throw resource_limit_error(
        "lattice_d_invariant: discriminant above desk scale");
  DInvariant out;
  if (r == 0) {
    out.insert(Rational(0));
    return out;
  }
  for (const std::vector<Int>& k : coset_representatives(gram)) {
    std::vector<Rational> u(r);
    for (std::size_t i = 0; i < r; ++i) u[i] = Rational(gram[i][i] + 2 * k[i]);
    const Rational mn = min_characteristic_norm(gram, u);
    out.insert((mn - Rational(static_cast<long long>(r))) / 4);
  }
  return out;
}

/**
 * @brief Correction terms of the prism manifold P(p,q), q < p < 2q.
 *
 * Returns the multiset of 4q exact values described in the file comment.
 *
 * @throws std::invalid_argument outside the coprime window q < p < 2q
 * @throws resource_limit_error for q above desk scale
 */
inline DInvariant prism_d_invariants(const Int& p, const Int& q) {
  if (q < 1 || boost::multiprecision::gcd(p, q) != 1 || p <= q || p >= 2 * q)
    throw std::invalid_argument(
        "prism_d_invariants: need coprime p, q with q < p < 2q");
  if (q > 256)
    throw resource_limit_error("prism_d_invariants: q above desk scale");
  const LinearLattice lat = linear_lattice(p, q);
  const std::vector<Int>& w = lat.weights;
  const std::size_t r = w.size();
  const IntMatrix& g = lat.gram;

  // Index matrix of the sublattice basis (2 x_0, x_1, ..., x_n) and the
  // Gram matrix of that basis.
  IntMatrix m = g;
  for (Int& v : m[0]) v *= 2;
  IntMatrix g0 = m;
  for (auto& row : g0) row[0] *= 2;

  IntMatrix g4 = g;
  for (auto& row : g4)
    for (Int& v : row) v *= 4;
  IntMatrix g04 = g0;
  for (auto& row : g04)
    for (Int& v : row) v *= 4;

  // Minimal |chi|^2 over the class with pairing vector u against the basis
  // with Gram matrix gram; form is 4 * gram.
  auto shifted_min = [](const IntMatrix& form, const IntMatrix& gram,
                        const std::vector<Rational>& u) {
    std::vector<Rational> c = solve_linear(gram, u);
    for (Rational& x : c) x /= 2;
    return minimize_shifted_form(form, c);
  };

  const Rational rank_r(static_cast<long long>(r));
  DInvariant out;
  for (const std::vector<Int>& k : coset_representatives(m)) {
    std::vector<Rational> u(r);
    for (std::size_t i = 0; i < r; ++i) u[i] = Rational(g0[i][i] + 2 * k[i]);
    const bool stays_characteristic = (k[0] - w[0]) % 2 == 0;
    if (stays_characteristic) {
      std::vector<Rational> su = u;
      su[0] /= 2;
      const Rational d = (rank_r - shifted_min(g4, g, su)) / 4;
      out.insert(d);
      out.insert(d);
    } else {
      std::vector<Rational> u2 = u;
      u2[0] += 4 * w[0];
      if (r > 1) u2[1] -= 2;
      const Rational m0 = (rank_r - shifted_min(g04, g0, u)) / 4;
      const Rational m1 = (rank_r - shifted_min(g04, g0, u2)) / 4;
      out.insert(std::max(Rational(m0 - 1), m1));
      out.insert(std::max(Rational(m1 - 1), m0));
    }
  }
  if (Int(static_cast<long long>(out.size())) != 4 * q)
    throw std::logic_error("prism_d_invariants: class count mismatch");
  return out;
}

}  // namespace prism
