#pragma once

/**
 * @file lattice.hpp
 * @brief Linear lattices attached to a fraction p/q.
 *
 * For coprime p > q >= 1 expand p/q = [a_{-1}, a_0, ..., a_n]^-.  The linear
 * lattice of the pair is the path lattice on vertices x_0, ..., x_n with
 * |x_i|^2 = a_i and consecutive pairings -1: the head term a_{-1} indexes the
 * fraction, not a vertex.  Its Gram determinant is q (the tail of the
 * expansion is the expansion of q over a_{-1} q - p), so the lattice is
 * trivial exactly when q = 1.
 */

#include <vector>

#include "prism/contfrac.hpp"
#include "prism/gram.hpp"
#include "prism/rational.hpp"

namespace prism {

struct LinearLattice {
  std::vector<Int> cf;       ///< full expansion [a_{-1}, a_0, ..., a_n] of p/q
  std::vector<Int> weights;  ///< vertex weights (a_0, ..., a_n), all >= 2
  IntMatrix gram;            ///< tridiagonal Gram matrix of the vertex path
  Int p;
  Int q;
};

/**
 * @brief Builds the linear lattice of the pair (p, q).
 * @throws std::invalid_argument unless p > q >= 1 and gcd(p,q) = 1
 */
inline LinearLattice linear_lattice(const Int& p, const Int& q) {
  LinearLattice out;
  out.p = p;
  out.q = q;
  out.cf = hj_expand(p, q);
  out.weights.assign(out.cf.begin() + 1, out.cf.end());
  out.gram = tridiagonal_gram(out.weights);
  return out;
}

}  // namespace prism
