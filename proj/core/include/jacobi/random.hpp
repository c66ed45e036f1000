#pragma once

// Seeded random test data: indices, Fourier polynomials and nearly
// holomorphic functions of bounded depth.

#include "jacobi/nearly_holomorphic.hpp"

#include <cstdint>
#include <random>

namespace jacobi {

using Rng = std::mt19937_64;

struct RandomShape {
  int terms = 3;       ///< Fourier modes per coefficient
  int max_n = 3;       ///< 0 <= n <= max_n (in units of 1/level)
  long max_r = 2;      ///< |r_j| <= max_r
  long max_num = 5;    ///< numerators in [-max_num, max_num], nonzero
  long max_den = 3;    ///< denominators in [1, max_den]
  bool admissible = false;  ///< restrict modes to the positive semi-definite support
};

/// Random symmetric half-integral matrix with det != 0; positive definite when asked.
HalfIntSymMatrix random_index(std::size_t h, Rng& rng, bool positive_definite = false);

Rational random_rational(Rng& rng, const RandomShape& shape = {});

/// A mode (n, r); admissible modes are drawn against m.
FourierMode random_mode(const HalfIntSymMatrix& m, Rng& rng, const RandomShape& shape = {}, long level = 1);

/// Nonzero V_s-valued polynomial with up to shape.terms modes, each a random combination of V_s monomials.
FourierPoly random_fourier_poly(const HalfIntSymMatrix& m, int s, Rng& rng, const RandomShape& shape = {}, long level = 1);

/// Random scalar element of depth <= d: a random subset of the monomials alpha^nu beta^r, |nu, r| <= d.
NearlyHoloElt random_nearly_holomorphic(int k, const HalfIntSymMatrix& m, int d, Rng& rng, const RandomShape& shape = {},
                                        long level = 1);

}  // namespace jacobi
