#include "jacobi/random.hpp"

namespace jacobi {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::vector<SymMonomial> all_monomials(int s, std::size_t h) { return coset_basis(s, h, s + 1); }

}  // namespace

HalfIntSymMatrix random_index(std::size_t h, Rng& rng, bool positive_definite) {
  for (;;) {
    std::vector<std::vector<long>> two_m(h, std::vector<long>(h, 0));
    for (std::size_t i = 0; i < h; ++i) {
      two_m[i][i] = 2 * uniform(rng, positive_definite ? 1 : -3, 4);
      for (std::size_t j = 0; j < i; ++j) two_m[i][j] = two_m[j][i] = uniform(rng, -3, 3);
    }
    HalfIntSymMatrix m = HalfIntSymMatrix::from_twice(two_m);
    if (!m.is_invertible()) continue;
    if (positive_definite && !is_positive_semidefinite(m.matrix())) continue;
    return m;
  }
}

Rational random_rational(Rng& rng, const RandomShape& shape) {
  long num = 0;
  while (num == 0) num = uniform(rng, -shape.max_num, shape.max_num);
  return make_rational(num, uniform(rng, 1, shape.max_den));
}

FourierMode random_mode(const HalfIntSymMatrix& m, Rng& rng, const RandomShape& shape, long level) {
  for (;;) {
    FourierMode mode{make_rational(uniform(rng, 0, shape.max_n * level), level), std::vector<long>(m.h())};
    for (auto& r : mode.r) r = uniform(rng, -shape.max_r, shape.max_r);
    if (!shape.admissible || psd_support_check(mode.n, mode.r, m)) return mode;
  }
}

FourierPoly random_fourier_poly(const HalfIntSymMatrix& m, int s, Rng& rng, const RandomShape& shape, long level) {
  FourierPoly out(m.h(), s, level);
  const std::vector<SymMonomial> basis = all_monomials(s, m.h());
  while (out.is_zero()) {
    for (int t = 0; t < shape.terms; ++t) {
      const FourierMode mode = random_mode(m, rng, shape, level);
      for (const auto& mono : basis)
        if (uniform(rng, 0, 1) == 1) out.add(mode, mono, random_rational(rng, shape));
    }
  }
  return out;
}

NearlyHoloElt random_nearly_holomorphic(int k, const HalfIntSymMatrix& m, int d, Rng& rng, const RandomShape& shape,
                                        long level) {
  NearlyHoloElt out(k, 0, m, level);
  for (const auto& pair : enumerate_pairs_up_to(d, m.h()))
    if (pair.degree() == d || uniform(rng, 0, 2) != 0) out.add(pair, random_fourier_poly(m, 0, rng, shape, level));
  return out;
}

}  // namespace jacobi
