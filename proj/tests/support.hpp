#pragma once

#include "jacobi/nearly_holomorphic.hpp"
#include "jacobi/numeric.hpp"
#include "jacobi/random.hpp"

#include <cmath>
#include <vector>

namespace testing {

using namespace jacobi;

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline FourierMode mode(long n, std::vector<long> r) { return {Rational(n), std::move(r)}; }

inline HalfIntSymMatrix index_from_twice(std::vector<std::vector<long>> two_m) {
  return HalfIntSymMatrix::from_twice(two_m);
}

/// c * alpha^nu beta^r e(mode) at weight k, scalar valued.
inline NearlyHoloElt monomial(int k, const HalfIntSymMatrix& m, std::vector<int> nu, int r, const FourierMode& md,
                              const Rational& c = Rational(1)) {
  NearlyHoloElt f(k, 0, m);
  f.add_term(MultiIndexPair{std::move(nu), r}, md, scalar_monomial(m.h()), c);
  return f;
}

inline NearlyHoloElt constant(int k, const HalfIntSymMatrix& m, const Rational& c = Rational(1)) {
  return monomial(k, m, std::vector<int>(m.h(), 0), 0, FourierMode::zero(m.h()), c);
}

inline NearlyHoloElt holo(int k, const HalfIntSymMatrix& m, const FourierPoly& f) {
  return NearlyHoloElt::holomorphic(k, m, f);
}

/// A point with Im tau = 1.3 and small generic z.
inline Point generic_point(std::size_t h) {
  Point p{Complex(0.21, 1.3), {}};
  for (std::size_t j = 0; j < h; ++j) p.z.emplace_back(0.13 - 0.05 * double(j), 0.08 + 0.04 * double(j));
  return p;
}

inline Complex scalar_value(const Evaluation& ev) {
  const auto* c = ev.value.find(scalar_monomial(ev.value.h()));
  return c ? *c : Complex(0);
}

inline std::vector<int> unit(std::size_t h, std::size_t j) {
  std::vector<int> nu(h, 0);
  nu[j] = 1;
  return nu;
}

}  // namespace testing
