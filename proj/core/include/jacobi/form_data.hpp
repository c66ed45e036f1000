#pragma once

#include "jacobi/nearly_holomorphic.hpp"

namespace jacobi {

/// Truncated Fourier expansion of a holomorphic V_s-valued function of weight (k, s) and index m.
struct JacobiFormData {
  /// Throws ShapeMismatch when coeffs disagree with (h, s, level) or carry a mode beyond trunc.
  JacobiFormData(int k, int s, HalfIntSymMatrix m, long level, long trunc, FourierPoly coeffs);

  std::size_t h() const noexcept { return m.h(); }
  NearlyHoloElt as_function() const { return NearlyHoloElt::holomorphic(k, m, coeffs); }
  /// Modes violating the positive semi-definite support condition.
  std::vector<FourierMode> support_violations() const { return check_support(coeffs, m); }

  int k;
  int s;
  HalfIntSymMatrix m;
  long level;
  long trunc;
  FourierPoly coeffs;
};

}  // namespace jacobi
