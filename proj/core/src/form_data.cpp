#include "jacobi/form_data.hpp"

#include "jacobi/errors.hpp"

namespace jacobi {

JacobiFormData::JacobiFormData(int k_, int s_, HalfIntSymMatrix m_, long level_, long trunc_, FourierPoly coeffs_)
    : k(k_), s(s_), m(std::move(m_)), level(level_), trunc(trunc_), coeffs(std::move(coeffs_)) {
  if (coeffs.h() != m.h() || coeffs.value_degree() != s || coeffs.level() != level)
    throw ShapeMismatch("Fourier coefficients do not match (h, s, level)");
  if (!coeffs.is_zero() && coeffs.coeffs().rbegin()->first.n > trunc)
    throw ShapeMismatch("Fourier coefficients exceed the truncation bound " + std::to_string(trunc));
}

}  // namespace jacobi
