#include "jacobi/fourier.hpp"

#include "jacobi/errors.hpp"

#include <sstream>

namespace jacobi {

std::string FourierMode::to_string() const {
  std::ostringstream os;
  os << "(n=" << n.get_str() << ", r=(";
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  os << "))";
  return os.str();
}

SymMonomial scalar_monomial(std::size_t h) { return SymMonomial{0, std::vector<int>(h, 0)}; }

FourierPoly::FourierPoly(std::size_t h, int s, long level) : h_(h), s_(s), level_(level) {
  if (h == 0) throw ShapeMismatch("cogenus must be positive");
  if (s < 0) throw ShapeMismatch("value degree must be non-negative");
  if (level <= 0) throw ShapeMismatch("level must be positive");
}

FourierPoly FourierPoly::scalar_mode(std::size_t h, const FourierMode& mode, const Rational& c, long level) {
  FourierPoly out(h, 0, level);
  out.add_scalar(mode, c);
  return out;
}

void FourierPoly::add(const FourierMode& mode, const SymMonomial& mono, const Rational& c) {
  if (jacobi::is_zero(c)) return;
  if (mode.r.size() != h_) throw ShapeMismatch("Fourier mode " + mode.to_string() + " has wrong length");
  auto it = coeffs_.find(mode);
  if (it == coeffs_.end()) {
    const Integer den = mode.n.get_den();
    if (!den.fits_slong_p() || level_ % den.get_si() != 0)
      throw ShapeMismatch("mode " + mode.to_string() + " is not compatible with level " + std::to_string(level_));
    it = coeffs_.emplace(mode, SymPoly<Rational>(s_, h_)).first;
  }
  it->second.add(mono, c);
  if (it->second.is_zero()) coeffs_.erase(it);
}

void FourierPoly::add(const FourierMode& mode, const SymPoly<Rational>& value) {
  if (value.degree() != s_ || value.h() != h_) throw ShapeMismatch("coefficient not in V_" + std::to_string(s_));
  for (const auto& [mono, c] : value.coeffs()) add(mode, mono, c);
}

void FourierPoly::add_scalar(const FourierMode& mode, const Rational& c) {
  if (s_ != 0) throw ShapeMismatch("add_scalar on a V_s-valued Fourier polynomial");
  add(mode, scalar_monomial(h_), c);
}

Rational FourierPoly::scalar_at(const FourierMode& mode) const {
  if (s_ != 0) throw ShapeMismatch("scalar_at on a V_s-valued Fourier polynomial");
  auto it = coeffs_.find(mode);
  if (it == coeffs_.end()) return 0;
  const Rational* c = it->second.find(scalar_monomial(h_));
  return c ? *c : Rational(0);
}

void FourierPoly::check_compatible(const FourierPoly& other) const {
  if (other.h_ != h_ || other.s_ != s_ || other.level_ != level_)
    throw ShapeMismatch("Fourier polynomials differ in (h, s, level)");
}

FourierPoly& FourierPoly::operator+=(const FourierPoly& other) {
  check_compatible(other);
  for (const auto& [mode, value] : other.coeffs_)
    for (const auto& [mono, c] : value.coeffs()) add(mode, mono, c);
  return *this;
}

FourierPoly& FourierPoly::operator-=(const FourierPoly& other) {
  check_compatible(other);
  for (const auto& [mode, value] : other.coeffs_)
    for (const auto& [mono, c] : value.coeffs()) add(mode, mono, Rational(-c));
  return *this;
}

FourierPoly FourierPoly::scaled(const Rational& c) const {
  FourierPoly out(h_, s_, level_);
  if (jacobi::is_zero(c)) return out;
  for (const auto& [mode, value] : coeffs_)
    for (const auto& [mono, x] : value.coeffs()) out.add(mode, mono, Rational(x * c));
  return out;
}

std::vector<FourierMode> check_support(const FourierPoly& f, const HalfIntSymMatrix& m) {
  if (m.h() != f.h()) throw ShapeMismatch("index and Fourier polynomial differ in cogenus");
  std::vector<FourierMode> bad;
  for (const auto& [mode, value] : f.coeffs())
    if (!value.is_zero() && !psd_support_check(mode.n, mode.r, m)) bad.push_back(mode);
  return bad;
}

}  // namespace jacobi
