#pragma once

#include "jacobi/matrix.hpp"
#include "jacobi/rational.hpp"
#include "jacobi/sympoly.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace jacobi {

/// Exponent of e(n tau + r'z); n lies in (1/N)Z for the level N of the owner.
struct FourierMode {
  Rational n;
  std::vector<long> r;

  static FourierMode zero(std::size_t h) { return {Rational(0), std::vector<long>(h, 0)}; }

  auto operator<=>(const FourierMode& other) const {
    if (auto c = cmp(n, other.n); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return r <=> other.r;
  }
  bool operator==(const FourierMode& other) const { return n == other.n && r == other.r; }

  std::string to_string() const;
};

/// Finite sum of c(n, r) e(n tau + r'z) with V_s-valued exact coefficients.
/// Value degree s = 0 is the scalar case (a single constant monomial).
class FourierPoly {
public:
  FourierPoly() = default;
  FourierPoly(std::size_t h, int s, long level = 1);

  /// Scalar polynomial with a single mode.
  static FourierPoly scalar_mode(std::size_t h, const FourierMode& mode, const Rational& c, long level = 1);

  std::size_t h() const noexcept { return h_; }
  int value_degree() const noexcept { return s_; }
  long level() const noexcept { return level_; }
  const std::map<FourierMode, SymPoly<Rational>>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Adds c * mono * e(mode). Validates the mode against h and the level.
  void add(const FourierMode& mode, const SymMonomial& mono, const Rational& c);
  void add(const FourierMode& mode, const SymPoly<Rational>& value);
  /// Scalar convenience: mono = 1.
  void add_scalar(const FourierMode& mode, const Rational& c);

  /// Scalar coefficient at mode (s = 0 only); zero when absent.
  Rational scalar_at(const FourierMode& mode) const;

  FourierPoly& operator+=(const FourierPoly& other);
  FourierPoly& operator-=(const FourierPoly& other);
  FourierPoly scaled(const Rational& c) const;

  friend FourierPoly operator+(FourierPoly a, const FourierPoly& b) { return a += b; }
  friend FourierPoly operator-(FourierPoly a, const FourierPoly& b) { return a -= b; }
  friend bool operator==(const FourierPoly& a, const FourierPoly& b) {
    return a.h_ == b.h_ && a.s_ == b.s_ && a.level_ == b.level_ && a.coeffs_ == b.coeffs_;
  }

  void check_compatible(const FourierPoly& other) const;

private:
  std::size_t h_ = 0;
  int s_ = 0;
  long level_ = 1;
  std::map<FourierMode, SymPoly<Rational>> coeffs_;
};

inline bool is_zero(const FourierPoly& f) { return f.is_zero(); }

/// Constant monomial 1 of V_0 for cogenus h.
SymMonomial scalar_monomial(std::size_t h);

/// Modes with a nonzero coefficient whose block matrix [[n, r'/2], [r/2, m]] is not PSD.
std::vector<FourierMode> check_support(const FourierPoly& f, const HalfIntSymMatrix& m);

}  // namespace jacobi
