#pragma once

#include "jacobi/fourier.hpp"
#include "jacobi/matrix.hpp"
#include "jacobi/multi_index.hpp"
#include "jacobi/sympoly.hpp"

#include <climits>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace jacobi {

/// Stand-in for the degree of the zero function.
inline constexpr int kMinusInfinity = INT_MIN;

/// Affine weight det^k (x) sym^s.
struct WeightLabel {
  int k = 0;
  int s = 0;
  bool operator==(const WeightLabel&) const = default;
};

/// sum over (nu, r) of alpha^nu beta^r f_{nu,r}, with f_{nu,r} holomorphic
/// V_s-valued Fourier polynomials, labelled with weight (k, s) and index m.
class NearlyHoloElt {
public:
  NearlyHoloElt(int k, int s, HalfIntSymMatrix m, long level = 1);

  static NearlyHoloElt holomorphic(int k, HalfIntSymMatrix m, const FourierPoly& f);
  /// Zero element with the same (s, m, level) and weight k.
  NearlyHoloElt zero_with_weight(int k) const { return NearlyHoloElt(k, s_, m_, level_); }

  int k() const noexcept { return k_; }
  int s() const noexcept { return s_; }
  WeightLabel weight() const noexcept { return {k_, s_}; }
  std::size_t h() const noexcept { return m_.h(); }
  long level() const noexcept { return level_; }
  const HalfIntSymMatrix& index() const noexcept { return m_; }
  const std::map<MultiIndexPair, FourierPoly>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_holomorphic() const;
  /// f_{nu,r}; the zero polynomial when absent.
  FourierPoly coefficient(const MultiIndexPair& pair) const;
  FourierPoly holomorphic_part() const { return coefficient(MultiIndexPair::zero(h())); }

  void add_term(const MultiIndexPair& pair, const FourierMode& mode, const SymMonomial& mono, const Rational& c);
  void add(const MultiIndexPair& pair, const FourierPoly& f);

  /// Visits every (pair, mode, V_s monomial, coefficient).
  template <class F>
  void for_each_term(F&& fn) const {
    for (const auto& [pair, fp] : terms_)
      for (const auto& [mode, value] : fp.coeffs())
        for (const auto& [mono, c] : value.coeffs()) fn(pair, mode, mono, c);
  }

  NearlyHoloElt relabeled(int k, int s) const;

  NearlyHoloElt& operator+=(const NearlyHoloElt& other);
  NearlyHoloElt& operator-=(const NearlyHoloElt& other);
  NearlyHoloElt scaled(const Rational& c) const;
  NearlyHoloElt operator-() const { return scaled(Rational(-1)); }

  friend NearlyHoloElt operator+(NearlyHoloElt a, const NearlyHoloElt& b) { return a += b; }
  friend NearlyHoloElt operator-(NearlyHoloElt a, const NearlyHoloElt& b) { return a -= b; }
  friend bool operator==(const NearlyHoloElt& a, const NearlyHoloElt& b);

  /// Throws ShapeMismatch unless (k, s, m, level) agree.
  void check_compatible(const NearlyHoloElt& other) const;

  std::string to_string() const;

private:
  int k_;
  int s_;
  HalfIntSymMatrix m_;
  long level_;
  std::map<MultiIndexPair, FourierPoly> terms_;
};

inline bool is_zero(const NearlyHoloElt& f) { return f.is_zero(); }

NearlyHoloElt add(const NearlyHoloElt& f, const NearlyHoloElt& g);
NearlyHoloElt scale(const NearlyHoloElt& f, const Rational& c);
/// alpha^nu beta^r * f.
NearlyHoloElt mul_monomial(const NearlyHoloElt& f, const std::vector<int>& nu, int r);

/// max |nu, r| over nonzero f_{nu,r}; kMinusInfinity for f = 0.
int total_degree(const NearlyHoloElt& f);
int degree_alpha(const NearlyHoloElt& f, std::size_t j);
int degree_beta(const NearlyHoloElt& f);

/// Least d >= 0 such that the coefficient of every X^j Y^nu has degree <= d + j;
/// kMinusInfinity for f = 0. For s = 0 this is max(0, deg f).
int depth(const NearlyHoloElt& f);

/// Literal membership test deg(p^t_s o f) < d + t for 1 <= t <= s. The t = 0
/// condition is vacuous because p^0 is the zero map, so for s = 0 this is
/// always true; depth() extends it with the scalar reading deg f <= d.
bool satisfies_projection_depth_condition(const NearlyHoloElt& f, int d);

/// The scalar coefficient function of the V_s monomial mono (weight k, s = 0).
NearlyHoloElt coefficient_function(const NearlyHoloElt& f, const SymMonomial& mono);

/// sum over monomials of coefficient * mono, at weight (k, s).
NearlyHoloElt assemble_vector_valued(int k, int s, const HalfIntSymMatrix& m, long level,
                                     const std::vector<std::pair<SymMonomial, NearlyHoloElt>>& parts);

}  // namespace jacobi
