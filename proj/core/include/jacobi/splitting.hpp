#pragma once

// Splitting of V_s-valued holomorphic functions into scalar pieces of weights
// k, k + 1, ..., k + s, built from the section sigma~, the retracts of the
// inclusion by X and the scalar holomorphic projection.

#include "jacobi/nearly_holomorphic.hpp"
#include "jacobi/projection.hpp"

#include <vector>

namespace jacobi {

/// parts[l] holds mu(s - l, h) scalar holomorphic polynomials of weight k + l,
/// ordered like quotient_basis(s - l, h).
struct ComponentTuple {
  /// All parts zero, with the right counts.
  ComponentTuple(int k, int s, HalfIntSymMatrix m, long level = 1);

  int k;
  int s;
  HalfIntSymMatrix m;
  long level;
  std::vector<std::vector<FourierPoly>> parts;

  std::size_t h() const noexcept { return m.h(); }
  /// mu(s - l, h) for l = 0..s.
  std::vector<std::size_t> part_counts() const;

  friend bool operator==(const ComponentTuple& a, const ComponentTuple& b) {
    return a.k == b.k && a.s == b.s && a.m == b.m && a.level == b.level && a.parts == b.parts;
  }
};

/// X * g, weight (k + 1, s - 1) -> (k, s).
NearlyHoloElt include_x(const NearlyHoloElt& g);

/// Coefficients of the pure Y-monomials, as scalar functions of weight k in quotient_basis order.
std::vector<NearlyHoloElt> p1_push(const NearlyHoloElt& g);

/// sum_nu f_nu prod_j (Y_j - alpha_j X)^{nu_j}.
NearlyHoloElt sigma_tilde(const std::vector<NearlyHoloElt>& components, int k, int s, const HalfIntSymMatrix& m);

/// (g - sigma~(p1 g)) / X at weight (k + 1, s - 1); InternalInvariant if X does not divide.
NearlyHoloElt upper_retract(const NearlyHoloElt& g);

/// Holomorphic retract of a depth <= d function at weight (k, s).
NearlyHoloElt nh_retract(const NearlyHoloElt& g, int d);

/// Holomorphic section to p1_push: the scalar parts chi (weight k) lifted to weight (k, s).
NearlyHoloElt holo_section(const std::vector<FourierPoly>& chi, int k, int s, const HalfIntSymMatrix& m);

/// Retract of include_x on holomorphic functions: weight (k, s) -> (k + 1, s - 1).
NearlyHoloElt holo_retract(const NearlyHoloElt& phi);

ComponentTuple vv_decompose(const NearlyHoloElt& phi);
NearlyHoloElt vv_assemble(const ComponentTuple& t);

}  // namespace jacobi
