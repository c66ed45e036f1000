#pragma once

// Decomposition of scalar nearly holomorphic functions of bounded depth into
// images of holomorphic functions under the composite raising operators R^.

#include "jacobi/nearly_holomorphic.hpp"
#include "jacobi/operators.hpp"

#include <map>
#include <vector>

namespace jacobi {

/// f = sum over |nu, r| <= d of R^_{nu,r}(g_{nu,r}), with g_{nu,r} holomorphic of weight k - |nu, r|.
struct NHDecomposition {
  /// All components zero.
  NHDecomposition(int k, HalfIntSymMatrix m, int d, long level = 1);

  int k;
  HalfIntSymMatrix m;
  int d;
  long level;
  /// Every pair with |nu, r| <= d is present, zero components included.
  std::map<MultiIndexPair, FourierPoly> components;

  std::size_t h() const noexcept { return m.h(); }
  const FourierPoly& holomorphic_part() const { return components.at(MultiIndexPair::zero(h())); }
};

/// Throws HypothesisViolated (with the diagnostic in the message) unless 2(k - d) > h.
void check_projection_hypothesis(std::size_t h, int k, int d);

NHDecomposition nh_decompose(const NearlyHoloElt& f, int d);
NearlyHoloElt nh_assemble(const NHDecomposition& c);

/// The (0;0) component of nh_decompose(f, d).
FourierPoly holomorphic_part(const NearlyHoloElt& f, int d);

/// Number of pairs (nu, r) with |nu, r| <= d.
std::size_t component_count(int d, std::size_t h);

struct NonPositiveConstant {
  MultiIndexPair pair;
  Rational constant;
};

/// Pairs with |nu, r| <= d whose L^ o R^ constant at weight k is <= 0. Empty
/// when 2(k - d) > h. For invertible m every constant is read off the
/// operators and cross-checked against the recursion.
std::vector<NonPositiveConstant> diagnose_hypothesis(int k, int d, const HalfIntSymMatrix& m);

}  // namespace jacobi
