#pragma once

// Raising and lowering operators on nearly holomorphic functions, realised
// extensionally: every generator maps alpha^nu beta^r e(n tau + r'z) to a
// finite combination of monomials on the same Fourier mode.

#include "jacobi/nearly_holomorphic.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace jacobi {

/// Normalized derivatives d = (1/4 pi i) d/d(.) acting on the generators.
///   d_tau alpha_j = tau_alpha * alpha_j beta      d_tau beta = tau_beta * beta^2
///   d_taubar alpha_j = taubar_alpha * alpha_j beta d_taubar beta = taubar_beta * beta^2
///   d_{z,i} alpha_j = delta_ij z_alpha * beta      d_{z,i} beta = 0
///   d_{zbar,i} alpha_j = delta_ij zbar_alpha * beta
///   d_tau e = mode_scale * n e,  d_{z,i} e = mode_scale * r_i e,  antiholomorphic ones kill e.
/// Only standard() is mathematically correct; the fields exist so that the
/// commutator table can be fault-injected.
struct DerivativeRules {
  Rational tau_alpha{1};
  Rational taubar_alpha{-1};
  Rational z_alpha{-1};
  Rational zbar_alpha{1};
  Rational tau_beta{1};
  Rational taubar_beta{-1};
  Rational mode_scale{1, 2};

  static const DerivativeRules& standard();
  /// Standard rules with one named field negated; throws Error on an unknown name.
  static DerivativeRules corrupted(const std::string& field);
};

enum class Partial { Tau, TauBar, Z, ZBar };

NearlyHoloElt apply_partial(Partial p, std::size_t j, const NearlyHoloElt& f,
                            const DerivativeRules& rules = DerivativeRules::standard());

/// R_k = d_tau + alpha' d_z + (1/2) alpha' m alpha - k beta, weight k -> k + 2.
NearlyHoloElt apply_R(int k, const NearlyHoloElt& f, const DerivativeRules& rules = DerivativeRules::standard());
/// R^J_j = d_{z,j} + (m alpha)_j, weight k -> k + 1.
NearlyHoloElt apply_RJ(std::size_t j, const NearlyHoloElt& f, const DerivativeRules& rules = DerivativeRules::standard());
/// R~^J_j = (m^{-1} d_z)_j + alpha_j, weight k -> k + 1.
NearlyHoloElt apply_RtJ(std::size_t j, const NearlyHoloElt& f, const DerivativeRules& rules = DerivativeRules::standard());
/// D~_k = d_tau - (1/2) d_z' m^{-1} d_z + (h/2 - k) beta, weight k -> k + 2.
NearlyHoloElt apply_Delta(int k, const NearlyHoloElt& f, const DerivativeRules& rules = DerivativeRules::standard());

/// L(alpha^nu beta^r g) = -r alpha^nu beta^{r-1} g for holomorphic g, weight k -> k - 2.
NearlyHoloElt apply_L(const NearlyHoloElt& f);
/// L^J_j(alpha^nu beta^r g) = nu_j alpha^{nu - e_j} beta^r g, weight k -> k - 1.
NearlyHoloElt apply_LJ(std::size_t j, const NearlyHoloElt& f);

/// L = beta^{-2}(d_taubar + alpha' d_zbar) evaluated from the derivative rules,
/// for cross-checking apply_L. Throws InternalInvariant if a negative power of
/// beta would survive.
NearlyHoloElt apply_L_from_definition(const NearlyHoloElt& f, const DerivativeRules& rules = DerivativeRules::standard());
/// L^J_j = beta^{-1} d_{zbar,j}, see apply_L_from_definition.
NearlyHoloElt apply_LJ_from_definition(std::size_t j, const NearlyHoloElt& f,
                                       const DerivativeRules& rules = DerivativeRules::standard());

NearlyHoloElt mul_alpha(std::size_t j, const NearlyHoloElt& f);
NearlyHoloElt mul_beta(const NearlyHoloElt& f);

struct Generator {
  enum class Kind { DTau, DTauBar, DZ, DZBar, R, RJ, L, LJ, Delta, RtJ, MulAlpha, MulBeta, MulScalar };

  Kind kind = Kind::MulScalar;
  std::size_t j = 0;
  /// Expected input weight for R and Delta; when empty, the element's own weight is used.
  std::optional<int> weight;
  Rational scalar{1};

  static Generator make(Kind kind, std::size_t j = 0, std::optional<int> weight = std::nullopt, Rational scalar = 1) {
    Generator g;
    g.kind = kind;
    g.j = j;
    g.weight = weight;
    g.scalar = std::move(scalar);
    return g;
  }
  static Generator d_tau() { return make(Kind::DTau); }
  static Generator d_taubar() { return make(Kind::DTauBar); }
  static Generator d_z(std::size_t j) { return make(Kind::DZ, j); }
  static Generator d_zbar(std::size_t j) { return make(Kind::DZBar, j); }
  static Generator raise(std::optional<int> k = std::nullopt) { return make(Kind::R, 0, k); }
  static Generator raise_j(std::size_t j) { return make(Kind::RJ, j); }
  static Generator lower() { return make(Kind::L); }
  static Generator lower_j(std::size_t j) { return make(Kind::LJ, j); }
  static Generator heat(std::optional<int> k = std::nullopt) { return make(Kind::Delta, 0, k); }
  static Generator raise_tilde_j(std::size_t j, std::optional<int> k = std::nullopt) { return make(Kind::RtJ, j, k); }
  static Generator mul_alpha(std::size_t j) { return make(Kind::MulAlpha, j); }
  static Generator mul_beta() { return make(Kind::MulBeta); }
  static Generator mul_scalar(Rational c) { return make(Kind::MulScalar, 0, std::nullopt, std::move(c)); }

  /// Weight change k -> k + weight_shift().
  int weight_shift() const;
  std::string name() const;
};

/// A word of generators, stored in application order (word()[0] acts first).
class OperatorExpr {
public:
  explicit OperatorExpr(HalfIntSymMatrix m) : m_(std::move(m)) {}
  OperatorExpr(HalfIntSymMatrix m, std::vector<Generator> word) : m_(std::move(m)), word_(std::move(word)) {}

  static OperatorExpr single(HalfIntSymMatrix m, Generator g) { return OperatorExpr(std::move(m), {std::move(g)}); }

  const HalfIntSymMatrix& index() const noexcept { return m_; }
  const std::vector<Generator>& word() const noexcept { return word_; }
  bool is_identity() const noexcept { return word_.empty(); }

  /// this o inner: inner acts first.
  OperatorExpr after(const OperatorExpr& inner) const;

  /// Output weight for input weight k; throws WeightMismatch when an explicit
  /// weight label along the word disagrees with the threaded weight.
  int output_weight(int k) const;

  NearlyHoloElt apply(const NearlyHoloElt& f, const DerivativeRules& rules = DerivativeRules::standard()) const;

  /// Composition notation, outermost first.
  std::string to_string() const;

private:
  HalfIntSymMatrix m_;
  std::vector<Generator> word_;
};

NearlyHoloElt apply_generator(const Generator& g, const NearlyHoloElt& f,
                              const DerivativeRules& rules = DerivativeRules::standard());

/// R^_{nu,r} = (R~^J_1)^{nu_1} o ... o (R~^J_h)^{nu_h} o D~_{k-|nu,r|+2(r-1)} o ... o D~_{k-|nu,r|},
/// mapping weight k - |nu,r| to k. Throws SingularIndex.
OperatorExpr compose_Rhat(const std::vector<int>& nu, int r, int k, const HalfIntSymMatrix& m);
/// L^_{nu,r} = L^r o (L^J_h)^{nu_h} o ... o (L^J_1)^{nu_1}, mapping weight k to k - |nu,r|.
OperatorExpr compose_Lhat(const std::vector<int>& nu, int r, const HalfIntSymMatrix& m);

/// f -> sum_i c_i W_i(f) + (weight_coefficient * k + constant) f, with k the weight of f.
struct OperatorSum {
  std::vector<std::pair<Rational, OperatorExpr>> terms;
  Rational weight_coefficient{0};
  Rational constant{0};

  NearlyHoloElt apply(const NearlyHoloElt& f, int output_weight,
                      const DerivativeRules& rules = DerivativeRules::standard()) const;
};

struct CommutatorReport {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string counterexample;
};

/// Checks A o B - B o A == expected on every element of testset. Weight
/// dependent generators read the weight of the element they act on, which
/// implements the convention [L, R_k] = L o R_k - R_{k-2} o L.
CommutatorReport commutator_check(const std::string& name, const OperatorExpr& a, const OperatorExpr& b,
                                  const OperatorSum& expected, const std::vector<NearlyHoloElt>& testset,
                                  const DerivativeRules& rules = DerivativeRules::standard());

struct CommutatorRelation {
  std::string name;
  std::vector<std::tuple<OperatorExpr, OperatorExpr, OperatorSum>> instances;
};

/// The nine commutator relations among L, L^J, R, R^J, D~ and R~^J, each
/// expanded over all index combinations i, j. Relations involving m^{-1}
/// are included only for invertible m.
std::vector<CommutatorRelation> commutator_table(const HalfIntSymMatrix& m);

std::vector<CommutatorReport> run_commutator_table(const HalfIntSymMatrix& m, const std::vector<NearlyHoloElt>& testset,
                                                   const DerivativeRules& rules = DerivativeRules::standard());

/// alpha^nu beta^r e(mode) for every |nu, r| <= max_degree and every mode, at weight k.
std::vector<NearlyHoloElt> monomial_family(int k, const HalfIntSymMatrix& m, int max_degree,
                                           const std::vector<FourierMode>& modes, long level = 1);

/// Scalar c with L^_{nu,r} o R^_{nu,r} = c id on H_{k - |nu,r|, m}, read off
/// two probes (the constant 1 and a nonzero mode) with no hypothesis check.
/// Throws InternalInvariant if the composite is not scalar on the probes.
Rational lr_constant_probe(const std::vector<int>& nu, int r, int k, const HalfIntSymMatrix& m);

/// nu! * prod_{p=0}^{r-1} sum_{q=1}^{r-p} (k - |nu| - 2p - 2q - h/2).
Rational lr_constant_recursion(const std::vector<int>& nu, int r, int k, std::size_t h);

/// Probe value cross-checked against the recursion; throws HypothesisViolated
/// when k - |nu, r| <= h/2 and InternalInvariant when the two routes disagree.
/// Results are memoized per (nu, r, k, m).
Rational lr_constant(const std::vector<int>& nu, int r, int k, const HalfIntSymMatrix& m);

}  // namespace jacobi
