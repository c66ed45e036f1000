#pragma once

// Double precision evaluation of truncated Fourier expansions and the slash
// action of the Jacobi group with factor of automorphy det^k (x) sym^s (x) iota_m.

#include "jacobi/nearly_holomorphic.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace jacobi {

using Complex = std::complex<double>;

/// (tau, z) in H x C^h.
struct Point {
  Complex tau;
  std::vector<Complex> z;

  std::string to_string() const;
};

/// e(x) = exp(2 pi i x).
Complex e(Complex x);

struct Evaluation {
  SymPoly<Complex> value;
  /// C exp(-2 pi Im(tau) (B + 1)) with C the absolute coefficient mass at the top retained level B.
  double tail_bound = 0;
};

/// Throws DomainError unless Im tau > 0 and z has length h.
Evaluation evaluate(const FourierPoly& f, const Point& p);
/// alpha_j = Im z_j / Im tau, beta = 1 / (8 pi Im tau).
Evaluation evaluate(const NearlyHoloElt& f, const Point& p);

/// (M, lambda, mu, kappa) with M = [[a, b], [c, d]] in SL2(Z).
struct GroupElement {
  /// Throws DomainError unless ad - bc = 1, the vectors have length h and kappa - lambda~ mu~' is symmetric.
  GroupElement(long a, long b, long c, long d, std::vector<long> lambda, std::vector<long> mu,
               std::vector<std::vector<long>> kappa);

  static GroupElement identity(std::size_t h);
  static GroupElement T(std::size_t h);
  static GroupElement S(std::size_t h);
  /// (I, lambda, mu, lambda mu').
  static GroupElement translation(std::vector<long> lambda, std::vector<long> mu);
  /// (M, lambda, mu, lambda~ mu~').
  static GroupElement with_heisenberg(long a, long b, long c, long d, std::vector<long> lambda, std::vector<long> mu);
  /// (I, 0, 0, kappa) for symmetric kappa.
  static GroupElement heisenberg(std::vector<std::vector<long>> kappa);

  std::size_t h() const noexcept { return lambda.size(); }
  /// (lambda~, mu~) = (lambda, mu) M^{-1}.
  std::vector<long> lambda_tilde() const;
  std::vector<long> mu_tilde() const;

  /// g<tau, z> = ((a tau + b)/(c tau + d), (z + lambda tau + mu)/(c tau + d)).
  Point act(const Point& p) const;

  std::string to_string() const;

  long a, b, c, d;
  std::vector<long> lambda, mu;
  std::vector<std::vector<long>> kappa;
};

Complex iota(const GroupElement& g, const HalfIntSymMatrix& m, const Point& p);

using Evaluator = std::function<Evaluation(const Point&)>;

/// (phi |_{(k,s),m} g)(p) = eta(g, p)^{-1} phi(g<p>).
Evaluation slash(const Evaluator& phi, int k, int s, const HalfIntSymMatrix& m, const GroupElement& g, const Point& p);

/// Largest coefficient modulus.
double max_norm(const SymPoly<Complex>& v);

struct PointResidual {
  Point point;
  double residual = 0;  ///< |phi|g - phi| / |phi|
  double tail_bound = 0;
};

struct SlashReport {
  std::string group_element;
  std::vector<PointResidual> points;
  double max_residual = 0;
  double tol = 0;
  bool passed = false;
};

/// Compares phi|g with phi at every point; phi is evaluated at weight (k, s) and index m.
SlashReport slash_check(const Evaluator& phi, int k, int s, const HalfIntSymMatrix& m, const GroupElement& g,
                        const std::vector<Point>& points, double tol);
SlashReport slash_check(const NearlyHoloElt& phi, const GroupElement& g, const std::vector<Point>& points, double tol);

/// tau in {2i, 1 + 2i} with a fixed small z.
std::vector<Point> default_points(std::size_t h);

}  // namespace jacobi
