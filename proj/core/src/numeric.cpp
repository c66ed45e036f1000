#include "jacobi/numeric.hpp"

#include "jacobi/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace jacobi {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

void check_point(const Point& p, std::size_t h) {
  if (!(p.tau.imag() > 0)) throw DomainError("evaluation point needs Im tau > 0");
  if (p.z.size() != h) throw DomainError("evaluation point has " + std::to_string(p.z.size()) + " elliptic variables, expected " + std::to_string(h));
}

std::vector<std::vector<long>> zero_square(std::size_t h) { return std::vector<std::vector<long>>(h, std::vector<long>(h, 0)); }

}  // namespace

std::string Point::to_string() const {
  std::ostringstream os;
  os << "tau=" << tau.real() << (tau.imag() < 0 ? "" : "+") << tau.imag() << "i, z=(";
  for (std::size_t i = 0; i < z.size(); ++i) os << (i ? ", " : "") << z[i].real() << (z[i].imag() < 0 ? "" : "+") << z[i].imag() << 'i';
  os << ')';
  return os.str();
}

Complex e(Complex x) { return std::exp(Complex(0, kTwoPi) * x); }

Evaluation evaluate(const FourierPoly& f, const Point& p) {
  check_point(p, f.h());
  Evaluation out{SymPoly<Complex>(f.value_degree(), f.h())};
  if (f.is_zero()) return out;
  const Rational top = f.coeffs().rbegin()->first.n;
  double top_mass = 0;
  for (const auto& [mode, value] : f.coeffs()) {
    Complex arg = to_double(mode.n) * p.tau;
    for (std::size_t j = 0; j < f.h(); ++j) arg += static_cast<double>(mode.r[j]) * p.z[j];
    const Complex w = e(arg);
    for (const auto& [mono, c] : value.coeffs()) {
      out.value.add(mono, to_double(c) * w);
      if (mode.n == top) top_mass += std::abs(to_double(c)) * std::abs(w);
    }
  }
  out.tail_bound = top_mass * std::exp(-kTwoPi * p.tau.imag());
  return out;
}

Evaluation evaluate(const NearlyHoloElt& f, const Point& p) {
  check_point(p, f.h());
  const double y = p.tau.imag();
  const double beta = 1 / (4 * kTwoPi * y);
  Evaluation out{SymPoly<Complex>(f.s(), f.h())};
  for (const auto& [pair, fp] : f.terms()) {
    double factor = std::pow(beta, pair.r);
    for (std::size_t j = 0; j < f.h(); ++j) factor *= std::pow(p.z[j].imag() / y, pair.nu[j]);
    const Evaluation part = evaluate(fp, p);
    out.value += part.value.scaled(factor);
    out.tail_bound += std::abs(factor) * part.tail_bound;
  }
  return out;
}

GroupElement::GroupElement(long a_, long b_, long c_, long d_, std::vector<long> lambda_, std::vector<long> mu_,
                           std::vector<std::vector<long>> kappa_)
    : a(a_), b(b_), c(c_), d(d_), lambda(std::move(lambda_)), mu(std::move(mu_)), kappa(std::move(kappa_)) {
  if (a * d - b * c != 1) throw DomainError("modular part must have determinant 1");
  const std::size_t n = lambda.size();
  if (mu.size() != n || kappa.size() != n) throw DomainError("Heisenberg part has inconsistent lengths");
  for (const auto& row : kappa)
    if (row.size() != n) throw DomainError("kappa must be square");
  const auto lt = lambda_tilde();
  const auto mt = mu_tilde();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (kappa[i][j] - lt[i] * mt[j] != kappa[j][i] - lt[j] * mt[i])
        throw DomainError("kappa - lambda~ mu~' must be symmetric");
}

GroupElement GroupElement::identity(std::size_t h) {
  return GroupElement(1, 0, 0, 1, std::vector<long>(h, 0), std::vector<long>(h, 0), zero_square(h));
}

GroupElement GroupElement::T(std::size_t h) {
  return GroupElement(1, 1, 0, 1, std::vector<long>(h, 0), std::vector<long>(h, 0), zero_square(h));
}

GroupElement GroupElement::S(std::size_t h) {
  return GroupElement(0, -1, 1, 0, std::vector<long>(h, 0), std::vector<long>(h, 0), zero_square(h));
}

GroupElement GroupElement::translation(std::vector<long> lambda, std::vector<long> mu) {
  const std::size_t h = lambda.size();
  auto kappa = zero_square(h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h && j < mu.size(); ++j) kappa[i][j] = lambda[i] * mu[j];
  return GroupElement(1, 0, 0, 1, std::move(lambda), std::move(mu), std::move(kappa));
}

GroupElement GroupElement::with_heisenberg(long a, long b, long c, long d, std::vector<long> lambda, std::vector<long> mu) {
  const std::size_t h = lambda.size();
  if (mu.size() != h) throw DomainError("lambda and mu differ in length");
  auto kappa = zero_square(h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) kappa[i][j] = (d * lambda[i] - c * mu[i]) * (-b * lambda[j] + a * mu[j]);
  return GroupElement(a, b, c, d, std::move(lambda), std::move(mu), std::move(kappa));
}

GroupElement GroupElement::heisenberg(std::vector<std::vector<long>> kappa) {
  const std::size_t h = kappa.size();
  return GroupElement(1, 0, 0, 1, std::vector<long>(h, 0), std::vector<long>(h, 0), std::move(kappa));
}

std::vector<long> GroupElement::lambda_tilde() const {
  std::vector<long> out(lambda.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = d * lambda[j] - c * mu[j];
  return out;
}

std::vector<long> GroupElement::mu_tilde() const {
  std::vector<long> out(lambda.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = -b * lambda[j] + a * mu[j];
  return out;
}

Point GroupElement::act(const Point& p) const {
  const Complex j = static_cast<double>(c) * p.tau + static_cast<double>(d);
  Point out{(static_cast<double>(a) * p.tau + static_cast<double>(b)) / j, p.z};
  for (std::size_t i = 0; i < out.z.size(); ++i)
    out.z[i] = (p.z[i] + static_cast<double>(lambda[i]) * p.tau + static_cast<double>(mu[i])) / j;
  return out;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  auto vec = [&](const std::vector<long>& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
  };
  os << "([[" << a << ',' << b << "],[" << c << ',' << d << "]], lambda=";
  vec(lambda);
  os << ", mu=";
  vec(mu);
  os << ", kappa=[";
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    if (i) os << ',';
    vec(kappa[i]);
  }
  os << "])";
  return os.str();
}

Complex iota(const GroupElement& g, const HalfIntSymMatrix& m, const Point& p) {
  const std::size_t h = m.h();
  if (g.h() != h) throw DomainError("group element and index differ in cogenus");
  std::vector<Complex> w(h), v(h);
  for (std::size_t i = 0; i < h; ++i) {
    w[i] = p.z[i] + static_cast<double>(g.lambda[i]) * p.tau + static_cast<double>(g.mu[i]);
    v[i] = 2.0 * p.z[i] + static_cast<double>(g.lambda[i]) * p.tau + static_cast<double>(g.mu[i]);
  }
  Complex wmw = 0, lmv = 0;
  double trace = 0;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      const double mij = to_double(m(i, j));
      wmw += w[i] * mij * w[j];
      lmv += static_cast<double>(g.lambda[i]) * mij * v[j];
      trace += mij * static_cast<double>(g.kappa[j][i]);
    }
  const Complex j = static_cast<double>(g.c) * p.tau + static_cast<double>(g.d);
  return e(static_cast<double>(g.c) * wmw / j - lmv) * e(-trace);
}

Evaluation slash(const Evaluator& phi, int k, int s, const HalfIntSymMatrix& m, const GroupElement& g, const Point& p) {
  check_point(p, m.h());
  Evaluation image = phi(g.act(p));
  if (image.value.degree() != s) throw ShapeMismatch("evaluator returned a value of the wrong degree");
  const Complex r = static_cast<double>(g.c) * p.tau + static_cast<double>(g.d);
  const auto lt = g.lambda_tilde();
  std::vector<Complex> v(m.h());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = -(static_cast<double>(g.c) * p.z[j] - static_cast<double>(lt[j])) / r;
  const Complex scale = std::pow(r, -k) / iota(g, m, p);
  image.value = aff_act<Complex, Complex>(1.0 / r, std::span<const Complex>(v), image.value).scaled(scale);
  image.tail_bound *= std::abs(scale);
  return image;
}

double max_norm(const SymPoly<Complex>& v) {
  double out = 0;
  for (const auto& [mono, c] : v.coeffs()) out = std::max(out, std::abs(c));
  return out;
}

SlashReport slash_check(const Evaluator& phi, int k, int s, const HalfIntSymMatrix& m, const GroupElement& g,
                        const std::vector<Point>& points, double tol) {
  SlashReport report;
  report.group_element = g.to_string();
  report.tol = tol;
  for (const auto& p : points) {
    const Evaluation direct = phi(p);
    const Evaluation moved = slash(phi, k, s, m, g, p);
    const double scale = std::max(max_norm(direct.value), 1e-300);
    const double residual = max_norm(moved.value - direct.value) / scale;
    report.points.push_back({p, residual, (direct.tail_bound + moved.tail_bound) / scale});
    report.max_residual = std::max(report.max_residual, residual);
  }
  report.passed = report.max_residual < tol;
  return report;
}

SlashReport slash_check(const NearlyHoloElt& phi, const GroupElement& g, const std::vector<Point>& points, double tol) {
  return slash_check([&](const Point& p) { return evaluate(phi, p); }, phi.k(), phi.s(), phi.index(), g, points, tol);
}

std::vector<Point> default_points(std::size_t h) {
  std::vector<Complex> z(h);
  for (std::size_t j = 0; j < h; ++j) z[j] = Complex(0.11 - 0.07 * static_cast<double>(j), 0.05 + 0.03 * static_cast<double>(j));
  return {Point{Complex(0, 2), z}, Point{Complex(1, 2), z}};
}

}  // namespace jacobi
