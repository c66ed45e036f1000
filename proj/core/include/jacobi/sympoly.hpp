#pragma once

// Elements of V_s: homogeneous degree-s polynomials in X, Y_1, ..., Y_h with
// coefficients in an arbitrary ring, together with the affine action, the
// inclusions X^t * (.), the quotient projections and the section sigma.

#include "jacobi/errors.hpp"
#include "jacobi/multi_index.hpp"
#include "jacobi/rational.hpp"

#include <complex>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jacobi {

inline bool is_zero(const std::complex<double>& z) { return z == 0.0; }

/// X^x Y_1^{y_1} ... Y_h^{y_h}.
struct SymMonomial {
  int x = 0;
  std::vector<int> y;

  int degree() const noexcept { return x + std::accumulate(y.begin(), y.end(), 0); }
  auto operator<=>(const SymMonomial&) const = default;
  bool operator==(const SymMonomial&) const = default;
};

/// Representatives of V_s / im(i^t): monomials with X-exponent < t, ordered by
/// ascending Y-degree (descending X-exponent), then descending-lex in nu.
std::vector<SymMonomial> coset_basis(int s, std::size_t h, int t);

/// Basis Y^nu, |nu| = s, of V_s / im(i^1) in descending-lex order of nu.
inline std::vector<SymMonomial> quotient_basis(int s, std::size_t h) { return coset_basis(s, h, 1); }

template <class C>
class SymPoly {
public:
  using Coefficient = C;

  SymPoly() = default;
  SymPoly(int s, std::size_t h) : s_(s), h_(h) {}

  static SymPoly monomial(int s, std::size_t h, SymMonomial mono, C c) {
    SymPoly out(s, h);
    out.add(mono, c);
    return out;
  }

  int degree() const noexcept { return s_; }
  std::size_t h() const noexcept { return h_; }
  const std::map<SymMonomial, C>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  const C* find(const SymMonomial& mono) const {
    auto it = coeffs_.find(mono);
    return it == coeffs_.end() ? nullptr : &it->second;
  }

  void add(const SymMonomial& mono, const C& c) {
    if (mono.y.size() != h_ || mono.degree() != s_) throw DegreeMismatch("monomial does not lie in V_" + std::to_string(s_));
    using jacobi::is_zero;
    if (is_zero(c)) return;
    auto [it, inserted] = coeffs_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) coeffs_.erase(it);
    }
  }

  SymPoly& operator+=(const SymPoly& other) {
    check_shape(other);
    for (const auto& [mono, c] : other.coeffs_) add(mono, c);
    return *this;
  }

  SymPoly& operator-=(const SymPoly& other) {
    check_shape(other);
    for (const auto& [mono, c] : other.coeffs_) add(mono, C(-c));
    return *this;
  }

  template <class S>
  SymPoly scaled(const S& factor) const {
    SymPoly out(s_, h_);
    for (const auto& [mono, c] : coeffs_) out.add(mono, C(c * factor));
    return out;
  }

  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.s_ == b.s_ && a.h_ == b.h_ && a.coeffs_ == b.coeffs_;
  }

private:
  void check_shape(const SymPoly& other) const {
    if (other.s_ != s_ || other.h_ != h_) throw ShapeMismatch("V_s elements of different degree or cogenus");
  }

  int s_ = 0;
  std::size_t h_ = 0;
  std::map<SymMonomial, C> coeffs_;
};

template <class C>
bool is_zero(const SymPoly<C>& p) {
  return p.is_zero();
}

namespace detail {

template <class S>
S scalar_from_integer(const Integer& n) {
  if constexpr (std::is_same_v<S, Rational>) {
    return Rational(n);
  } else {
    return S(n.get_d());
  }
}

template <class S>
S power(const S& base, int e) {
  S out(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace detail

/// f(X, Y) -> f(rX, v_1 X + Y_1, ..., v_h X + Y_h). Throws ZeroScale for r = 0.
template <class C, class S>
SymPoly<C> aff_act(const S& r, std::span<const S> v, const SymPoly<C>& f) {
  using jacobi::is_zero;
  if (is_zero(r)) throw ZeroScale("affine action with r = 0");
  const std::size_t h = f.h();
  if (v.size() != h) throw ShapeMismatch("translation vector length differs from cogenus");
  SymPoly<C> out(f.degree(), h);
  for (const auto& [mono, c] : f.coeffs()) {
    const S base = detail::power(r, mono.x);
    // Odometer over the split Y_j^{y_j} = sum_k binom(y_j, k) v_j^k X^k Y_j^{y_j - k}.
    std::vector<int> take(h, 0);
    while (true) {
      S w = base;
      SymMonomial target{mono.x, mono.y};
      for (std::size_t j = 0; j < h; ++j) {
        if (take[j] == 0) continue;
        w *= detail::scalar_from_integer<S>(binomial(mono.y[j], take[j])) * detail::power(v[j], take[j]);
        target.x += take[j];
        target.y[j] -= take[j];
      }
      out.add(target, C(c * w));
      std::size_t j = 0;
      for (; j < h; ++j) {
        if (take[j] < mono.y[j]) {
          ++take[j];
          break;
        }
        take[j] = 0;
      }
      if (j == h) break;
    }
  }
  return out;
}

/// i^t_s: f -> X^t f, from V_{s-t} to V_s.
template <class C>
SymPoly<C> include_i(int t, int s, const SymPoly<C>& f) {
  if (t < 0 || t > s || f.degree() != s - t)
    throw DegreeMismatch("include_i: expected degree " + std::to_string(s - t) + ", got " + std::to_string(f.degree()));
  SymPoly<C> out(s, f.h());
  for (const auto& [mono, c] : f.coeffs()) out.add(SymMonomial{mono.x + t, mono.y}, c);
  return out;
}

/// p^t_s in coordinates: coefficients on coset_basis(s, h, t). Empty for t = 0.
template <class C>
std::vector<C> project_p(int t, const SymPoly<C>& f, const C& zero = C()) {
  std::vector<C> out;
  for (const auto& mono : coset_basis(f.degree(), f.h(), t)) {
    const C* c = f.find(mono);
    out.push_back(c ? *c : zero);
  }
  return out;
}

/// Element of V_s / im(i^1) in the basis quotient_basis(s, h).
template <class C>
struct QuotientVector {
  int s = 0;
  std::size_t h = 0;
  std::vector<C> components;
};

template <class C>
QuotientVector<C> project_quotient(const SymPoly<C>& f, const C& zero = C()) {
  return {f.degree(), f.h(), project_p(1, f, zero)};
}

/// sigma: Y^nu + im(i^1) -> Y^nu.
template <class C>
SymPoly<C> section_sigma(const QuotientVector<C>& q) {
  const auto basis = quotient_basis(q.s, q.h);
  if (q.components.size() != basis.size())
    throw ShapeMismatch("quotient vector has " + std::to_string(q.components.size()) + " components, expected " +
                        std::to_string(basis.size()));
  SymPoly<C> out(q.s, q.h);
  for (std::size_t i = 0; i < basis.size(); ++i) out.add(basis[i], q.components[i]);
  return out;
}

}  // namespace jacobi
