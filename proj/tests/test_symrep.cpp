#include "doctest.h"
#include "support.hpp"

#include "jacobi/errors.hpp"
#include "jacobi/sympoly.hpp"

using namespace testing;

namespace {

using Poly = SymPoly<Rational>;

SymMonomial mono(int x, std::vector<int> y) { return SymMonomial{x, std::move(y)}; }

Poly random_poly(int s, std::size_t h, Rng& rng) {
  Poly f(s, h);
  for (int x = 0; x <= s; ++x)
    for (const auto& nu : compositions(s - x, h))
      if (rng() % 3 != 0) f.add(mono(x, nu), random_rational(rng));
  return f;
}

std::vector<Rational> random_vector(std::size_t h, Rng& rng) {
  std::vector<Rational> v;
  for (std::size_t j = 0; j < h; ++j) v.push_back(random_rational(rng));
  return v;
}

Poly act(const Rational& r, const std::vector<Rational>& v, const Poly& f) {
  return aff_act<Rational, Rational>(r, std::span<const Rational>(v), f);
}

}  // namespace

TEST_SUITE("symrep") {

TEST_CASE("coset bases") {
  CHECK(quotient_basis(2, 2) == std::vector<SymMonomial>{mono(0, {2, 0}), mono(0, {1, 1}), mono(0, {0, 2})});
  CHECK(coset_basis(2, 1, 2) == std::vector<SymMonomial>{mono(1, {1}), mono(0, {2})});
  CHECK(coset_basis(3, 2, 0).empty());
  for (int s = 0; s <= 4; ++s)
    for (std::size_t h = 1; h <= 3; ++h) CHECK(quotient_basis(s, h).size() == std::size_t(multiplicity_mu(s, h)));
}

TEST_CASE("aff_act examples") {
  Rng rng(3);
  const auto f = random_poly(3, 2, rng);
  CHECK(act(q(1), {q(0), q(0)}, f) == f);
  CHECK(act(q(3), {q(5), q(-1)}, Poly::monomial(3, 2, mono(3, {0, 0}), q(1))) ==
        Poly::monomial(3, 2, mono(3, {0, 0}), q(27)));
  Poly expected(1, 1);
  expected.add(mono(1, {0}), q(3));
  expected.add(mono(0, {1}), q(1));
  CHECK(act(q(2), {q(3)}, Poly::monomial(1, 1, mono(0, {1}), q(1))) == expected);
  CHECK_THROWS_AS(act(q(0), {q(1)}, Poly::monomial(1, 1, mono(0, {1}), q(1))), ZeroScale);
}

TEST_CASE("aff_act is a group action") {
  Rng rng(17);
  for (std::size_t h = 1; h <= 3; ++h) {
    for (int s = 0; s <= 4; ++s) {
      const auto f = random_poly(s, h, rng);
      const Rational r1 = random_rational(rng), r2 = random_rational(rng);
      const auto v1 = random_vector(h, rng), v2 = random_vector(h, rng);
      // f(r2 X, v2 X + Y) then (r1, v1) equals (r1 r2, r1 v2 + v1).
      std::vector<Rational> v(h);
      for (std::size_t j = 0; j < h; ++j) v[j] = r1 * v2[j] + v1[j];
      CHECK(act(r1, v1, act(r2, v2, f)) == act(r1 * r2, v, f));
    }
  }
}

TEST_CASE("include_i examples") {
  Rng rng(2);
  const auto f = random_poly(2, 2, rng);
  CHECK(include_i(0, 2, f) == f);
  CHECK(include_i(1, 2, Poly::monomial(1, 1, mono(0, {1}), q(1))) == Poly::monomial(2, 1, mono(1, {1}), q(1)));
  CHECK(include_i(2, 2, Poly::monomial(0, 1, mono(0, {0}), q(7))) == Poly::monomial(2, 1, mono(2, {0}), q(7)));
  CHECK_THROWS_AS(include_i(2, 3, f), DegreeMismatch);
  CHECK_THROWS_AS(include_i(3, 2, f), DegreeMismatch);
}

TEST_CASE("project_p examples") {
  Poly f(2, 1);
  f.add(mono(2, {0}), q(2));
  f.add(mono(1, {1}), q(3));
  f.add(mono(0, {2}), q(5));
  CHECK(project_p(1, f) == std::vector<Rational>{q(5)});
  CHECK(project_p(2, f) == std::vector<Rational>{q(3), q(5)});
  CHECK(project_p(0, f).empty());
}

TEST_CASE("section_sigma examples") {
  QuotientVector<Rational> e{2, 2, {q(0), q(1), q(0)}};
  CHECK(section_sigma(e) == Poly::monomial(2, 2, mono(0, {1, 1}), q(1)));
  CHECK(section_sigma(QuotientVector<Rational>{2, 2, {q(0), q(0), q(0)}}).is_zero());
  Poly all(2, 2);
  for (const auto& nu : compositions(2, 2)) all.add(mono(0, nu), q(1));
  CHECK(section_sigma(QuotientVector<Rational>{2, 2, {q(1), q(1), q(1)}}) == all);
  CHECK_THROWS_AS(section_sigma(QuotientVector<Rational>{2, 2, {q(1)}}), ShapeMismatch);
}

TEST_CASE("p1 kills the inclusion and inverts the section") {
  Rng rng(23);
  for (int s = 1; s <= 5; ++s) {
    for (std::size_t h = 1; h <= 5; ++h) {
      const auto g = random_poly(s - 1, h, rng);
      for (const auto& c : project_p(1, include_i(1, s, g))) CHECK(is_zero(c));
      QuotientVector<Rational> qv{s, h, {}};
      for (std::size_t i = 0; i < std::size_t(multiplicity_mu(s, h)); ++i) qv.components.push_back(random_rational(rng));
      CHECK(project_quotient(section_sigma(qv)).components == qv.components);
    }
  }
}

TEST_CASE("the inclusion is equivariant up to r^t") {
  Rng rng(29);
  for (std::size_t h = 1; h <= 3; ++h) {
    for (int s = 0; s <= 4; ++s) {
      for (int t = 0; t <= s; ++t) {
        const auto f = random_poly(s - t, h, rng);
        const Rational r = random_rational(rng);
        const auto v = random_vector(h, rng);
        Rational rt(1);
        for (int i = 0; i < t; ++i) rt *= r;
        CHECK(act(r, v, include_i(t, s, f)) == include_i(t, s, act(r, v, f)).scaled(rt));
      }
    }
  }
}

TEST_CASE("the affine action is trivial on the quotient by X") {
  Rng rng(31);
  for (std::size_t h = 1; h <= 3; ++h) {
    for (int s = 0; s <= 4; ++s) {
      const auto f = random_poly(s, h, rng);
      const Rational r = random_rational(rng);
      const auto v = random_vector(h, rng);
      CHECK(project_p(1, act(r, v, f)) == project_p(1, f));
      // sigma intertwines: g sigma(q) - sigma(q) lies in im(i^1).
      const auto qv = project_quotient(f);
      for (const auto& c : project_p(1, act(r, v, section_sigma(qv)) - section_sigma(qv))) CHECK(is_zero(c));
    }
  }
}

TEST_CASE("rotations act on Y-monomials through the determinant character") {
  // k(theta) = [[cos, sin], [-sin, cos]] at tau = i: c tau + d = e(-theta) has modulus one and
  // the translation part vanishes at z = 0, so Y^nu is fixed and det^k contributes e(k theta).
  const double theta = 0.137;
  const int k = 5;
  const Complex r = std::polar(1.0, -2 * M_PI * theta);
  const std::vector<Complex> v(2, Complex(0));
  const auto y = SymPoly<Complex>::monomial(2, 2, mono(0, {1, 1}), Complex(1));
  const auto moved = aff_act<Complex, Complex>(r, std::span<const Complex>(v), y);
  CHECK(moved == y);
  const Complex factor = std::pow(r, -k);
  CHECK(std::abs(factor - std::polar(1.0, 2 * M_PI * k * theta)) < 1e-12);
}

}
