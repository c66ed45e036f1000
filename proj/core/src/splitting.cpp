#include "jacobi/splitting.hpp"

#include "jacobi/errors.hpp"

namespace jacobi {

namespace {

NearlyHoloElt lift(const FourierPoly& f, int k, const HalfIntSymMatrix& m) {
  if (f.value_degree() != 0) throw ShapeMismatch("expected a scalar Fourier polynomial");
  return NearlyHoloElt::holomorphic(k, m, f);
}

void check_section_hypothesis(std::size_t h, int k) {
  if (2 * k <= static_cast<int>(h))
    throw HypothesisViolated("vector-valued splitting needs k > h/2, got k = " + std::to_string(k) +
                             ", h = " + std::to_string(h));
}

}  // namespace

ComponentTuple::ComponentTuple(int k_, int s_, HalfIntSymMatrix m_, long level_)
    : k(k_), s(s_), m(std::move(m_)), level(level_) {
  if (s < 0) throw ShapeMismatch("value degree must be non-negative");
  for (int l = 0; l <= s; ++l)
    parts.emplace_back(static_cast<std::size_t>(multiplicity_mu(s - l, m.h())), FourierPoly(m.h(), 0, level));
}

std::vector<std::size_t> ComponentTuple::part_counts() const {
  std::vector<std::size_t> out;
  for (const auto& p : parts) out.push_back(p.size());
  return out;
}

NearlyHoloElt include_x(const NearlyHoloElt& g) {
  NearlyHoloElt out(g.k() - 1, g.s() + 1, g.index(), g.level());
  g.for_each_term([&](const MultiIndexPair& pair, const FourierMode& mode, const SymMonomial& mono, const Rational& c) {
    SymMonomial up = mono;
    up.x += 1;
    out.add_term(pair, mode, up, c);
  });
  return out;
}

std::vector<NearlyHoloElt> p1_push(const NearlyHoloElt& g) {
  std::vector<NearlyHoloElt> out;
  for (const auto& mono : quotient_basis(g.s(), g.h())) out.push_back(coefficient_function(g, mono));
  return out;
}

NearlyHoloElt sigma_tilde(const std::vector<NearlyHoloElt>& components, int k, int s, const HalfIntSymMatrix& m) {
  const std::vector<SymMonomial> basis = quotient_basis(s, m.h());
  if (components.size() != basis.size())
    throw ShapeMismatch("sigma~ expects " + std::to_string(basis.size()) + " components, got " + std::to_string(components.size()));
  const std::size_t h = m.h();
  long level = components.empty() ? 1 : components.front().level();
  NearlyHoloElt out(k, s, m, level);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const NearlyHoloElt& f = components[b];
    if (f.s() != 0 || f.k() != k || !(f.index() == m) || f.level() != level)
      throw ShapeMismatch("sigma~ component " + std::to_string(b) + " does not match (k, m, level)");
    const std::vector<int>& nu = basis[b].y;
    // prod_j (Y_j - alpha_j X)^{nu_j} = sum_a prod_j binom(nu_j, a_j) (-alpha_j)^{a_j} X^{a_j} Y_j^{nu_j - a_j}.
    std::vector<int> a(h, 0);
    while (true) {
      Integer weight = 1;
      int total = 0;
      SymMonomial mono{0, nu};
      for (std::size_t j = 0; j < h; ++j) {
        weight *= binomial(nu[j], a[j]);
        total += a[j];
        mono.y[j] -= a[j];
      }
      mono.x = total;
      const Rational coeff(total % 2 == 0 ? weight : Integer(-weight));
      f.for_each_term([&](const MultiIndexPair& pair, const FourierMode& mode, const SymMonomial&, const Rational& c) {
        MultiIndexPair shifted = pair;
        for (std::size_t j = 0; j < h; ++j) shifted.nu[j] += a[j];
        out.add_term(shifted, mode, mono, Rational(c * coeff));
      });
      std::size_t j = 0;
      while (j < h && a[j] == nu[j]) a[j++] = 0;
      if (j == h) break;
      ++a[j];
    }
  }
  return out;
}

NearlyHoloElt upper_retract(const NearlyHoloElt& g) {
  if (g.s() == 0) throw ShapeMismatch("upper retract needs s >= 1");
  const NearlyHoloElt diff = g - sigma_tilde(p1_push(g), g.k(), g.s(), g.index());
  NearlyHoloElt out(g.k() + 1, g.s() - 1, g.index(), g.level());
  diff.for_each_term([&](const MultiIndexPair& pair, const FourierMode& mode, const SymMonomial& mono, const Rational& c) {
    if (mono.x == 0) throw InternalInvariant("g - sigma~(p1 g) has a term without X at " + pair.to_string());
    SymMonomial down = mono;
    down.x -= 1;
    out.add_term(pair, mode, down, c);
  });
  return out;
}

NearlyHoloElt nh_retract(const NearlyHoloElt& g, int d) {
  if (g.s() == 0) return lift(holomorphic_part(g, d), g.k(), g.index());
  if (!g.index().is_invertible()) throw SingularIndex("retract needs an invertible index");
  check_projection_hypothesis(g.h(), g.k(), d);
  std::vector<FourierPoly> chi;
  for (const auto& part : p1_push(g)) chi.push_back(holomorphic_part(part, d));
  return include_x(nh_retract(upper_retract(g), d + 1)) + holo_section(chi, g.k(), g.s(), g.index());
}

NearlyHoloElt holo_section(const std::vector<FourierPoly>& chi, int k, int s, const HalfIntSymMatrix& m) {
  const std::vector<SymMonomial> basis = quotient_basis(s, m.h());
  if (chi.size() != basis.size())
    throw ShapeMismatch("holomorphic section expects " + std::to_string(basis.size()) + " parts, got " + std::to_string(chi.size()));
  if (!m.is_invertible()) throw SingularIndex("holomorphic section needs an invertible index");
  check_section_hypothesis(m.h(), k);
  const long level = chi.empty() ? 1 : chi.front().level();
  NearlyHoloElt lifted(k, s, m, level);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (chi[b].value_degree() != 0 || chi[b].h() != m.h() || chi[b].level() != level)
      throw ShapeMismatch("holomorphic section part " + std::to_string(b) + " has the wrong shape");
    for (const auto& [mode, value] : chi[b].coeffs())
      for (const auto& [mono, c] : value.coeffs()) lifted.add_term(MultiIndexPair::zero(m.h()), mode, basis[b], c);
  }
  if (s == 0) return lifted;
  return lifted - include_x(holo_retract(lifted));
}

NearlyHoloElt holo_retract(const NearlyHoloElt& phi) {
  if (phi.s() == 0) throw ShapeMismatch("holomorphic retract needs s >= 1");
  if (!phi.is_holomorphic()) throw ShapeMismatch("holomorphic retract expects a holomorphic function");
  check_section_hypothesis(phi.h(), phi.k());
  return nh_retract(upper_retract(phi), 1);
}

ComponentTuple vv_decompose(const NearlyHoloElt& phi) {
  if (!phi.is_holomorphic()) throw ShapeMismatch("vv_decompose expects a holomorphic function");
  if (!phi.index().is_invertible()) throw SingularIndex("decomposition needs an invertible index");
  check_section_hypothesis(phi.h(), phi.k());
  ComponentTuple out(phi.k(), phi.s(), phi.index(), phi.level());
  NearlyHoloElt current = phi;
  for (int j = 0; j < phi.s(); ++j) {
    const std::vector<NearlyHoloElt> chi = p1_push(current);
    for (std::size_t b = 0; b < chi.size(); ++b) out.parts[j][b] = chi[b].holomorphic_part();
    current = holo_retract(current);
  }
  out.parts[phi.s()][0] = current.holomorphic_part();
  return out;
}

NearlyHoloElt vv_assemble(const ComponentTuple& t) {
  if (t.parts.size() != static_cast<std::size_t>(t.s + 1)) throw ShapeMismatch("component tuple has the wrong number of levels");
  for (int l = 0; l <= t.s; ++l)
    if (t.parts[l].size() != static_cast<std::size_t>(multiplicity_mu(t.s - l, t.h())))
      throw ShapeMismatch("level " + std::to_string(l) + " has the wrong number of parts");
  if (!t.m.is_invertible()) throw SingularIndex("assembly needs an invertible index");
  check_section_hypothesis(t.h(), t.k);
  NearlyHoloElt out = lift(t.parts[t.s][0], t.k + t.s, t.m);
  for (int j = t.s - 1; j >= 0; --j) out = include_x(out) + holo_section(t.parts[j], t.k + j, t.s - j, t.m);
  return out;
}

}  // namespace jacobi
