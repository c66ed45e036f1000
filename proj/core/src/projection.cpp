#include "jacobi/projection.hpp"

#include "jacobi/errors.hpp"
#include "jacobi/parallel.hpp"

#include <sstream>

namespace jacobi {

namespace {

/// The restriction of f to each Fourier mode; all operators act mode by mode.
std::vector<NearlyHoloElt> split_by_mode(const NearlyHoloElt& f) {
  std::map<FourierMode, NearlyHoloElt> parts;
  f.for_each_term([&](const MultiIndexPair& pair, const FourierMode& mode, const SymMonomial& mono, const Rational& c) {
    auto it = parts.find(mode);
    if (it == parts.end()) it = parts.emplace(mode, f.zero_with_weight(f.k())).first;
    it->second.add_term(pair, mode, mono, c);
  });
  std::vector<NearlyHoloElt> out;
  out.reserve(parts.size());
  for (auto& [mode, part] : parts) out.push_back(std::move(part));
  return out;
}

NHDecomposition decompose_sequential(const NearlyHoloElt& f, int d) {
  const HalfIntSymMatrix& m = f.index();
  const int k = f.k();
  NHDecomposition out(k, m, d, f.level());
  NearlyHoloElt residue = f;
  for (int level = d; level >= 1; --level) {
    for (int q = 0; 2 * q <= level; ++q) {
      for (const auto& nu : compositions(level - 2 * q, m.h())) {
        const MultiIndexPair pair{nu, q};
        const NearlyHoloElt lowered = compose_Lhat(nu, q, m).apply(residue);
        if (!lowered.is_holomorphic())
          throw InternalInvariant("L^" + pair.to_string() + " of the residue is not holomorphic");
        if (lowered.is_zero()) continue;
        const Rational c = lr_constant(nu, q, k, m);
        const NearlyHoloElt g = lowered.scaled(Rational(1 / c));
        residue -= compose_Rhat(nu, q, k, m).apply(g);
        out.components.at(pair) = g.holomorphic_part();
      }
    }
  }
  if (!residue.is_holomorphic()) throw InternalInvariant("residue of degree > 0 after all levels: " + residue.to_string());
  out.components.at(MultiIndexPair::zero(m.h())) = residue.holomorphic_part();
  return out;
}

}  // namespace

NHDecomposition::NHDecomposition(int k_, HalfIntSymMatrix m_, int d_, long level_)
    : k(k_), m(std::move(m_)), d(d_), level(level_) {
  if (d < 0) throw ShapeMismatch("depth bound must be non-negative");
  for (const auto& pair : enumerate_pairs_up_to(d, m.h())) components.emplace(pair, FourierPoly(m.h(), 0, level));
}

std::size_t component_count(int d, std::size_t h) { return enumerate_pairs_up_to(d, h).size(); }

std::vector<NonPositiveConstant> diagnose_hypothesis(int k, int d, const HalfIntSymMatrix& m) {
  std::vector<NonPositiveConstant> out;
  for (const auto& pair : enumerate_pairs_up_to(d, m.h())) {
    if (pair.is_zero()) continue;
    const Rational formula = lr_constant_recursion(pair.nu, pair.r, k, m.h());
    if (m.is_invertible()) {
      const Rational probe = lr_constant_probe(pair.nu, pair.r, k, m);
      if (probe != formula)
        throw InternalInvariant("L^ o R^ constant for " + pair.to_string() + ": probe " + probe.get_str() +
                                ", recursion " + formula.get_str());
    }
    if (sgn(formula) <= 0) out.push_back({pair, formula});
  }
  return out;
}

void check_projection_hypothesis(std::size_t h, int k, int d) {
  if (2 * (k - d) > static_cast<int>(h)) return;
  std::ostringstream os;
  os << "holomorphic projection needs k - d > h/2, got k = " << k << ", d = " << d << ", h = " << h;
  const auto bad = diagnose_hypothesis(k, d, HalfIntSymMatrix::identity(h));
  if (bad.empty()) {
    os << "; no L^ o R^ constant is non-positive at this depth";
  } else {
    os << "; non-positive L^ o R^ constants:";
    for (const auto& b : bad) os << ' ' << b.pair.to_string() << " -> " << b.constant.get_str();
  }
  throw HypothesisViolated(os.str());
}

NHDecomposition nh_decompose(const NearlyHoloElt& f, int d) {
  if (f.s() != 0) throw ShapeMismatch("nh_decompose expects a scalar function");
  if (!f.index().is_invertible()) throw SingularIndex("holomorphic projection needs an invertible index");
  if (d < 0) throw ShapeMismatch("depth bound must be non-negative");
  check_projection_hypothesis(f.h(), f.k(), d);
  if (const int actual = depth(f); actual > d)
    throw DepthExceeded("depth " + std::to_string(actual) + " exceeds the bound " + std::to_string(d));

  const std::vector<NearlyHoloElt> parts = split_by_mode(f);
  std::vector<NHDecomposition> pieces;
  pieces.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) pieces.emplace_back(f.k(), f.index(), d, f.level());
  parallel_for(parts.size(), [&](std::size_t i) { pieces[i] = decompose_sequential(parts[i], d); });

  NHDecomposition out(f.k(), f.index(), d, f.level());
  for (const auto& piece : pieces)
    for (const auto& [pair, g] : piece.components) out.components.at(pair) += g;
  if (!(nh_assemble(out) == f)) throw InternalInvariant("decomposition does not reassemble to its input");
  return out;
}

NearlyHoloElt nh_assemble(const NHDecomposition& c) {
  if (!c.m.is_invertible()) throw SingularIndex("R^ needs an invertible index");
  NearlyHoloElt out(c.k, 0, c.m, c.level);
  for (const auto& [pair, g] : c.components) {
    if (g.h() != c.m.h() || g.value_degree() != 0 || g.level() != c.level)
      throw ShapeMismatch("component " + pair.to_string() + " has the wrong shape");
    if (pair.degree() > c.d) throw ShapeMismatch("component " + pair.to_string() + " exceeds depth " + std::to_string(c.d));
    if (g.is_zero()) continue;
    const NearlyHoloElt lifted = NearlyHoloElt::holomorphic(c.k - pair.degree(), c.m, g);
    out += compose_Rhat(pair.nu, pair.r, c.k, c.m).apply(lifted);
  }
  return out;
}

FourierPoly holomorphic_part(const NearlyHoloElt& f, int d) { return nh_decompose(f, d).holomorphic_part(); }

}  // namespace jacobi
