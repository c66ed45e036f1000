#include "jacobi/nearly_holomorphic.hpp"

#include "jacobi/errors.hpp"

#include <algorithm>
#include <sstream>

namespace jacobi {

NearlyHoloElt::NearlyHoloElt(int k, int s, HalfIntSymMatrix m, long level)
    : k_(k), s_(s), m_(std::move(m)), level_(level) {
  if (s < 0) throw ShapeMismatch("value degree must be non-negative");
  if (level <= 0) throw ShapeMismatch("level must be positive");
}

NearlyHoloElt NearlyHoloElt::holomorphic(int k, HalfIntSymMatrix m, const FourierPoly& f) {
  if (f.h() != m.h()) throw ShapeMismatch("Fourier polynomial and index differ in cogenus");
  NearlyHoloElt out(k, f.value_degree(), std::move(m), f.level());
  out.add(MultiIndexPair::zero(f.h()), f);
  return out;
}

bool NearlyHoloElt::is_holomorphic() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

FourierPoly NearlyHoloElt::coefficient(const MultiIndexPair& pair) const {
  auto it = terms_.find(pair);
  if (it == terms_.end()) return FourierPoly(h(), s_, level_);
  return it->second;
}

void NearlyHoloElt::add_term(const MultiIndexPair& pair, const FourierMode& mode, const SymMonomial& mono,
                             const Rational& c) {
  if (jacobi::is_zero(c)) return;
  if (pair.nu.size() != h() || pair.r < 0 || std::any_of(pair.nu.begin(), pair.nu.end(), [](int a) { return a < 0; }))
    throw ShapeMismatch("invalid monomial alpha^nu beta^r " + pair.to_string());
  auto it = terms_.find(pair);
  if (it == terms_.end()) it = terms_.emplace(pair, FourierPoly(h(), s_, level_)).first;
  it->second.add(mode, mono, c);
  if (it->second.is_zero()) terms_.erase(it);
}

void NearlyHoloElt::add(const MultiIndexPair& pair, const FourierPoly& f) {
  if (f.h() != h() || f.value_degree() != s_ || f.level() != level_)
    throw ShapeMismatch("Fourier polynomial differs in (h, s, level)");
  for (const auto& [mode, value] : f.coeffs())
    for (const auto& [mono, c] : value.coeffs()) add_term(pair, mode, mono, c);
}

NearlyHoloElt NearlyHoloElt::relabeled(int k, int s) const {
  if (s != s_) throw ShapeMismatch("relabeling cannot change the value degree");
  NearlyHoloElt out = *this;
  out.k_ = k;
  return out;
}

void NearlyHoloElt::check_compatible(const NearlyHoloElt& other) const {
  if (other.k_ != k_ || other.s_ != s_) throw ShapeMismatch("nearly holomorphic elements of different weight");
  if (other.level_ != level_ || !(other.m_ == m_)) throw ShapeMismatch("nearly holomorphic elements of different index or level");
}

NearlyHoloElt& NearlyHoloElt::operator+=(const NearlyHoloElt& other) {
  check_compatible(other);
  other.for_each_term([&](const auto& pair, const auto& mode, const auto& mono, const auto& c) { add_term(pair, mode, mono, c); });
  return *this;
}

NearlyHoloElt& NearlyHoloElt::operator-=(const NearlyHoloElt& other) {
  check_compatible(other);
  other.for_each_term(
      [&](const auto& pair, const auto& mode, const auto& mono, const auto& c) { add_term(pair, mode, mono, Rational(-c)); });
  return *this;
}

NearlyHoloElt NearlyHoloElt::scaled(const Rational& c) const {
  NearlyHoloElt out = zero_with_weight(k_);
  if (jacobi::is_zero(c)) return out;
  for_each_term([&](const auto& pair, const auto& mode, const auto& mono, const auto& x) {
    out.add_term(pair, mode, mono, Rational(x * c));
  });
  return out;
}

bool operator==(const NearlyHoloElt& a, const NearlyHoloElt& b) {
  return a.k_ == b.k_ && a.s_ == b.s_ && a.level_ == b.level_ && a.m_ == b.m_ && a.terms_ == b.terms_;
}

std::string NearlyHoloElt::to_string() const {
  std::ostringstream os;
  os << "NH[k=" << k_ << ", s=" << s_ << "]{";
  bool first = true;
  for_each_term([&](const auto& pair, const auto& mode, const auto& mono, const auto& c) {
    os << (first ? "" : " + ") << c.get_str() << "*a^b" << pair.to_string() << "*e" << mode.to_string();
    if (s_ > 0) {
      os << "*X^" << mono.x << "Y^(";
      for (std::size_t i = 0; i < mono.y.size(); ++i) os << (i ? "," : "") << mono.y[i];
      os << ')';
    }
    first = false;
  });
  os << '}';
  return os.str();
}

NearlyHoloElt add(const NearlyHoloElt& f, const NearlyHoloElt& g) { return f + g; }

NearlyHoloElt scale(const NearlyHoloElt& f, const Rational& c) { return f.scaled(c); }

NearlyHoloElt mul_monomial(const NearlyHoloElt& f, const std::vector<int>& nu, int r) {
  if (nu.size() != f.h() || r < 0) throw ShapeMismatch("monomial exponent does not match cogenus");
  NearlyHoloElt out = f.zero_with_weight(f.k());
  f.for_each_term([&](const MultiIndexPair& pair, const auto& mode, const auto& mono, const auto& c) {
    MultiIndexPair shifted = pair;
    for (std::size_t j = 0; j < nu.size(); ++j) shifted.nu[j] += nu[j];
    shifted.r += r;
    out.add_term(shifted, mode, mono, c);
  });
  return out;
}

int total_degree(const NearlyHoloElt& f) {
  int best = kMinusInfinity;
  for (const auto& [pair, fp] : f.terms()) best = std::max(best, pair.degree());
  return best;
}

int degree_alpha(const NearlyHoloElt& f, std::size_t j) {
  int best = kMinusInfinity;
  for (const auto& [pair, fp] : f.terms()) best = std::max(best, pair.nu.at(j));
  return best;
}

int degree_beta(const NearlyHoloElt& f) {
  int best = kMinusInfinity;
  for (const auto& [pair, fp] : f.terms()) best = std::max(best, pair.r);
  return best;
}

int depth(const NearlyHoloElt& f) {
  if (f.is_zero()) return kMinusInfinity;
  int best = 0;
  f.for_each_term([&](const MultiIndexPair& pair, const auto&, const SymMonomial& mono, const auto&) {
    best = std::max(best, pair.degree() - mono.x);
  });
  return best;
}

bool satisfies_projection_depth_condition(const NearlyHoloElt& f, int d) {
  for (int t = 1; t <= f.s(); ++t) {
    int deg = kMinusInfinity;
    f.for_each_term([&](const MultiIndexPair& pair, const auto&, const SymMonomial& mono, const auto&) {
      if (mono.x < t) deg = std::max(deg, pair.degree());
    });
    if (deg != kMinusInfinity && deg >= d + t) return false;
  }
  return true;
}

NearlyHoloElt coefficient_function(const NearlyHoloElt& f, const SymMonomial& mono) {
  NearlyHoloElt out(f.k(), 0, f.index(), f.level());
  const SymMonomial one = scalar_monomial(f.h());
  f.for_each_term([&](const auto& pair, const auto& mode, const SymMonomial& m, const auto& c) {
    if (m == mono) out.add_term(pair, mode, one, c);
  });
  return out;
}

NearlyHoloElt assemble_vector_valued(int k, int s, const HalfIntSymMatrix& m, long level,
                                     const std::vector<std::pair<SymMonomial, NearlyHoloElt>>& parts) {
  NearlyHoloElt out(k, s, m, level);
  for (const auto& [mono, part] : parts) {
    if (part.s() != 0) throw ShapeMismatch("vector-valued assembly expects scalar parts");
    part.for_each_term([&](const auto& pair, const auto& mode, const auto&, const auto& c) { out.add_term(pair, mode, mono, c); });
  }
  return out;
}

}  // namespace jacobi
