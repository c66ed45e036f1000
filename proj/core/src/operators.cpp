#include "jacobi/operators.hpp"

#include "jacobi/errors.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace jacobi {

const DerivativeRules& DerivativeRules::standard() {
  static const DerivativeRules rules{};
  return rules;
}

DerivativeRules DerivativeRules::corrupted(const std::string& field) {
  DerivativeRules rules;
  if (field == "tau_alpha") rules.tau_alpha = -rules.tau_alpha;
  else if (field == "taubar_alpha") rules.taubar_alpha = -rules.taubar_alpha;
  else if (field == "z_alpha") rules.z_alpha = -rules.z_alpha;
  else if (field == "zbar_alpha") rules.zbar_alpha = -rules.zbar_alpha;
  else if (field == "tau_beta") rules.tau_beta = -rules.tau_beta;
  else if (field == "taubar_beta") rules.taubar_beta = -rules.taubar_beta;
  else if (field == "mode_scale") rules.mode_scale = -rules.mode_scale;
  else throw Error("unknown derivative rule '" + field + "'");
  return rules;
}

namespace {

void check_component(std::size_t j, const NearlyHoloElt& f) {
  if (j >= f.h()) throw ShapeMismatch("component index " + std::to_string(j) + " out of range for cogenus " + std::to_string(f.h()));
}

void check_weight(int k, const NearlyHoloElt& f, const char* op) {
  if (f.k() != k)
    throw WeightMismatch(std::string(op) + "_" + std::to_string(k) + " applied to an element of weight " + std::to_string(f.k()));
}

/// Divides every term by beta^power; a term with too small a beta exponent is an error.
NearlyHoloElt divide_by_beta(const NearlyHoloElt& f, int power) {
  NearlyHoloElt out = f.zero_with_weight(f.k());
  f.for_each_term([&](const MultiIndexPair& pair, const FourierMode& mode, const SymMonomial& mono, const Rational& c) {
    if (pair.r < power) throw InternalInvariant("negative power of beta in " + pair.to_string());
    MultiIndexPair down = pair;
    down.r -= power;
    out.add_term(down, mode, mono, c);
  });
  return out;
}

}  // namespace

NearlyHoloElt apply_partial(Partial p, std::size_t j, const NearlyHoloElt& f, const DerivativeRules& rules) {
  if (p == Partial::Z || p == Partial::ZBar) check_component(j, f);
  NearlyHoloElt out = f.zero_with_weight(f.k());
  // Leibniz rule over the factors alpha_1^{nu_1}, ..., beta^r and e(n tau + r'z).
  f.for_each_term([&](const MultiIndexPair& pair, const FourierMode& mode, const SymMonomial& mono, const Rational& c) {
    switch (p) {
      case Partial::Tau:
      case Partial::TauBar: {
        const bool hol = p == Partial::Tau;
        MultiIndexPair up = pair;
        up.r += 1;
        const Rational from_generators =
            (hol ? rules.tau_alpha : rules.taubar_alpha) * pair.nu_total() + (hol ? rules.tau_beta : rules.taubar_beta) * pair.r;
        out.add_term(up, mode, mono, Rational(c * from_generators));
        if (hol) out.add_term(pair, mode, mono, Rational(c * rules.mode_scale * mode.n));
        break;
      }
      case Partial::Z:
      case Partial::ZBar: {
        const bool hol = p == Partial::Z;
        if (pair.nu[j] > 0) {
          MultiIndexPair down = pair;
          down.nu[j] -= 1;
          down.r += 1;
          out.add_term(down, mode, mono, Rational(c * (hol ? rules.z_alpha : rules.zbar_alpha) * pair.nu[j]));
        }
        if (hol) out.add_term(pair, mode, mono, Rational(c * rules.mode_scale * mode.r[j]));
        break;
      }
    }
  });
  return out;
}

NearlyHoloElt mul_alpha(std::size_t j, const NearlyHoloElt& f) {
  check_component(j, f);
  std::vector<int> nu(f.h(), 0);
  nu[j] = 1;
  return mul_monomial(f, nu, 0);
}

NearlyHoloElt mul_beta(const NearlyHoloElt& f) { return mul_monomial(f, std::vector<int>(f.h(), 0), 1); }

NearlyHoloElt apply_R(int k, const NearlyHoloElt& f, const DerivativeRules& rules) {
  check_weight(k, f, "R");
  const auto& m = f.index();
  NearlyHoloElt out = apply_partial(Partial::Tau, 0, f, rules);
  for (std::size_t j = 0; j < f.h(); ++j) out += mul_alpha(j, apply_partial(Partial::Z, j, f, rules));
  for (std::size_t i = 0; i < f.h(); ++i) {
    const NearlyHoloElt ai = mul_alpha(i, f);
    for (std::size_t j = 0; j < f.h(); ++j)
      if (!is_zero(m(i, j))) out += mul_alpha(j, ai).scaled(Rational(m(i, j) / 2));
  }
  out -= mul_beta(f).scaled(Rational(k));
  return out.relabeled(k + 2, f.s());
}

NearlyHoloElt apply_RJ(std::size_t j, const NearlyHoloElt& f, const DerivativeRules& rules) {
  check_component(j, f);
  const auto& m = f.index();
  NearlyHoloElt out = apply_partial(Partial::Z, j, f, rules);
  for (std::size_t i = 0; i < f.h(); ++i)
    if (!is_zero(m(j, i))) out += mul_alpha(i, f).scaled(m(j, i));
  return out.relabeled(f.k() + 1, f.s());
}

NearlyHoloElt apply_RtJ(std::size_t j, const NearlyHoloElt& f, const DerivativeRules& rules) {
  check_component(j, f);
  const RationalMatrix& inv = f.index().inverse();
  NearlyHoloElt out = mul_alpha(j, f);
  for (std::size_t i = 0; i < f.h(); ++i)
    if (!is_zero(inv(j, i))) out += apply_partial(Partial::Z, i, f, rules).scaled(inv(j, i));
  return out.relabeled(f.k() + 1, f.s());
}

NearlyHoloElt apply_Delta(int k, const NearlyHoloElt& f, const DerivativeRules& rules) {
  check_weight(k, f, "Delta");
  const RationalMatrix& inv = f.index().inverse();
  const std::size_t h = f.h();
  NearlyHoloElt out = apply_partial(Partial::Tau, 0, f, rules);
  for (std::size_t j = 0; j < h; ++j) {
    const NearlyHoloElt dj = apply_partial(Partial::Z, j, f, rules);
    for (std::size_t i = 0; i < h; ++i)
      if (!is_zero(inv(i, j))) out -= apply_partial(Partial::Z, i, dj, rules).scaled(Rational(inv(i, j) / 2));
  }
  out += mul_beta(f).scaled(Rational(make_rational(static_cast<long>(h), 2) - k));
  return out.relabeled(k + 2, f.s());
}

NearlyHoloElt apply_L(const NearlyHoloElt& f) {
  NearlyHoloElt out = f.zero_with_weight(f.k() - 2);
  f.for_each_term([&](const MultiIndexPair& pair, const FourierMode& mode, const SymMonomial& mono, const Rational& c) {
    if (pair.r == 0) return;
    MultiIndexPair down = pair;
    down.r -= 1;
    out.add_term(down, mode, mono, Rational(-c * pair.r));
  });
  return out;
}

NearlyHoloElt apply_LJ(std::size_t j, const NearlyHoloElt& f) {
  check_component(j, f);
  NearlyHoloElt out = f.zero_with_weight(f.k() - 1);
  f.for_each_term([&](const MultiIndexPair& pair, const FourierMode& mode, const SymMonomial& mono, const Rational& c) {
    if (pair.nu[j] == 0) return;
    MultiIndexPair down = pair;
    down.nu[j] -= 1;
    out.add_term(down, mode, mono, Rational(c * pair.nu[j]));
  });
  return out;
}

NearlyHoloElt apply_L_from_definition(const NearlyHoloElt& f, const DerivativeRules& rules) {
  NearlyHoloElt inner = apply_partial(Partial::TauBar, 0, f, rules);
  for (std::size_t j = 0; j < f.h(); ++j) inner += mul_alpha(j, apply_partial(Partial::ZBar, j, f, rules));
  return divide_by_beta(inner, 2).relabeled(f.k() - 2, f.s());
}

NearlyHoloElt apply_LJ_from_definition(std::size_t j, const NearlyHoloElt& f, const DerivativeRules& rules) {
  check_component(j, f);
  return divide_by_beta(apply_partial(Partial::ZBar, j, f, rules), 1).relabeled(f.k() - 1, f.s());
}

int Generator::weight_shift() const {
  switch (kind) {
    case Kind::R:
    case Kind::Delta:
      return 2;
    case Kind::RJ:
    case Kind::RtJ:
      return 1;
    case Kind::L:
      return -2;
    case Kind::LJ:
      return -1;
    default:
      return 0;
  }
}

std::string Generator::name() const {
  const std::string idx = std::to_string(j + 1);
  const std::string wt = weight ? std::to_string(*weight) : std::string("k");
  switch (kind) {
    case Kind::DTau: return "d_tau";
    case Kind::DTauBar: return "d_taubar";
    case Kind::DZ: return "d_z" + idx;
    case Kind::DZBar: return "d_zbar" + idx;
    case Kind::R: return "R_" + wt;
    case Kind::RJ: return "RJ_" + idx;
    case Kind::L: return "L";
    case Kind::LJ: return "LJ_" + idx;
    case Kind::Delta: return "D~_" + wt;
    case Kind::RtJ: return "R~J_" + idx;
    case Kind::MulAlpha: return "alpha_" + idx;
    case Kind::MulBeta: return "beta";
    case Kind::MulScalar: return "(" + scalar.get_str() + ")";
  }
  return "?";
}

NearlyHoloElt apply_generator(const Generator& g, const NearlyHoloElt& f, const DerivativeRules& rules) {
  using Kind = Generator::Kind;
  switch (g.kind) {
    case Kind::DTau: return apply_partial(Partial::Tau, 0, f, rules);
    case Kind::DTauBar: return apply_partial(Partial::TauBar, 0, f, rules);
    case Kind::DZ: return apply_partial(Partial::Z, g.j, f, rules);
    case Kind::DZBar: return apply_partial(Partial::ZBar, g.j, f, rules);
    case Kind::R: return apply_R(g.weight.value_or(f.k()), f, rules);
    case Kind::RJ: return apply_RJ(g.j, f, rules);
    case Kind::L: return apply_L(f);
    case Kind::LJ: return apply_LJ(g.j, f);
    case Kind::Delta: return apply_Delta(g.weight.value_or(f.k()), f, rules);
    case Kind::RtJ:
      if (g.weight) check_weight(*g.weight, f, "R~J");
      return apply_RtJ(g.j, f, rules);
    case Kind::MulAlpha: return mul_alpha(g.j, f);
    case Kind::MulBeta: return mul_beta(f);
    case Kind::MulScalar: return f.scaled(g.scalar);
  }
  throw InternalInvariant("unknown generator");
}

OperatorExpr OperatorExpr::after(const OperatorExpr& inner) const {
  if (!(inner.m_ == m_)) throw ShapeMismatch("composing operators for different indices");
  std::vector<Generator> word = inner.word_;
  word.insert(word.end(), word_.begin(), word_.end());
  return OperatorExpr(m_, std::move(word));
}

int OperatorExpr::output_weight(int k) const {
  for (const auto& g : word_) {
    if (g.weight && *g.weight != k)
      throw WeightMismatch(g.name() + " expects weight " + std::to_string(*g.weight) + " but receives " + std::to_string(k));
    k += g.weight_shift();
  }
  return k;
}

NearlyHoloElt OperatorExpr::apply(const NearlyHoloElt& f, const DerivativeRules& rules) const {
  if (!(f.index() == m_)) throw ShapeMismatch("operator and element have different Jacobi indices");
  NearlyHoloElt out = f;
  for (const auto& g : word_) out = apply_generator(g, out, rules);
  return out;
}

std::string OperatorExpr::to_string() const {
  if (word_.empty()) return "id";
  std::string out;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) out += (out.empty() ? "" : " o ") + it->name();
  return out;
}

OperatorExpr compose_Rhat(const std::vector<int>& nu, int r, int k, const HalfIntSymMatrix& m) {
  if (!m.is_invertible()) throw SingularIndex("R^ needs an invertible index");
  if (nu.size() != m.h() || r < 0) throw ShapeMismatch("multi-index does not match cogenus");
  const MultiIndexPair pair{nu, r};
  int w = k - pair.degree();
  std::vector<Generator> word;
  for (int q = 0; q < r; ++q, w += 2) word.push_back(Generator::heat(w));
  for (std::size_t j = m.h(); j-- > 0;)
    for (int a = 0; a < nu[j]; ++a, ++w) word.push_back(Generator::raise_tilde_j(j, w));
  return OperatorExpr(m, std::move(word));
}

OperatorExpr compose_Lhat(const std::vector<int>& nu, int r, const HalfIntSymMatrix& m) {
  if (nu.size() != m.h() || r < 0) throw ShapeMismatch("multi-index does not match cogenus");
  std::vector<Generator> word;
  for (std::size_t j = 0; j < m.h(); ++j)
    for (int a = 0; a < nu[j]; ++a) word.push_back(Generator::lower_j(j));
  for (int q = 0; q < r; ++q) word.push_back(Generator::lower());
  return OperatorExpr(m, std::move(word));
}

NearlyHoloElt OperatorSum::apply(const NearlyHoloElt& f, int output_weight, const DerivativeRules& rules) const {
  NearlyHoloElt out = f.zero_with_weight(output_weight);
  for (const auto& [c, w] : terms) out += w.apply(f, rules).scaled(c);
  const Rational scalar = weight_coefficient * f.k() + constant;
  if (!is_zero(scalar)) out += f.relabeled(output_weight, f.s()).scaled(scalar);
  return out;
}

CommutatorReport commutator_check(const std::string& name, const OperatorExpr& a, const OperatorExpr& b,
                                  const OperatorSum& expected, const std::vector<NearlyHoloElt>& testset,
                                  const DerivativeRules& rules) {
  CommutatorReport report;
  report.name = name;
  for (const auto& f : testset) {
    ++report.checked;
    try {
      const NearlyHoloElt lhs = a.apply(b.apply(f, rules), rules) - b.apply(a.apply(f, rules), rules);
      const NearlyHoloElt rhs = expected.apply(f, lhs.k(), rules);
      if (!(lhs == rhs)) {
        report.passed = false;
        report.counterexample = "[" + a.to_string() + ", " + b.to_string() + "] on " + f.to_string() +
                                ": got " + lhs.to_string() + ", expected " + rhs.to_string();
        return report;
      }
    } catch (const Error& e) {
      report.passed = false;
      report.counterexample = "[" + a.to_string() + ", " + b.to_string() + "] on " + f.to_string() + ": " + e.what();
      return report;
    }
  }
  return report;
}

std::vector<CommutatorRelation> commutator_table(const HalfIntSymMatrix& m) {
  using G = Generator;
  const std::size_t h = m.h();
  auto op = [&](G g) { return OperatorExpr::single(m, std::move(g)); };
  auto scalar_sum = [](Rational constant, Rational weight_coefficient = 0) {
    OperatorSum s;
    s.constant = std::move(constant);
    s.weight_coefficient = std::move(weight_coefficient);
    return s;
  };
  auto operator_sum = [](OperatorExpr w) {
    OperatorSum s;
    s.terms.emplace_back(Rational(1), std::move(w));
    return s;
  };

  std::vector<CommutatorRelation> table;
  CommutatorRelation ll{"[LJ_i, LJ_j] = 0", {}}, rr{"[RJ_i, RJ_j] = 0", {}}, lr{"[L, R_k] = k", {}}, lrj{"[L, RJ_j] = LJ_j", {}},
      ljr{"[LJ_j, R_k] = RJ_j", {}}, ljrj{"[LJ_i, RJ_j] = m_ij", {}};
  lr.instances.emplace_back(op(G::lower()), op(G::raise()), scalar_sum(0, 1));
  for (std::size_t j = 0; j < h; ++j) {
    lrj.instances.emplace_back(op(G::lower()), op(G::raise_j(j)), operator_sum(op(G::lower_j(j))));
    ljr.instances.emplace_back(op(G::lower_j(j)), op(G::raise()), operator_sum(op(G::raise_j(j))));
    for (std::size_t i = 0; i < h; ++i) {
      ll.instances.emplace_back(op(G::lower_j(i)), op(G::lower_j(j)), scalar_sum(0));
      rr.instances.emplace_back(op(G::raise_j(i)), op(G::raise_j(j)), scalar_sum(0));
      ljrj.instances.emplace_back(op(G::lower_j(i)), op(G::raise_j(j)), scalar_sum(m(i, j)));
    }
  }
  table.push_back(std::move(ll));
  table.push_back(std::move(rr));
  table.push_back(std::move(lr));
  table.push_back(std::move(lrj));
  table.push_back(std::move(ljr));
  table.push_back(std::move(ljrj));
  if (!m.is_invertible()) return table;

  const RationalMatrix& inv = m.inverse();
  CommutatorRelation ld{"[L, D~_k] = k - h/2 - RJ' m^-1 LJ", {}}, rrt{"[RJ_i, R~J_j] = 0", {}}, lrt{"[LJ_i, R~J_j] = delta_ij", {}};
  OperatorSum heat_rhs = scalar_sum(-make_rational(static_cast<long>(h), 2), 1);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j)
      if (!is_zero(inv(i, j)))
        heat_rhs.terms.emplace_back(Rational(-inv(i, j)), OperatorExpr(m, {G::lower_j(j), G::raise_j(i)}));
  ld.instances.emplace_back(op(G::lower()), op(G::heat()), std::move(heat_rhs));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      rrt.instances.emplace_back(op(G::raise_j(i)), op(G::raise_tilde_j(j)), scalar_sum(0));
      lrt.instances.emplace_back(op(G::lower_j(i)), op(G::raise_tilde_j(j)), scalar_sum(i == j ? 1 : 0));
    }
  table.push_back(std::move(ld));
  table.push_back(std::move(rrt));
  table.push_back(std::move(lrt));
  return table;
}

std::vector<CommutatorReport> run_commutator_table(const HalfIntSymMatrix& m, const std::vector<NearlyHoloElt>& testset,
                                                   const DerivativeRules& rules) {
  std::vector<CommutatorReport> reports;
  for (const auto& relation : commutator_table(m)) {
    CommutatorReport total;
    total.name = relation.name;
    for (const auto& [a, b, expected] : relation.instances) {
      const CommutatorReport one = commutator_check(relation.name, a, b, expected, testset, rules);
      total.checked += one.checked;
      if (!one.passed && total.passed) {
        total.passed = false;
        total.counterexample = one.counterexample;
      }
    }
    reports.push_back(std::move(total));
  }
  return reports;
}

std::vector<NearlyHoloElt> monomial_family(int k, const HalfIntSymMatrix& m, int max_degree,
                                           const std::vector<FourierMode>& modes, long level) {
  std::vector<NearlyHoloElt> out;
  const SymMonomial one = scalar_monomial(m.h());
  for (const auto& pair : enumerate_pairs_up_to(max_degree, m.h()))
    for (const auto& mode : modes) {
      NearlyHoloElt f(k, 0, m, level);
      f.add_term(pair, mode, one, Rational(1));
      out.push_back(std::move(f));
    }
  return out;
}

Rational lr_constant_probe(const std::vector<int>& nu, int r, int k, const HalfIntSymMatrix& m) {
  const std::size_t h = m.h();
  const int w = k - MultiIndexPair{nu, r}.degree();
  const OperatorExpr rhat = compose_Rhat(nu, r, k, m);
  const OperatorExpr lhat = compose_Lhat(nu, r, m);

  const FourierMode zero_mode = FourierMode::zero(h);
  FourierMode other{Rational(2), std::vector<long>(h, 0)};
  for (std::size_t i = 0; i < h; ++i) other.r[i] = (i % 2 == 0) ? 1 : -1;

  const NearlyHoloElt constant = NearlyHoloElt::holomorphic(w, m, FourierPoly::scalar_mode(h, zero_mode, Rational(1)));
  const NearlyHoloElt image = lhat.apply(rhat.apply(constant));
  const Rational c = image.holomorphic_part().scalar_at(zero_mode);
  if (!(image == constant.scaled(c)))
    throw InternalInvariant("L^ o R^ for " + MultiIndexPair{nu, r}.to_string() + " is not scalar on the constant probe");

  const NearlyHoloElt wave = NearlyHoloElt::holomorphic(w, m, FourierPoly::scalar_mode(h, other, Rational(1)));
  if (!(lhat.apply(rhat.apply(wave)) == wave.scaled(c)))
    throw InternalInvariant("L^ o R^ for " + MultiIndexPair{nu, r}.to_string() + " differs between probes");
  return c;
}

Rational lr_constant_recursion(const std::vector<int>& nu, int r, int k, std::size_t h) {
  Rational c(multi_factorial(nu));
  const int top = k - MultiIndexPair{nu, 0}.degree();
  const Rational half_h = make_rational(static_cast<long>(h), 2);
  for (int p = 0; p < r; ++p) {
    Rational sum = 0;
    for (int q = 1; q <= r - p; ++q) sum += top - 2 * p - 2 * q - half_h;
    c *= sum;
  }
  return c;
}

Rational lr_constant(const std::vector<int>& nu, int r, int k, const HalfIntSymMatrix& m) {
  const int d = MultiIndexPair{nu, r}.degree();
  if (2 * (k - d) <= static_cast<int>(m.h()))
    throw HypothesisViolated("L^ o R^ constant for " + MultiIndexPair{nu, r}.to_string() + " at weight " +
                             std::to_string(k) + " needs k - |nu,r| > h/2");

  using Key = std::tuple<std::vector<int>, int, int, std::vector<std::vector<long>>>;
  static std::mutex mutex;
  static std::map<Key, Rational> cache;
  Key key{nu, r, k, m.twice()};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const Rational probe = lr_constant_probe(nu, r, k, m);
  const Rational formula = lr_constant_recursion(nu, r, k, m.h());
  if (probe != formula)
    throw InternalInvariant("L^ o R^ constant for " + MultiIndexPair{nu, r}.to_string() + ": probe gives " +
                            probe.get_str() + ", recursion gives " + formula.get_str());
  if (sgn(probe) <= 0) throw InternalInvariant("non-positive L^ o R^ constant under the hypothesis");
  std::lock_guard lock(mutex);
  cache.emplace(std::move(key), probe);
  return probe;
}

}  // namespace jacobi
