#include "jacobi_cli/commands.hpp"

#include <jacobi/errors.hpp>
#include <jacobi/lattice.hpp>
#include <jacobi/numeric.hpp>
#include <jacobi/operators.hpp>
#include <jacobi/projection.hpp>
#include <jacobi/random.hpp>
#include <jacobi/serialize.hpp>
#include <jacobi/splitting.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace jacobi::cli {

namespace {

HalfIntSymMatrix load_or_draw_index(const RunConfig& config, Rng& rng) {
  if (!config.index_file.empty()) return deserialize_index(read_text_file(config.index_file));
  return random_index(static_cast<std::size_t>(config.h), rng);
}

void emit(const RunConfig& config, std::ostream& out, const std::string& document) {
  if (config.out.empty()) {
    out << document;
  } else {
    write_text_file(config.out, document);
    out << "wrote " << config.out << '\n';
  }
}

std::vector<FourierMode> unit_modes(std::size_t h) {
  std::vector<FourierMode> modes{FourierMode::zero(h)};
  for (std::size_t j = 0; j < h; ++j) {
    FourierMode mode{Rational(1), std::vector<long>(h, 0)};
    mode.r[j] = 1;
    modes.push_back(std::move(mode));
  }
  return modes;
}

HalfIntSymMatrix different_index(const HalfIntSymMatrix& m, Rng& rng) {
  for (;;) {
    HalfIntSymMatrix other = random_index(m.h(), rng);
    if (!(other == m)) return other;
  }
}

/// Scalar round trip in both directions; returns an empty string on success.
std::string scalar_roundtrip(const RunConfig& config, Rng& rng) {
  const std::size_t h = static_cast<std::size_t>(config.h);
  const int d = config.d.value_or(2);
  const int k = config.k.value_or(d + config.h + 1);
  const HalfIntSymMatrix m = random_index(h, rng);
  const NearlyHoloElt f = random_nearly_holomorphic(k, m, d, rng, {}, config.level);
  NHDecomposition c = nh_decompose(f, d);
  if (config.mutate_index) c.m = different_index(m, rng);
  const NearlyHoloElt back = nh_assemble(c);
  back.check_compatible(f);
  if (!(back == f)) return "nh_assemble(nh_decompose(f)) != f";

  NHDecomposition random_components(k, m, d, config.level);
  for (auto& [pair, g] : random_components.components) g = random_fourier_poly(m, 0, rng, {}, config.level);
  if (!(nh_decompose(nh_assemble(random_components), d).components == random_components.components))
    return "nh_decompose(nh_assemble(c)) != c";
  return {};
}

std::string vector_roundtrip(const RunConfig& config, Rng& rng) {
  const std::size_t h = static_cast<std::size_t>(config.h);
  const int k = config.k.value_or(config.s + config.h + 1);
  const HalfIntSymMatrix m = random_index(h, rng);
  ComponentTuple t(k, config.s, m, config.level);
  for (auto& level : t.parts)
    for (auto& part : level) part = random_fourier_poly(m, 0, rng, {}, config.level);
  const NearlyHoloElt phi = vv_assemble(t);
  ComponentTuple back = vv_decompose(phi);
  if (config.mutate_index) back.m = different_index(m, rng);
  const NearlyHoloElt again = vv_assemble(back);
  again.check_compatible(phi);
  if (!(back == t)) return "vv_decompose(vv_assemble(t)) != t";

  const NearlyHoloElt psi = NearlyHoloElt::holomorphic(k, m, random_fourier_poly(m, config.s, rng, {}, config.level));
  if (!(vv_assemble(vv_decompose(psi)) == psi)) return "vv_assemble(vv_decompose(phi)) != phi";
  return {};
}

std::vector<GroupElement> standard_elements(std::size_t h) {
  std::vector<GroupElement> out{GroupElement::T(h), GroupElement::S(h)};
  for (std::size_t j = 0; j < h; ++j) {
    std::vector<long> unit(h, 0), zero(h, 0);
    unit[j] = 1;
    out.push_back(GroupElement::translation(unit, zero));
    out.push_back(GroupElement::translation(zero, unit));
    std::vector<std::vector<long>> kappa(h, std::vector<long>(h, 0));
    kappa[j][j] = 1;
    out.push_back(GroupElement::heisenberg(kappa));
  }
  if (h >= 2) {
    std::vector<std::vector<long>> kappa(h, std::vector<long>(h, 0));
    kappa[0][1] = kappa[1][0] = 1;
    out.push_back(GroupElement::heisenberg(kappa));
  }
  return out;
}

bool report_slash(std::ostream& out, const std::string& label, const SlashReport& r) {
  double tail = 0;
  for (const auto& p : r.points) tail = std::max(tail, p.tail_bound);
  out << (r.passed ? "PASS " : "FAIL ") << label << ' ' << r.group_element << " max_residual=" << r.max_residual
      << " tail_bound=" << tail << " tol=" << r.tol << '\n';
  if (tail > r.tol / 10) out << "  warning: truncation tail bound exceeds tol/10\n";
  return r.passed;
}

}  // namespace

std::string RunConfig::describe() const {
  std::ostringstream os;
  os << "config: command=" << command << " h=" << h << " k=" << (k ? std::to_string(*k) : "auto") << " s=" << s
     << " d=" << (d ? std::to_string(*d) : "auto") << " level=" << level << " trunc=" << trunc << " tol=" << tol
     << " seed=" << seed << " count=" << count;
  if (!in.empty()) os << " in=" << in;
  if (!out.empty()) os << " out=" << out;
  if (!index_file.empty()) os << " index-file=" << index_file;
  if (!lattice_file.empty()) os << " lattice-file=" << lattice_file;
  if (!corrupt_rule.empty()) os << " corrupt-rule=" << corrupt_rule;
  if (strict) os << " strict";
  if (heat) os << " heat";
  if (mutate_index) os << " mutate-index";
  return os.str();
}

void validate(const RunConfig& config) {
  static const char* commands[] = {"verify-commutators", "decompose", "roundtrip", "theta", "slashcheck"};
  if (std::find(std::begin(commands), std::end(commands), config.command) == std::end(commands))
    throw std::invalid_argument("unknown command '" + config.command + "'");
  if (config.h < 1) throw std::invalid_argument("--h must be at least 1");
  if (config.s < 0) throw std::invalid_argument("--s must be non-negative");
  if (config.d && *config.d < 0) throw std::invalid_argument("--d must be non-negative");
  if (config.level < 1) throw std::invalid_argument("--level must be positive");
  if (config.trunc < 0) throw std::invalid_argument("--trunc must be non-negative");
  if (!(config.tol > 0)) throw std::invalid_argument("--tol must be positive");
  if (config.count < 1) throw std::invalid_argument("--count must be positive");
  if ((config.command == "decompose" || config.command == "slashcheck") && config.in.empty())
    throw std::invalid_argument("--in is required for " + config.command);
  if (config.command == "theta" && config.lattice_file.empty() && config.h > 8)
    throw std::invalid_argument("the E8 theta series supports --h up to 8");
  if (!config.corrupt_rule.empty()) (void)DerivativeRules::corrupted(config.corrupt_rule);
}

int cmd_verify_commutators(const RunConfig& config, std::ostream& out) {
  Rng rng(config.seed);
  const HalfIntSymMatrix m = load_or_draw_index(config, rng);
  const DerivativeRules rules =
      config.corrupt_rule.empty() ? DerivativeRules::standard() : DerivativeRules::corrupted(config.corrupt_rule);
  const auto family = monomial_family(config.k.value_or(10), m, config.d.value_or(4), unit_modes(m.h()), config.level);
  out << "index m = " << m.matrix().to_string() << ", " << family.size() << " test functions\n";
  bool ok = true;
  for (const auto& report : run_commutator_table(m, family, rules)) {
    out << (report.passed ? "PASS " : "FAIL ") << report.name << " (" << report.checked << " checks)\n";
    if (!report.passed) {
      out << "  counterexample: " << report.counterexample << '\n';
      ok = false;
    }
  }
  return ok ? kSuccess : kExactFailure;
}

int cmd_decompose(const RunConfig& config, std::ostream& out) {
  const FormDocument doc = deserialize_form(read_text_file(config.in), config.strict);
  const NearlyHoloElt& f = doc.f;
  if (f.s() == 0 && (!f.is_holomorphic() || config.d)) {
    const int d = config.d.value_or(std::max(0, depth(f)));
    const NHDecomposition c = nh_decompose(f, d);
    out << "scalar decomposition k=" << c.k << " d=" << d << " h=" << c.h() << '\n';
    for (int l = 0; l <= d; ++l)
      out << "  level " << l << " weight " << c.k - l << " multiplicity " << enumerate_pairs(l, c.h()).size() << '\n';
    emit(config, out, serialize(c));
    return kSuccess;
  }
  if (!f.is_holomorphic()) throw ShapeMismatch("vector-valued decomposition expects a holomorphic input");
  const ComponentTuple t = vv_decompose(f);
  out << "vector-valued decomposition k=" << t.k << " s=" << t.s << " h=" << t.h() << '\n';
  const auto counts = t.part_counts();
  for (int l = 0; l <= t.s; ++l) out << "  level " << l << " weight " << t.k + l << " multiplicity " << counts[l] << '\n';
  for (int l = 0; l <= t.s; ++l)
    for (const auto& part : t.parts[l])
      if (!check_support(part, t.m).empty()) out << "  warning: level " << l << " part violates the support condition\n";
  emit(config, out, serialize(t));
  return kSuccess;
}

int cmd_roundtrip(const RunConfig& config, std::ostream& out) {
  int failures = 0;
  for (int i = 0; i < config.count; ++i) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
    Rng rng(seed);
    std::string problem;
    try {
      problem = config.s == 0 ? scalar_roundtrip(config, rng) : vector_roundtrip(config, rng);
    } catch (const ShapeMismatch& e) {
      problem = std::string("ShapeMismatch: ") + e.what();
    }
    if (!problem.empty()) {
      ++failures;
      out << "FAIL seed=" << seed << ": " << problem << '\n';
    }
  }
  out << (failures == 0 ? "PASS" : "FAIL") << " roundtrip " << (config.s == 0 ? "scalar" : "vector-valued") << ' '
      << config.count - failures << '/' << config.count << '\n';
  return failures == 0 ? kSuccess : kExactFailure;
}

int cmd_theta(const RunConfig& config, std::ostream& out) {
  const LatticeSpec lattice = config.lattice_file.empty() ? e8_lattice(static_cast<std::size_t>(config.h))
                                                          : deserialize_lattice(read_text_file(config.lattice_file));
  const JacobiFormData form = theta_series(lattice, config.trunc);
  const auto violations = form.support_violations();
  out << "theta series rank=" << lattice.rank() << " h=" << form.h() << " k=" << form.k << " m=" << form.m.matrix().to_string()
      << " modes=" << form.coeffs.size() << " support_violations=" << violations.size() << '\n';
  emit(config, out, serialize(form));
  return violations.empty() ? kSuccess : kExactFailure;
}

int cmd_slashcheck(const RunConfig& config, std::ostream& out) {
  const FormDocument doc = deserialize_form(read_text_file(config.in), config.strict);
  const NearlyHoloElt& f = doc.f;
  const auto points = default_points(f.h());
  bool ok = true;
  for (const auto& g : standard_elements(f.h())) ok &= report_slash(out, "slash", slash_check(f, g, points, config.tol));
  if (config.heat) {
    if (f.s() != 0) throw ShapeMismatch("--heat needs a scalar form");
    const NearlyHoloElt heat = apply_Delta(f.k(), f);
    for (const auto& g : standard_elements(f.h())) ok &= report_slash(out, "heat", slash_check(heat, g, points, config.tol));
  }
  return ok ? kSuccess : kNumericFailure;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    out << config.describe() << '\n';
    if (config.command == "verify-commutators") return cmd_verify_commutators(config, out);
    if (config.command == "decompose") return cmd_decompose(config, out);
    if (config.command == "roundtrip") return cmd_roundtrip(config, out);
    if (config.command == "theta") return cmd_theta(config, out);
    return cmd_slashcheck(config, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const HypothesisViolated& e) {
    err << "error: hypothesis violated: " << e.what() << '\n';
    return kHypothesis;
  } catch (const ParseError& e) {
    err << "error: parse error at " << e.what() << '\n';
    return kIoError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const InternalInvariant& e) {
    err << "error: internal invariant failed: " << e.what() << '\n';
    return kExactFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace jacobi::cli
