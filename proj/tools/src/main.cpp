#include "jacobi_cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using jacobi::cli::RunConfig;
  RunConfig config;
  CLI::App app{"Jacobi forms: Maass operators, holomorphic projection and vector-valued decomposition"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help message and exit");

  auto common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "print this help message and exit");
    sub->add_option("--h", config.h, "cogenus");
    sub->add_option("--k", config.k, "weight");
    sub->add_option("--s", config.s, "symmetric power degree");
    sub->add_option("--d", config.d, "depth bound");
    sub->add_option("--index-file", config.index_file, "JSON file with the index as {\"two_m\": [[...]]}");
    sub->add_option("--level", config.level, "level N of the Fourier exponents");
    sub->add_option("--trunc", config.trunc, "truncation bound B");
    sub->add_option("--tol", config.tol, "numeric tolerance");
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_option("--in", config.in, "input file");
    sub->add_option("--out", config.out, "output file (default: standard output)");
    sub->add_flag("--strict", config.strict, "reject inputs violating the support condition");
    sub->callback([&config, sub] { config.command = sub->get_name(); });
  };

  auto* verify = app.add_subcommand("verify-commutators", "check the commutator table exactly");
  common(verify);
  verify->add_option("--corrupt-rule", config.corrupt_rule,
                     "negate one derivative rule (tau_alpha, taubar_alpha, z_alpha, zbar_alpha, tau_beta, taubar_beta, mode_scale)");
  auto* decompose = app.add_subcommand("decompose", "decompose a form file");
  common(decompose);
  auto* roundtrip = app.add_subcommand("roundtrip", "seeded assemble/decompose round trips");
  common(roundtrip);
  roundtrip->add_option("--count", config.count, "number of consecutive seeds");
  roundtrip->add_flag("--mutate-index", config.mutate_index, "replace the index between decomposition and assembly");
  auto* theta = app.add_subcommand("theta", "theta series of E8 or a given lattice");
  common(theta);
  theta->add_option("--lattice-file", config.lattice_file, "JSON file {\"gram\": [[...]], \"vectors\": [[...]]}");
  auto* slash = app.add_subcommand("slashcheck", "numeric covariance under standard group elements");
  common(slash);
  slash->add_flag("--heat", config.heat, "also check covariance of the heat operator image");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : jacobi::cli::kConfigError;
  }
  return jacobi::cli::run(config, std::cout, std::cerr);
}
