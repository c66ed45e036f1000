#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace jacobi::cli {

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 1,
  kHypothesis = 2,
  kExactFailure = 3,
  kNumericFailure = 4,
  kIoError = 5,
};

struct RunConfig {
  std::string command;
  std::string in;
  std::string out;
  std::string index_file;
  std::string lattice_file;
  int h = 1;
  std::optional<int> k;
  int s = 0;
  std::optional<int> d;
  long level = 1;
  long trunc = 10;
  double tol = 1e-6;
  std::uint64_t seed = 1;
  int count = 1;
  std::string corrupt_rule;
  bool strict = false;
  bool heat = false;
  bool mutate_index = false;

  /// One line "key=value ..." describing the run.
  std::string describe() const;
};

/// Throws std::invalid_argument for inconsistent flags.
void validate(const RunConfig& config);

int cmd_verify_commutators(const RunConfig& config, std::ostream& out);
int cmd_decompose(const RunConfig& config, std::ostream& out);
int cmd_roundtrip(const RunConfig& config, std::ostream& out);
int cmd_theta(const RunConfig& config, std::ostream& out);
int cmd_slashcheck(const RunConfig& config, std::ostream& out);

/// Validates, dispatches on config.command and maps library errors to exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace jacobi::cli
