#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rcurv/graph.hpp"

namespace rcurv {

struct CliOptions {
  std::optional<std::string> file;
  std::optional<std::string> family;
  bool json = false;
  double tol = 1e-8;
  std::string corpus = "standard";
  std::size_t max_lp_support = 10;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFailed = 1,
  kExitInputError = 2,
  kExitInconsistent = 3,
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

const std::vector<std::string>& command_names();

// Exactly one of --file and --family.
Graph parse_input(const CliOptions& options);

// Never throws; errors map to exit codes and a message on err.
CommandResult run_command(const std::string& command, const CliOptions& options);

// Full argument parsing, for the executable and for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rcurv
