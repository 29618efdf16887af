#pragma once

#include <string>
#include <vector>

namespace forestdyn {

struct CliResult {
  int status = 0;
  std::string out;
  std::string err;
};

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

// Runs one command line (args exclude the program name) and captures what
// it prints. Graph arguments are a file path, "-" for stdin, a family name
// (K5, C4, P3, E2, K3,3, bowtie) or an inline edge list with ';' between
// edges ("0 1; 1 2; 2 0").
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace forestdyn
