#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "forestdyn/forests.hpp"

namespace forestdyn {

struct CheckOptions {
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultForestBudget;
  std::size_t corpus_order = 5;   // exhaustive scans run over all graphs up to this order
  std::size_t whitney_moves = 100;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// The check suite behind `forestdyn verify`: each entry recomputes a
// structural claim about F over explicit families or the small-graph corpus.
std::vector<CheckResult> run_checks(const CheckOptions& options = {});

}  // namespace forestdyn
