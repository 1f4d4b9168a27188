#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cobox {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 0x5eed0c0b0c5ULL;
  /// Vertex count for the large-instance timing run.
  int large_n = 100000;
};

/// Runs criteria 1 through 10 in order. Never throws for a failing
/// criterion; exceptions are caught and reported as failures.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// `[PASS] 3 threshold oracle equivalence: ... (1.23 s)`
std::string format_result(const CriterionResult& r);

/// Prints one line per criterion; returns true when all pass.
bool print_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace cobox
