#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wildauto {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // counts, and the first failing case when one exists
};

/// The full invariant suite, deterministic in (seed, trials). trials scales
/// the randomized sample counts relative to their base sizes; it never
/// shrinks a suite below its base size (trials = 1000 runs the base sizes
/// exactly). CLI selfcheck and the acceptance harness both run this.
std::vector<CheckResult> run_selfcheck(std::uint64_t seed, unsigned long trials);

}  // namespace wildauto
