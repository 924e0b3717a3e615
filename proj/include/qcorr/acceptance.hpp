#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcorr::accept {

enum class Suite { ClosedForms, Props, All };

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // measured values and bounds
  double seconds = 0.0;
};

/// Runs the verification checks of the given suite. Every check pins its
/// tolerances in code and is deterministic for a fixed seed.
std::vector<CheckResult> run_acceptance(Suite suite, std::uint64_t seed = 20260801);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qcorr::accept
