// Runs every verification check and prints one pass/fail line per check.
#include <cstdio>

#include "qcorr/acceptance.hpp"

int main() {
  const auto results = qcorr::accept::run_acceptance(qcorr::accept::Suite::All);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%s] %s (%.2f s)\n    %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%zu checks, %d failure(s)\n", results.size(), failures);
  return failures == 0 ? 0 : 1;
}
