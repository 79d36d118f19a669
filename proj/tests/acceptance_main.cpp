// Acceptance suite: runs every verification criterion with exact comparisons
// and prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>

#include "verify.hpp"

int main() {
  using Clock = std::chrono::steady_clock;
  auto start = Clock::now();

  auto results = tropgw::verify::run_all_criteria();
  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%s] criterion %s: %s (%s)\n", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                r.description.c_str(), r.detail.c_str());
    failures += !r.passed;
  }

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  std::printf("%zu criteria, %d failed, %lld ms\n", results.size(), failures,
              static_cast<long long>(ms));
  return failures == 0 ? 0 : 1;
}
