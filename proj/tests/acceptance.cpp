// Acceptance gate: runs every verification suite once and prints one line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "p3wkb/verify.hpp"

using namespace p3wkb;

namespace {

struct Criterion {
  int id;
  const char* title;
  double per_check_limit;  // seconds, 0 when unbounded
  double total_limit;      // seconds, 0 when unbounded
};

const std::vector<Criterion> kCriteria{
    {1, "Voros closed forms vs numeric oracle, n = 1, 2 (rel 1e-5)", 60, 0},
    {2, "difference equations and uniqueness, exact through z^-19", 0, 1},
    {3, "F = G(2c) - G(c) exact for n <= 20; Borel duplication (1e-10)", 0, 0},
    {4, "Laplace oracle vs S- (1e-8); jump ratios (1e-10)", 0, 0},
    {5, "Stokes diagrams: curve counts, termini, degeneration verdicts", 20, 0},
    {6, "series residuals through eta^-6 (1e-9); printed R0, R1, lambda2 (1e-10)", 0, 0},
    {7, "Backlund images (1e-9)", 0, 0},
    {8, "asymptotic expansions (10|t|^-1/2); homogeneity table (1e-10)", 0, 0},
    {9, "wall placements and connection multipliers", 0, 0},
};

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_suite("all");
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool all_ok = true;
  for (const auto& c : kCriteria) {
    int checks = 0, failed = 0;
    double seconds = 0, slowest = 0;
    std::string first_failure;
    for (const auto& r : results) {
      if (r.criterion != c.id) continue;
      ++checks;
      seconds += r.seconds;
      slowest = std::max(slowest, r.seconds);
      bool ok = r.ok;
      if (c.per_check_limit > 0 && r.seconds > c.per_check_limit) ok = false;
      if (!ok && first_failure.empty())
        first_failure = r.suite + "/" + r.name + ": measured " + std::to_string(r.measured) + " vs " +
                        std::to_string(r.tolerance) + (r.detail.empty() ? "" : " (" + r.detail + ")");
      if (!ok) ++failed;
    }
    const bool time_ok = c.total_limit <= 0 || seconds <= c.total_limit;
    const bool ok = checks > 0 && failed == 0 && time_ok;
    all_ok &= ok;
    std::printf("criterion %d %s  %s  [%d checks, %.2f s total, slowest %.2f s", c.id, ok ? "PASS" : "FAIL", c.title,
                checks, seconds, slowest);
    if (c.per_check_limit > 0) std::printf(", limit %.0f s each", c.per_check_limit);
    if (c.total_limit > 0) std::printf(", limit %.0f s total", c.total_limit);
    std::printf("]\n");
    if (!first_failure.empty()) std::printf("    first failure: %s\n", first_failure.c_str());
    if (!time_ok) std::printf("    runtime limit exceeded\n");
    if (checks == 0) std::printf("    no checks ran\n");
  }

  int failed_support = 0;
  for (const auto& r : results)
    if (r.criterion == 0 && !r.ok) {
      ++failed_support;
      std::printf("    supporting check failed: %s/%s (%s)\n", r.suite.c_str(), r.name.c_str(), r.detail.c_str());
    }
  const bool total_ok = total < 300;
  std::printf("all suites: %zu checks in %.1f s (limit 300 s) %s\n", results.size(), total,
              total_ok && failed_support == 0 ? "PASS" : "FAIL");
  return all_ok && total_ok && failed_support == 0 ? 0 : 1;
}
