// Acceptance run: one PASS/FAIL line per criterion, tolerances and time
// limits pinned below. Exit status is the number of failing criteria not
// listed through --allow-fail.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "esslab/verification.hpp"

namespace {

using namespace esslab;

constexpr double kNoLimit = std::numeric_limits<double>::infinity();

struct Criterion {
  int id;
  std::string title;
  double time_limit;
  std::function<std::vector<CheckResult>()> run;
};

std::vector<Criterion> criteria() {
  return {
      {1, "overlap closed form vs Fock oracle at dim 256", 10.0,
       [] { return std::vector{check_squeezed_overlaps(256, 1.0)}; }},
      {2, "qubit concurrence vs pure-state oracle", kNoLimit, [] { return std::vector{check_qubit_concurrence()}; }},
      {3, "minus state maximally entangled at equal labels", kNoLimit,
       [] { return std::vector{check_minus_state_maximal()}; }},
      {4, "squeezed/coherent concurrence crossover", kNoLimit, [] { return std::vector{check_fig1_crossover()}; }},
      {5, "Wigner closed forms vs displaced-parity oracle", 120.0,
       [] { return std::vector{check_wigner_oracle(), check_wigner_plane_normalization()}; }},
      {6, "Wigner peak trends", kNoLimit, [] { return std::vector{check_peak_trends()}; }},
      {7, "generation circuit end to end", kNoLimit, [] { return std::vector{check_circuit()}; }},
      {8, "qutrit concurrence vs purity oracle", kNoLimit, [] { return std::vector{check_qutrit_concurrence()}; }},
      {9, "monogamy two-path agreement and residual signs", 30.0, [] { return std::vector{check_monogamy()}; }},
      {10, "reproduce datasets byte-identical across runs", kNoLimit,
       [] { return std::vector{check_reproduce_determinism()}; }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> allowed;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::string(argv[i]) == "--allow-fail") allowed.insert(std::atoi(argv[i + 1]));
  }

  int unexpected = 0;
  for (const auto& c : criteria()) {
    const auto results = c.run();
    bool ok = true;
    double seconds = 0.0;
    for (const auto& r : results) {
      ok = ok && r.passed;
      seconds += r.seconds;
    }
    const bool in_time = seconds < c.time_limit;
    ok = ok && in_time;
    std::printf("%s criterion %d: %s (%.2fs%s)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                in_time ? "" : ", over time limit");
    for (const auto& r : results) {
      std::printf("    %s: value=%.3e tol=%.1e  %s\n", r.name.c_str(), r.value, r.tolerance, r.detail.c_str());
    }
    if (!ok) {
      if (allowed.count(c.id)) {
        std::printf("    known failure, allowed for this run\n");
      } else {
        ++unexpected;
      }
    }
  }

  // The same sweep with the default truncation, where the r = 2 tail fits.
  const auto ref = check_squeezed_overlaps(kDefaultDim);
  std::printf("INFO criterion 1 at dim %zu: %s value=%.3e (%.2fs)\n", kDefaultDim, ref.passed ? "pass" : "fail",
              ref.value, ref.seconds);
  return unexpected;
}
