// Acceptance gate: one PASS/FAIL line per criterion.
//
//   acceptance            run all seven
//   acceptance 3 5        run a subset
//
// Every comparison is exact (tolerance 0: values live in Z, Z[zeta_24] or
// Z[phi]). A criterion fails when any check fails, when it runs fewer checks
// than the criterion demands, or when it exceeds its time limit. Exit status
// is nonzero if any selected criterion fails.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "knotinv/verify.hpp"

using namespace knotinv;

namespace {

constexpr double kTolerance = 0.0;  // exact arithmetic throughout

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> suites;
  std::size_t min_checks;
  double limit_seconds;
};

// min_checks: 2 = 600 matrices x 5 primes >= 500 x 5; 3 = the 84 knots with
// at most nine crossings; 4 = 35 nontrivial knots with at most eight
// crossings, two comparisons each; 5 = 1000 matrices x 5 primes x 4 checks,
// 1000 Jacobi instances, 500 x 2 Alexander checks; 6 = 200 sequences x 2;
// 7 = every box matrix and 400 random 4x4 ones.
const std::vector<Criterion> kCriteria{
    {1, "worked examples (exact goldens)", {"examples"}, 50, 1.0},
    {2, "delta_p from the definition equals the Wall-invariant closed form", {"closed_forms"}, 2500, 60.0},
    {3, "bracket V(zeta_6) equals the closed form, knots <= 9 crossings", {"zeta6"}, 84, 300.0},
    {4, "skein Q(golden) equals both closed forms, knots <= 8 crossings", {"golden"}, 70, 600.0},
    {5, "invariance: congruence, stabilization, reduction paths, Jacobi, Delta(-1)", {"invariance"}, 22000, 120.0},
    {6, "synthetic unknotting sequences obey the mod-8 sign rules", {"sequences"}, 400, 30.0},
    {7, "generator search agrees with the delta_p pattern test, det <= 2000", {"lickorish"}, 1000, 120.0},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) {
    const int id = std::atoi(argv[i]);
    if (id < 1 || id > static_cast<int>(kCriteria.size())) {
      std::cerr << "acceptance: unknown criterion " << argv[i] << "\n";
      return 2;
    }
    wanted.insert(id);
  }

  VerifyConfig cfg;
  bool all_ok = true;
  for (const auto& c : kCriteria) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    std::size_t checks = 0;
    double seconds = 0;
    std::vector<std::string> failures;
    for (const auto& s : c.suites) {
      const SuiteResult r = run_suite(s, cfg);
      checks += r.checks;
      seconds += r.seconds;
      failures.insert(failures.end(), r.failures.begin(), r.failures.end());
    }
    if (checks < c.min_checks)
      failures.push_back("only " + std::to_string(checks) + " checks, need " + std::to_string(c.min_checks));
    if (seconds > c.limit_seconds) failures.push_back("time limit exceeded");
    const bool ok = failures.empty();
    all_ok = all_ok && ok;
    std::printf("%s criterion %d: %s (%zu checks, %zu failed, %.3f s of %.0f s, tolerance %g)\n", ok ? "PASS" : "FAIL",
                c.id, c.title, checks, failures.size(), seconds, c.limit_seconds, kTolerance);
    for (const auto& f : failures) std::printf("    %s\n", f.c_str());
  }
  return all_ok ? 0 : 1;
}
