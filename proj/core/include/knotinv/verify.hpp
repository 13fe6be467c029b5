#pragma once

// Verification suites: worked examples, brute-force equivalences and
// end-to-end checks of the closed forms against the diagram oracles.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "knotinv/numtheory.hpp"

namespace knotinv {

struct VerifyConfig {
  std::uint64_t seed = 20240601;
  std::filesystem::path corpus;  // empty: default_corpus_dir()
  std::vector<Integer> primes{3, 5, 7, 11, 13};
  std::size_t bracket_budget = 22;
  std::size_t q_budget = 16;
  unsigned threads = 0;  // bracket worker threads, 0 = hardware
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;
  bool passed() const { return failures.empty(); }
};

/// examples, closed_forms, zeta6, golden, invariance, jacobi, sequences, lickorish, diagrams.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyConfig& config);

}  // namespace knotinv
