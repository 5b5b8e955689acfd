#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tautorder/exact_arith.hpp"

namespace tautorder::verify {

struct CaseResult {
  std::string label;
  bool passed;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;
  bool passed() const;
};

struct Options {
  // Upper genus for g-indexed suites; each suite's default range otherwise.
  std::optional<unsigned> max_g;
  std::size_t oracle_prime_count = 100;
  std::size_t oracle_window = 50;
  // Replaces ng_local(g) in the n_g table consumed by the suites. Used to
  // check that a corrupted constant is caught.
  std::map<unsigned, BigInt> ng_overrides;
};

// Names accepted by run_suite, in run order; "all" is handled separately.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

// Runs one named suite, or every suite for "all". Throws
// std::invalid_argument for an unknown name.
std::vector<SuiteResult> run(const std::string& name, const Options& options);

}  // namespace tautorder::verify
