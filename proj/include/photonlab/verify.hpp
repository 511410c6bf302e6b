#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace photonlab {

struct CriterionResult {
  std::string id;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 0x7e57ab1e5eedull;
  int threads = 0;
  // Negative-control hook: the named criterion runs against a deliberately
  // tampered expectation and must FAIL, proving the harness detects bad
  // numbers. Empty = normal run.
  std::string fault;
  // Run only this criterion (empty = all).
  std::string only;
};

const std::vector<std::string>& criterion_ids();

// Runs the acceptance criteria on the desk-scale configuration
// (N = 128, L = 20*pi). Calls on_result after each criterion when provided.
std::vector<CriterionResult> run_acceptance(
    const VerifyOptions& opts,
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace photonlab
