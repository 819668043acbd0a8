#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cosc {

struct CheckResult {
  std::string module;
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  /// Negative controls pass when the measured residual exceeds the threshold.
  bool negative_control = false;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

struct VerifyOptions {
  bool all = false;  // adds the harmonic-limit block and the k = 2 figure set
  std::uint64_t seed = 20240521;
};

/// Runs the invariant checks of every module. Exceptions inside a check are
/// reported as a failure of that check.
std::vector<CheckResult> run_verify(const VerifyOptions& options = {});

}  // namespace cosc
