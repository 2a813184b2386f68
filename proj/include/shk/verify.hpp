// SPDX-License-Identifier: Apache-2.0
//
// Named end-to-end checks, shared by the CLI and the acceptance runner.

#pragma once

#include <string>
#include <vector>

namespace shk {

struct SuiteInfo {
  std::string name;
  std::string summary;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, or a short summary on success
  double seconds = 0;
};

/// Suites in acceptance order.
const std::vector<SuiteInfo>& verification_suites();

/// Runs one suite. Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name);

}  // namespace shk
