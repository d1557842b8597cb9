// Copyright 2026 The sympindex authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "sympindex/symplectic.hpp"

namespace sympindex {

struct SuiteCheck {
  std::string name;
  int instances = 0;
  int failures = 0;
  double worst_residual = 0.0;
  std::string first_failure;

  bool pass() const { return failures == 0; }
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<SuiteCheck> checks;

  bool pass() const;
  int total_failures() const;
};

/// Runs one named randomized property suite.  Suites: tau, alm, maslov,
/// cayley, nu, concavity, oracle, hamflow.  Deterministic for a fixed seed.
SuiteResult run_suite(const std::string &name, std::uint64_t seed, int count);

/// All suite names in canonical order.
const std::vector<std::string> &suite_names();

/// Plain-text summary, one line per check; byte-stable for fixed inputs.
std::string format_suite_result(const SuiteResult &result);

}  // namespace sympindex
