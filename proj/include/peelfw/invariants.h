// Copyright 2026 The Authors.
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

#ifndef PEELFW_INVARIANTS_H_
#define PEELFW_INVARIANTS_H_

#include <string>
#include <vector>

#include "peelfw/graph.h"

namespace peelfw {

enum class CheckStatus { kPass, kFail, kSkipped };

std::string ToString(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

// Runs every invariant that fits the instance's size caps; checks whose cap
// is exceeded are reported as skipped. Deterministic (fixed-seed weights).
std::vector<CheckResult> RunInvariantSuite(const MultiGraph& g);

bool AllPassed(const std::vector<CheckResult>& results);

}  // namespace peelfw

#endif  // PEELFW_INVARIANTS_H_
