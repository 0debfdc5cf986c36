// Copyright 2026 The vqra Authors
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

namespace vqra {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fast invariant suite: gate oracle agreement, channel CPTP checks, the
/// swap-test law, gradient/optimizer sanity. Completes in seconds.
///
/// `inject_fault` is a test hook: "gate-convention" corrupts the rotation
/// convention used on one side of the swap-test law check so the failure
/// path can be exercised deliberately. Empty string = no fault.
std::vector<CheckResult> run_selftest(const std::string& inject_fault = "");

}  // namespace vqra
