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

#include <optional>
#include <string>
#include <vector>

namespace vqra::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit-code discipline: 0 success, 1 runtime failure, 2 configuration or
/// validation failure. No other codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;

struct CommonOptions {
  std::string config_path;
  std::string out_dir = "vqra-out";
  int jobs = 0;  // 0 = hardware concurrency
  std::optional<std::uint64_t> seed_override;
  std::optional<std::uint64_t> shots_override;  // switches to shot mode
  bool quiet = false;
  std::vector<std::string> argv_echo;  // recorded in the manifest
};

/// Trains one model per the config; writes trace.csv, predictions.csv,
/// checkpoint.json and manifest.json under out_dir.
int cmd_fit(const CommonOptions& options);

/// kind is "depth" (fig5.csv) or "noise" (fig6.csv); also writes
/// aggregate.csv, a gnuplot script, and manifest.json.
int cmd_sweep(const CommonOptions& options, const std::string& kind);

/// Prints one CSV row per input to stdout. Inputs outside [-1, 1] warn on
/// stderr but are still evaluated.
int cmd_predict(const std::string& checkpoint_path,
                const std::vector<std::string>& x_tokens, bool quiet);

/// Runs the invariant suite and prints a pass/fail table.
int cmd_selftest(const std::string& inject_fault, bool quiet);

}  // namespace vqra::cli
