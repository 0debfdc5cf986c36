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

#include <json.hpp>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "vqra/experiments.hpp"

namespace vqra {

using json = nlohmann::json;

/// Configuration/checkpoint schema violations; the message names the
/// offending key. The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {k, d_m, d_e, n_features, config, theta: [...], xi: [...]}; angle arrays
/// in row-major layer -> feature -> slot order.
json circuit_to_json(const MemoryParams& memory, const EncoderParams& encoder,
                     const CircuitConfig& config);
void circuit_from_json(const json& j, MemoryParams& memory, EncoderParams& encoder,
                       CircuitConfig& config);

/// {channel: "depolarizing"|"amplitude_damping"|"phase_damping"|"none",
///  strength: float}
json noise_to_json(const NoiseSpec& spec);
NoiseSpec noise_from_json(const json& j);

json eval_to_json(const EvalSpec& eval);
EvalSpec eval_from_json(const json& j);

/// Model checkpoint: {circuit, noise, eval_mode, loss_history}.
json checkpoint_to_json(const VqraModel& model, const std::vector<double>& loss_history);
VqraModel checkpoint_from_json(const json& j, std::vector<double>* loss_history = nullptr);

/// Sweep axes alongside the experiment parameters in one config document.
struct RunConfig {
  ExperimentSpec spec;
  std::vector<int> sweep_d_e = {1, 2, 3, 4, 5, 6};
  std::vector<double> sweep_strengths = {0.00, 0.01, 0.02, 0.03, 0.04, 0.05,
                                         0.06, 0.07, 0.08, 0.09, 0.10};
  ChannelKind sweep_channel = ChannelKind::Depolarizing;
};

/// Parses and validates a config document. Unknown keys, wrong types, and
/// out-of-range values raise ConfigError naming the key. Every field has a
/// default; an empty JSON object is a valid config.
RunConfig run_config_from_json(const json& j);
json run_config_to_json(const RunConfig& config);
RunConfig load_run_config(const std::filesystem::path& path);

/// Shortest round-trip-exact decimal rendering of a double.
std::string format_double(double value);

/// Write-temp-then-rename so concurrent writers never interleave partial
/// files.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

std::string trace_csv(const TrainTrace& trace);                       // iteration,loss
std::string predictions_csv(const std::vector<PredictionRow>& grid);  // x[,x2],y_true,y_pred
std::string sweep_csv(const SweepResult& sweep);                      // config,<axis>,mean,std
/// config_id,d_e,noise_p,mean_loss,std_loss with the fixed column taken
/// from the base spec.
std::string sweep_aggregate_csv(const SweepResult& sweep, const ExperimentSpec& base);
std::string kernel_csv(const Eigen::MatrixXcd& gram);                 // row,col,re,im

/// gnuplot scripts referencing the CSVs written next to them.
std::string gnuplot_sweep_script(const SweepResult& sweep, const std::string& csv_name,
                                 const std::string& output_png);
std::string gnuplot_fit_script(int arity, const std::string& csv_name,
                               const std::string& output_png);

}  // namespace vqra
