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

#include "vqra/optimize.hpp"

namespace vqra {

/// Benchmark targets, all mapping their domain ([-1,1] or [-1,1]^2) into
/// [0, 1]:
///   f1(x) = x^2
///   f2(x) = e^x / e
///   f3(x) = sin^2(pi x)
///   f4(x) = 1 / (1 + e^{-10 x})
///   f5(x1, x2) = 1 / (1 + e^{10 (x1^2 - x2^2)})
enum class TargetId { F1, F2, F3, F4, F5 };

std::string to_string(TargetId id);
TargetId target_from_string(const std::string& name);
int target_arity(TargetId id);
double eval_target(TargetId id, std::span<const double> x);

/// 1-D targets: m evenly spaced points spanning [-1, 1] inclusive.
/// 2-D targets: m points uniform at random in [-1, 1]^2 (seeded).
/// Labels are f(x) + N(0, sigma^2), clamped to [0, 1].
Dataset make_dataset(TargetId target, int m, double sigma, std::uint64_t seed);

/// One fully specified experiment. All randomness derives from
/// train.seed: round r trains with train.seed + r, the dataset stream uses
/// train.seed + kDatasetSeedTag.
struct ExperimentSpec {
  TargetId target = TargetId::F4;
  int k = 3;
  int d_m = 3;
  int d_e = 6;
  int config_id = 4;
  NoiseSpec noise{};
  TrainConfig train{};
  int sample_count = 0;  // 0 = default (50 for 1-D targets, 200 for 2-D)
  double label_noise_sigma = 0.01;
  double reg_lambda = 0.0;
  EvalSpec eval = EvalSpec::exact();

  int resolved_sample_count() const;
  VqraModel make_model() const;  // zero-initialized angles
  Dataset make_data() const;
};

struct PredictionRow {
  std::vector<double> x;
  double y_true = 0.0;
  double y_pred = 0.0;
};

struct FitResult {
  TrainTrace trace;
  LossReport final_loss;
  std::vector<PredictionRow> grid;  // 201 points (1-D) or 41x41 (2-D)
};

FitResult run_fit(const ExperimentSpec& spec);

/// Per-configuration sweep aggregates: mean/std of the final training loss
/// over `rounds` runs, for every (configuration, axis value) cell.
struct SweepResult {
  std::string axis_name;  // "d_e" or "noise_p"
  std::vector<int> config_ids;
  std::vector<double> axis;
  std::vector<std::vector<double>> mean_loss;  // [config][axis]
  std::vector<std::vector<double>> std_loss;   // [config][axis]
};

/// Trains every configuration 1..4 at each encoder depth on the base spec's
/// target/dataset; cells are independent jobs (aggregation is keyed by
/// (config, depth, round), so results are schedule-independent).
SweepResult run_depth_sweep(const ExperimentSpec& base, const std::vector<int>& d_e_values,
                            int jobs = 1);

/// Trains every configuration 1..4 under the base spec's channel kind at
/// each strength (training happens under noise, via the density-matrix
/// semantics). An Identity base channel sweeps the depolarizing channel.
SweepResult run_noise_sweep(const ExperimentSpec& base,
                            const std::vector<double>& strengths, int jobs = 1);

}  // namespace vqra
