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

#include <cstdint>
#include <functional>
#include <vector>

#include "vqra/model.hpp"

namespace vqra {

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Central differences (f(p + h e_i) - f(p - h e_i)) / 2h per coordinate;
/// exactly 2 * dim objective evaluations. Throws (naming the coordinate) if
/// the objective returns a non-finite value.
Eigen::VectorXd numerical_gradient(const Objective& objective,
                                   const Eigen::VectorXd& params, double fd_step);

/// Standard bias-corrected Adam.
struct AdamState {
  std::size_t step = 0;
  Eigen::VectorXd m;
  Eigen::VectorXd v;
  double lr = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;

  static AdamState init(Eigen::Index dim, double lr = 0.01, double beta1 = 0.9,
                        double beta2 = 0.999, double eps = 1e-8);
};

void adam_step(AdamState& state, Eigen::VectorXd& params, const Eigen::VectorXd& grad);

struct TrainConfig {
  int iterations = 2000;
  double fd_step = 1e-4;   // central-difference step
  std::uint64_t seed = 0;  // parameter init; round r of a multi-round run uses seed + r
  int rounds = 10;
  int log_every = 1;  // only consulted in shot mode; exact mode logs every iteration
  double lr = 0.01;
};

struct TrainTrace {
  std::vector<double> loss_history;  // one entry per iteration (params before the update)
  Eigen::VectorXd final_params;
  double wall_time_s = 0.0;

  double final_loss() const;
};

/// Adam descent on an arbitrary objective from an explicit start point.
/// Per iteration: one logging evaluation (every `log_every` iterations; the
/// last logged value is carried forward in between) plus the 2*dim gradient
/// evaluations, i.e. exactly iterations * (2*dim + 1) evaluations when
/// log_every == 1.
TrainTrace train_objective(const Objective& objective, Eigen::VectorXd initial,
                           const TrainConfig& cfg, int log_every = 1);

/// Uniform [-pi, pi) per angle from a seeded generator.
Eigen::VectorXd random_initial_params(Eigen::Index dim, std::uint64_t seed);

/// Trains the concatenated (theta, xi) vector against loss(data) from a
/// fresh random init. The model argument is a template; it is not mutated.
TrainTrace train(const VqraModel& model, const Dataset& data, const TrainConfig& cfg,
                 double reg_lambda = 0.0);

struct RoundsSummary {
  double mean_final_loss = 0.0;
  double std_final_loss = 0.0;  // population std; 0 for a single round
  std::vector<TrainTrace> traces;
};

/// cfg.rounds independent trainings with seeds cfg.seed + 0 .. + rounds-1.
RoundsSummary train_rounds(const VqraModel& model, const Dataset& data,
                           const TrainConfig& cfg, double reg_lambda = 0.0,
                           int jobs = 1);

/// Objective-level variant used by tests. With jobs > 1 the objective is
/// invoked from several rounds concurrently and must be re-entrant.
RoundsSummary train_rounds_objective(const Objective& objective, Eigen::Index dim,
                                     const TrainConfig& cfg, int jobs = 1);

/// Mean and population standard deviation.
std::pair<double, double> mean_std(const std::vector<double>& values);

}  // namespace vqra
