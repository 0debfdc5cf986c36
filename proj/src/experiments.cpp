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

#include "vqra/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "vqra/util.hpp"

namespace vqra {

std::string to_string(TargetId id) {
  switch (id) {
    case TargetId::F1: return "f1";
    case TargetId::F2: return "f2";
    case TargetId::F3: return "f3";
    case TargetId::F4: return "f4";
    case TargetId::F5: return "f5";
  }
  return "?";
}

TargetId target_from_string(const std::string& name) {
  if (name == "f1") return TargetId::F1;
  if (name == "f2") return TargetId::F2;
  if (name == "f3") return TargetId::F3;
  if (name == "f4") return TargetId::F4;
  if (name == "f5") return TargetId::F5;
  throw std::invalid_argument("unknown target '" + name + "' (expected f1..f5)");
}

int target_arity(TargetId id) { return id == TargetId::F5 ? 2 : 1; }

double eval_target(TargetId id, std::span<const double> x) {
  if (static_cast<int>(x.size()) != target_arity(id)) {
    throw std::invalid_argument("eval_target: " + to_string(id) + " takes " +
                                std::to_string(target_arity(id)) + " argument(s), got " +
                                std::to_string(x.size()));
  }
  switch (id) {
    case TargetId::F1: return x[0] * x[0];
    case TargetId::F2: return std::exp(x[0]) / std::numbers::e;
    case TargetId::F3: {
      const double s = std::sin(std::numbers::pi * x[0]);
      return s * s;
    }
    case TargetId::F4: return 1.0 / (1.0 + std::exp(-10.0 * x[0]));
    case TargetId::F5:
      return 1.0 / (1.0 + std::exp(10.0 * (x[0] * x[0] - x[1] * x[1])));
  }
  throw std::logic_error("eval_target: unreachable");
}

Dataset make_dataset(TargetId target, int m, double sigma, std::uint64_t seed) {
  if (m < 2) {
    throw std::invalid_argument("make_dataset: need at least 2 samples, got " +
                                std::to_string(m));
  }
  if (sigma < 0.0 || !std::isfinite(sigma)) {
    throw std::invalid_argument("make_dataset: sigma must be finite and >= 0");
  }
  const int arity = target_arity(target);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // Inputs first, then label noise, each in sample order.
  std::vector<std::vector<double>> points(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (arity == 1) {
      points[i] = {-1.0 + 2.0 * i / (m - 1)};
    } else {
      const double x1 = uniform(rng);
      const double x2 = uniform(rng);
      points[i] = {x1, x2};
    }
  }

  Dataset data(arity);
  for (int i = 0; i < m; ++i) {
    const double clean = eval_target(target, points[i]);
    const double noisy = clean + sigma * gauss(rng);
    data.add(points[i], std::clamp(noisy, 0.0, 1.0));
  }
  return data;
}

int ExperimentSpec::resolved_sample_count() const {
  if (sample_count > 0) return sample_count;
  return target_arity(target) == 2 ? 200 : 50;
}

VqraModel ExperimentSpec::make_model() const {
  MemoryParams memory(k, d_m);
  EncoderParams encoder(k, d_e, target_arity(target));
  return VqraModel(std::move(memory), std::move(encoder),
                   CircuitConfig::from_id(config_id), noise, eval);
}

Dataset ExperimentSpec::make_data() const {
  return make_dataset(target, resolved_sample_count(), label_noise_sigma,
                      train.seed + kDatasetSeedTag);
}

namespace {

std::vector<PredictionRow> prediction_grid(const VqraModel& model, TargetId target) {
  std::vector<PredictionRow> grid;
  if (target_arity(target) == 1) {
    constexpr int kPoints = 201;
    grid.reserve(kPoints);
    for (int i = 0; i < kPoints; ++i) {
      PredictionRow row;
      row.x = {-1.0 + 2.0 * i / (kPoints - 1)};
      row.y_true = eval_target(target, row.x);
      row.y_pred = model.predict(row.x);
      grid.push_back(std::move(row));
    }
  } else {
    constexpr int kSide = 41;
    grid.reserve(kSide * kSide);
    for (int i = 0; i < kSide; ++i) {
      for (int j = 0; j < kSide; ++j) {
        PredictionRow row;
        row.x = {-1.0 + 2.0 * i / (kSide - 1), -1.0 + 2.0 * j / (kSide - 1)};
        row.y_true = eval_target(target, row.x);
        row.y_pred = model.predict(row.x);
        grid.push_back(std::move(row));
      }
    }
  }
  return grid;
}

}  // namespace

FitResult run_fit(const ExperimentSpec& spec) {
  const Dataset data = spec.make_data();
  VqraModel model = spec.make_model();

  FitResult result;
  // iterations == 0 degenerates cleanly: no steps, final params = random init.
  result.trace = train(model, data, spec.train, spec.reg_lambda);
  model.set_parameter_vector(result.trace.final_params);
  result.final_loss = model.loss(data, spec.reg_lambda);
  result.grid = prediction_grid(model, spec.target);
  return result;
}

namespace {

SweepResult run_sweep(const ExperimentSpec& base, const std::string& axis_name,
                      const std::vector<double>& axis,
                      const std::function<ExperimentSpec(const ExperimentSpec&, double)>&
                          specialize,
                      int jobs) {
  if (axis.empty()) {
    throw std::invalid_argument("sweep: empty axis grid");
  }
  SweepResult result;
  result.axis_name = axis_name;
  result.axis = axis;
  result.config_ids = {1, 2, 3, 4};

  const Dataset data = base.make_data();
  const int rounds = base.train.rounds;
  if (rounds < 1) {
    throw std::invalid_argument("sweep: rounds must be >= 1");
  }

  const std::size_t n_configs = result.config_ids.size();
  const std::size_t n_axis = axis.size();
  // finals[(config, axis, round)] written by independent tasks.
  std::vector<double> finals(n_configs * n_axis * static_cast<std::size_t>(rounds));

  struct Cell {
    std::size_t ci, ai;
    int round;
  };
  std::vector<Cell> tasks;
  tasks.reserve(finals.size());
  for (std::size_t ci = 0; ci < n_configs; ++ci) {
    for (std::size_t ai = 0; ai < n_axis; ++ai) {
      for (int r = 0; r < rounds; ++r) tasks.push_back({ci, ai, r});
    }
  }

  run_parallel(tasks.size(), jobs, [&](std::size_t t) {
    const Cell& cell = tasks[t];
    ExperimentSpec spec = specialize(base, axis[cell.ai]);
    spec.config_id = result.config_ids[cell.ci];
    const VqraModel model = spec.make_model();
    TrainConfig cfg = spec.train;
    cfg.seed = spec.train.seed + static_cast<std::uint64_t>(cell.round);
    const TrainTrace trace = train(model, data, cfg, spec.reg_lambda);
    finals[(cell.ci * n_axis + cell.ai) * rounds + cell.round] = trace.final_loss();
  });

  result.mean_loss.assign(n_configs, std::vector<double>(n_axis, 0.0));
  result.std_loss.assign(n_configs, std::vector<double>(n_axis, 0.0));
  for (std::size_t ci = 0; ci < n_configs; ++ci) {
    for (std::size_t ai = 0; ai < n_axis; ++ai) {
      const auto begin = finals.begin() + (ci * n_axis + ai) * rounds;
      const std::vector<double> cell(begin, begin + rounds);
      const auto [mean, sd] = mean_std(cell);
      result.mean_loss[ci][ai] = mean;
      result.std_loss[ci][ai] = sd;
    }
  }
  return result;
}

}  // namespace

SweepResult run_depth_sweep(const ExperimentSpec& base, const std::vector<int>& d_e_values,
                            int jobs) {
  for (int d : d_e_values) {
    if (d < 1) {
      throw std::invalid_argument("run_depth_sweep: encoder depth must be >= 1");
    }
  }
  std::vector<double> axis;
  axis.reserve(d_e_values.size());
  for (int d : d_e_values) axis.push_back(static_cast<double>(d));
  return run_sweep(
      base, "d_e", axis,
      [](const ExperimentSpec& b, double value) {
        ExperimentSpec spec = b;
        spec.d_e = static_cast<int>(value);
        return spec;
      },
      jobs);
}

SweepResult run_noise_sweep(const ExperimentSpec& base,
                            const std::vector<double>& strengths, int jobs) {
  if (!std::is_sorted(strengths.begin(), strengths.end())) {
    throw std::invalid_argument("run_noise_sweep: strengths must be ascending");
  }
  for (double p : strengths) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("run_noise_sweep: strengths must lie in [0, 1]");
    }
  }
  const ChannelKind kind = base.noise.channel.kind == ChannelKind::Identity
                               ? ChannelKind::Depolarizing
                               : base.noise.channel.kind;
  return run_sweep(
      base, "noise_p", strengths,
      [kind](const ExperimentSpec& b, double value) {
        ExperimentSpec spec = b;
        spec.noise.channel = make_channel(kind, value);
        return spec;
      },
      jobs);
}

}  // namespace vqra
