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

#include "vqra/optimize.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "vqra/util.hpp"

namespace vqra {

Eigen::VectorXd numerical_gradient(const Objective& objective,
                                   const Eigen::VectorXd& params, double fd_step) {
  if (!(fd_step > 0.0) || !std::isfinite(fd_step)) {
    throw std::invalid_argument("numerical_gradient: fd_step must be positive");
  }
  Eigen::VectorXd probe = params;
  Eigen::VectorXd grad(params.size());
  for (Eigen::Index i = 0; i < params.size(); ++i) {
    const double saved = probe[i];
    probe[i] = saved + fd_step;
    const double f_plus = objective(probe);
    probe[i] = saved - fd_step;
    const double f_minus = objective(probe);
    probe[i] = saved;
    if (!std::isfinite(f_plus) || !std::isfinite(f_minus)) {
      throw std::runtime_error(
          "numerical_gradient: non-finite objective at coordinate " +
          std::to_string(i) + " (f+ = " + std::to_string(f_plus) +
          ", f- = " + std::to_string(f_minus) + ")");
    }
    grad[i] = (f_plus - f_minus) / (2.0 * fd_step);
  }
  return grad;
}

AdamState AdamState::init(Eigen::Index dim, double lr, double beta1, double beta2,
                          double eps) {
  AdamState state;
  state.m = Eigen::VectorXd::Zero(dim);
  state.v = Eigen::VectorXd::Zero(dim);
  state.lr = lr;
  state.beta1 = beta1;
  state.beta2 = beta2;
  state.eps = eps;
  return state;
}

void adam_step(AdamState& state, Eigen::VectorXd& params, const Eigen::VectorXd& grad) {
  if (params.size() != grad.size() || params.size() != state.m.size()) {
    throw std::invalid_argument("adam_step: dimension mismatch");
  }
  state.step += 1;
  state.m = state.beta1 * state.m + (1.0 - state.beta1) * grad;
  state.v = state.beta2 * state.v + (1.0 - state.beta2) * grad.cwiseProduct(grad);
  const double t = static_cast<double>(state.step);
  const double m_corr = 1.0 - std::pow(state.beta1, t);
  const double v_corr = 1.0 - std::pow(state.beta2, t);
  params.array() -= state.lr * (state.m.array() / m_corr) /
                    ((state.v.array() / v_corr).sqrt() + state.eps);
}

double TrainTrace::final_loss() const {
  return loss_history.empty() ? std::numeric_limits<double>::quiet_NaN()
                              : loss_history.back();
}

TrainTrace train_objective(const Objective& objective, Eigen::VectorXd params,
                           const TrainConfig& cfg, int log_every) {
  if (cfg.iterations < 0) {
    throw std::invalid_argument("train: iterations must be >= 0");
  }
  if (log_every < 1) {
    throw std::invalid_argument("train: log_every must be >= 1");
  }
  const auto t0 = std::chrono::steady_clock::now();

  TrainTrace trace;
  trace.loss_history.reserve(cfg.iterations);
  AdamState adam = AdamState::init(params.size(), cfg.lr);

  double last_logged = 0.0;
  for (int it = 0; it < cfg.iterations; ++it) {
    if (it % log_every == 0) {
      last_logged = objective(params);
    }
    trace.loss_history.push_back(last_logged);
    const Eigen::VectorXd grad = numerical_gradient(objective, params, cfg.fd_step);
    adam_step(adam, params, grad);
  }

  trace.final_params = std::move(params);
  trace.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return trace;
}

Eigen::VectorXd random_initial_params(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-std::numbers::pi, std::numbers::pi);
  Eigen::VectorXd params(dim);
  for (Eigen::Index i = 0; i < dim; ++i) params[i] = uniform(rng);
  return params;
}

TrainTrace train(const VqraModel& model, const Dataset& data, const TrainConfig& cfg,
                 double reg_lambda) {
  VqraModel scratch = model;
  const Objective objective = [&scratch, &data, reg_lambda](const Eigen::VectorXd& p) {
    scratch.set_parameter_vector(p);
    return scratch.loss(data, reg_lambda).total;
  };
  const int log_every = model.eval().mode == EvalSpec::Mode::Exact ? 1 : cfg.log_every;
  Eigen::VectorXd initial = random_initial_params(
      static_cast<Eigen::Index>(model.parameter_count()), cfg.seed);
  return train_objective(objective, std::move(initial), cfg, log_every);
}

std::pair<double, double> mean_std(const std::vector<double>& values) {
  if (values.empty()) return {0.0, 0.0};
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(values.size());
  return {mean, std::sqrt(var)};
}

namespace {

RoundsSummary summarize(std::vector<TrainTrace> traces) {
  RoundsSummary summary;
  std::vector<double> finals;
  finals.reserve(traces.size());
  for (const TrainTrace& t : traces) finals.push_back(t.final_loss());
  const auto [mean, sd] = mean_std(finals);
  summary.mean_final_loss = mean;
  summary.std_final_loss = sd;
  summary.traces = std::move(traces);
  return summary;
}

}  // namespace

RoundsSummary train_rounds(const VqraModel& model, const Dataset& data,
                           const TrainConfig& cfg, double reg_lambda, int jobs) {
  if (cfg.rounds < 1) {
    throw std::invalid_argument("train_rounds: rounds must be >= 1");
  }
  std::vector<TrainTrace> traces(cfg.rounds);
  run_parallel(static_cast<std::size_t>(cfg.rounds), jobs, [&](std::size_t r) {
    TrainConfig round_cfg = cfg;
    round_cfg.seed = cfg.seed + r;
    traces[r] = train(model, data, round_cfg, reg_lambda);
  });
  return summarize(std::move(traces));
}

RoundsSummary train_rounds_objective(const Objective& objective, Eigen::Index dim,
                                     const TrainConfig& cfg, int jobs) {
  if (cfg.rounds < 1) {
    throw std::invalid_argument("train_rounds: rounds must be >= 1");
  }
  std::vector<TrainTrace> traces(cfg.rounds);
  run_parallel(static_cast<std::size_t>(cfg.rounds), jobs, [&](std::size_t r) {
    TrainConfig round_cfg = cfg;
    round_cfg.seed = cfg.seed + r;
    traces[r] = train_objective(objective,
                                random_initial_params(dim, round_cfg.seed), round_cfg,
                                /*log_every=*/1);
  });
  return summarize(std::move(traces));
}

}  // namespace vqra
