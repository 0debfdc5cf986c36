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
#include <span>
#include <vector>

#include "vqra/circuits.hpp"
#include "vqra/noise.hpp"
#include "vqra/swap_test.hpp"

namespace vqra {

/// Labeled samples (x, y) with a fixed feature dimension. Targets must lie
/// in [0, 1], the model's output range.
struct Dataset {
  int feature_dim = 0;
  std::vector<double> xs;  // row-major, size() * feature_dim
  std::vector<double> ys;

  Dataset() = default;
  explicit Dataset(int feature_dim);

  std::size_t size() const { return ys.size(); }
  bool empty() const { return ys.empty(); }
  std::span<const double> x_row(std::size_t m) const {
    return {xs.data() + m * feature_dim, static_cast<std::size_t>(feature_dim)};
  }
  void add(std::span<const double> x, double y);
};

struct LossReport {
  double mse = 0.0;
  double regularization = 0.0;
  double total = 0.0;
  std::vector<double> residuals;  // f(x_m) - y_m per sample
};

/// Exact evaluation computes kernel values analytically from the simulated
/// states; shot mode replaces the swap-test probability with a seeded
/// Bernoulli estimate. Each input derives its own sub-seed from (seed, x),
/// so predictions are deterministic per (input, seed) regardless of order.
struct EvalSpec {
  enum class Mode { Exact, Shots };
  Mode mode = Mode::Exact;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  static EvalSpec exact() { return EvalSpec{}; }
  static EvalSpec with_shots(std::uint64_t shots, std::uint64_t seed);
};

/// The full predictor: memory circuit, encoder, entangler switches, noise
/// placement, and evaluation mode. f(x) = |<Psi|psi(x)>| noise-free; with a
/// channel on the encoded register, f(x) = sqrt(max(0, 2 p0 - 1)) where p0
/// is the mixed-state swap-test probability.
///
/// The memory state (and, under noise, the channel-adjoint-transformed
/// memory projector) is cached eagerly on every parameter change, so const
/// evaluation is pure and safe to call concurrently.
class VqraModel {
 public:
  VqraModel(MemoryParams memory, EncoderParams encoder, CircuitConfig config,
            NoiseSpec noise = NoiseSpec{}, EvalSpec eval = EvalSpec::exact());

  int k() const { return memory_.k; }
  int n_features() const { return encoder_.n_features; }
  const MemoryParams& memory() const { return memory_; }
  const EncoderParams& encoder() const { return encoder_; }
  const CircuitConfig& config() const { return config_; }
  const NoiseSpec& noise() const { return noise_; }
  const EvalSpec& eval() const { return eval_; }
  const StateVector& cached_memory_state() const { return psi_memory_; }

  void set_memory(MemoryParams memory);
  void set_encoder(EncoderParams encoder);
  void set_noise(NoiseSpec noise);
  void set_eval(EvalSpec eval);

  /// Concatenated trainable angles, memory first then encoder.
  std::size_t parameter_count() const;
  Eigen::VectorXd parameter_vector() const;
  void set_parameter_vector(const Eigen::VectorXd& params);

  double predict(std::span<const double> x) const;

  /// Mean squared residual plus reg_lambda times the mean square of all
  /// trainable angles (reg_lambda defaults to 0 everywhere).
  LossReport loss(const Dataset& data, double reg_lambda = 0.0) const;

 private:
  friend struct ModelScratch;
  void refresh_cache();
  double predict_impl(std::span<const double> x, StateVector& scratch) const;

  MemoryParams memory_;
  EncoderParams encoder_;
  CircuitConfig config_;
  NoiseSpec noise_;
  EvalSpec eval_;

  StateVector psi_memory_;
  Eigen::MatrixXcd noisy_memory_observable_;  // empty when noise is identity
};

/// Gram matrix K[i][j] = <psi(x_i)|psi(x_j)> of the encoded states.
Eigen::MatrixXcd kernel_matrix(const EncoderParams& encoder, const CircuitConfig& config,
                               const std::vector<std::vector<double>>& xs);

/// |sum_m beta_m y_m kappa(x_m, x)| -- the superposed-memory baseline.
double representer_predict(const EncoderParams& encoder, const CircuitConfig& config,
                           const Dataset& train, std::span<const double> beta,
                           std::span<const double> x);

/// Least-squares beta for the representer predictor: minimizes the full
/// complex residual sum_m |sum_j beta_j y_j kappa(x_j, x_m) - y_m|^2
/// + ridge |beta|^2 over real beta, via normal equations on the stacked
/// real/imaginary design. Constraining the imaginary part keeps the
/// absolute-value predictor close to the fitted real part. Throws if the
/// system is singular and ridge == 0.
Eigen::VectorXd fit_beta_least_squares(const EncoderParams& encoder,
                                       const CircuitConfig& config, const Dataset& train,
                                       double ridge);

}  // namespace vqra
