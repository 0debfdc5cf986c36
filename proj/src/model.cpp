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

#include "vqra/model.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vqra/util.hpp"

namespace vqra {

namespace {

/// Shot-mode sub-seed: mixes the mode seed with the raw bytes of x so that
/// each input gets its own reproducible Bernoulli stream.
std::uint64_t shot_seed_for(std::uint64_t seed, std::span<const double> x) {
  std::uint64_t h = fnv1a64(&seed, sizeof(seed));
  const std::uint64_t hx = fnv1a64(x.data(), x.size() * sizeof(double));
  return h ^ (hx + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

double quadratic_form_real(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& v) {
  const Eigen::Index dim = v.size();
  Complex acc(0.0, 0.0);
  for (Eigen::Index j = 0; j < dim; ++j) {
    Complex inner(0.0, 0.0);
    for (Eigen::Index i = 0; i < dim; ++i) {
      inner += std::conj(v[i]) * a(i, j);
    }
    acc += inner * v[j];
  }
  return acc.real();
}

}  // namespace

Dataset::Dataset(int feature_dim_in) : feature_dim(feature_dim_in) {
  if (feature_dim < 1) {
    throw std::invalid_argument("Dataset: feature_dim must be >= 1");
  }
}

void Dataset::add(std::span<const double> x, double y) {
  if (static_cast<int>(x.size()) != feature_dim) {
    throw std::invalid_argument("Dataset::add: expected " + std::to_string(feature_dim) +
                                " features, got " + std::to_string(x.size()));
  }
  if (!(y >= 0.0 && y <= 1.0)) {
    throw std::invalid_argument("Dataset::add: target " + std::to_string(y) +
                                " outside [0, 1]");
  }
  xs.insert(xs.end(), x.begin(), x.end());
  ys.push_back(y);
}

EvalSpec EvalSpec::with_shots(std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) {
    throw std::invalid_argument("EvalSpec: shot count must be >= 1");
  }
  EvalSpec spec;
  spec.mode = Mode::Shots;
  spec.shots = shots;
  spec.seed = seed;
  return spec;
}

VqraModel::VqraModel(MemoryParams memory, EncoderParams encoder, CircuitConfig config,
                     NoiseSpec noise, EvalSpec eval)
    : memory_(std::move(memory)),
      encoder_(std::move(encoder)),
      config_(config),
      noise_(std::move(noise)),
      eval_(eval),
      psi_memory_(memory_.k) {
  if (memory_.k != encoder_.k) {
    throw std::invalid_argument("VqraModel: memory and encoder qubit counts differ (" +
                                std::to_string(memory_.k) + " vs " +
                                std::to_string(encoder_.k) + ")");
  }
  refresh_cache();
}

void VqraModel::set_memory(MemoryParams memory) {
  if (memory.k != encoder_.k) {
    throw std::invalid_argument("VqraModel::set_memory: qubit-count mismatch");
  }
  memory_ = std::move(memory);
  refresh_cache();
}

void VqraModel::set_encoder(EncoderParams encoder) {
  if (encoder.k != memory_.k) {
    throw std::invalid_argument("VqraModel::set_encoder: qubit-count mismatch");
  }
  encoder_ = std::move(encoder);
  // Memory state unchanged, but keep one code path for cache consistency.
  refresh_cache();
}

void VqraModel::set_noise(NoiseSpec noise) {
  noise_ = std::move(noise);
  refresh_cache();
}

void VqraModel::set_eval(EvalSpec eval) { eval_ = eval; }

std::size_t VqraModel::parameter_count() const {
  return memory_.size() + encoder_.size();
}

Eigen::VectorXd VqraModel::parameter_vector() const {
  Eigen::VectorXd params(parameter_count());
  Eigen::Index i = 0;
  for (double v : memory_.theta) params[i++] = v;
  for (double v : encoder_.xi) params[i++] = v;
  return params;
}

void VqraModel::set_parameter_vector(const Eigen::VectorXd& params) {
  if (params.size() != static_cast<Eigen::Index>(parameter_count())) {
    throw std::invalid_argument("set_parameter_vector: expected " +
                                std::to_string(parameter_count()) + " values, got " +
                                std::to_string(params.size()));
  }
  if (!params.allFinite()) {
    throw std::invalid_argument("set_parameter_vector: non-finite parameter");
  }
  Eigen::Index i = 0;
  for (double& v : memory_.theta) v = params[i++];
  for (double& v : encoder_.xi) v = params[i++];
  refresh_cache();
}

void VqraModel::refresh_cache() {
  psi_memory_ = memory_state(memory_, config_);
  if (!noise_.is_identity()) {
    if (memory_.k > kMaxDensityQubits) {
      throw std::invalid_argument("VqraModel: noisy evaluation capped at k=" +
                                  std::to_string(kMaxDensityQubits));
    }
    const Eigen::MatrixXcd projector =
        psi_memory_.amps() * psi_memory_.amps().adjoint();
    noisy_memory_observable_ = apply_local_noise_adjoint(projector, noise_, memory_.k);
  } else {
    noisy_memory_observable_.resize(0, 0);
  }
}

double VqraModel::predict(std::span<const double> x) const {
  StateVector scratch(encoder_.k);
  return predict_impl(x, scratch);
}

double VqraModel::predict_impl(std::span<const double> x, StateVector& scratch) const {
  encode_state_into(scratch, encoder_, x, config_);

  if (eval_.mode == EvalSpec::Mode::Shots) {
    const DensityMatrix rho_noisy =
        apply_local_noise(to_density(scratch), noise_);
    const double p0_hat = swap_test_shots(psi_memory_, rho_noisy, eval_.shots,
                                          shot_seed_for(eval_.seed, x));
    return std::sqrt(std::max(0.0, 2.0 * p0_hat - 1.0));
  }

  if (noise_.is_identity()) {
    return std::abs(overlap(psi_memory_, scratch));
  }
  // <psi(x)| adjoint-noise(|Psi><Psi|) |psi(x)> equals <Psi| noise(rho_x) |Psi>;
  // the duality is property-tested against the density-matrix route.
  const double fidelity = quadratic_form_real(noisy_memory_observable_, scratch.amps());
  return std::sqrt(std::max(0.0, fidelity));
}

LossReport VqraModel::loss(const Dataset& data, double reg_lambda) const {
  if (data.empty()) {
    throw std::invalid_argument("VqraModel::loss: empty dataset");
  }
  if (data.feature_dim != encoder_.n_features) {
    throw std::invalid_argument("VqraModel::loss: dataset feature_dim " +
                                std::to_string(data.feature_dim) + " != encoder n_features " +
                                std::to_string(encoder_.n_features));
  }
  if (reg_lambda < 0.0) {
    throw std::invalid_argument("VqraModel::loss: reg_lambda must be >= 0");
  }

  LossReport report;
  report.residuals.resize(data.size());
  StateVector scratch(encoder_.k);
  double sum_sq = 0.0;
  for (std::size_t m = 0; m < data.size(); ++m) {
    const double f = predict_impl(data.x_row(m), scratch);
    const double r = f - data.ys[m];
    report.residuals[m] = r;
    sum_sq += r * r;
  }
  report.mse = sum_sq / static_cast<double>(data.size());

  if (reg_lambda > 0.0) {
    double sq = 0.0;
    for (double v : memory_.theta) sq += v * v;
    for (double v : encoder_.xi) sq += v * v;
    const std::size_t count = parameter_count();
    report.regularization = count == 0 ? 0.0 : reg_lambda * sq / static_cast<double>(count);
  }
  report.total = report.mse + report.regularization;
  return report;
}

Eigen::MatrixXcd kernel_matrix(const EncoderParams& encoder, const CircuitConfig& config,
                               const std::vector<std::vector<double>>& xs) {
  const Eigen::Index m = static_cast<Eigen::Index>(xs.size());
  std::vector<StateVector> states;
  states.reserve(xs.size());
  for (const auto& x : xs) states.push_back(encode_state(encoder, x, config));

  Eigen::MatrixXcd gram(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i; j < m; ++j) {
      const Complex kij = overlap(states[i], states[j]);
      gram(i, j) = kij;
      gram(j, i) = std::conj(kij);
    }
  }
  return gram;
}

double representer_predict(const EncoderParams& encoder, const CircuitConfig& config,
                           const Dataset& train, std::span<const double> beta,
                           std::span<const double> x) {
  if (beta.size() != train.size()) {
    throw std::invalid_argument("representer_predict: |beta| " +
                                std::to_string(beta.size()) + " != dataset size " +
                                std::to_string(train.size()));
  }
  const StateVector psi_x = encode_state(encoder, x, config);
  Complex acc(0.0, 0.0);
  StateVector scratch(encoder.k);
  for (std::size_t m = 0; m < train.size(); ++m) {
    encode_state_into(scratch, encoder, train.x_row(m), config);
    acc += beta[m] * train.ys[m] * overlap(scratch, psi_x);
  }
  return std::abs(acc);
}

Eigen::VectorXd fit_beta_least_squares(const EncoderParams& encoder,
                                       const CircuitConfig& config, const Dataset& train,
                                       double ridge) {
  if (train.empty()) {
    throw std::invalid_argument("fit_beta_least_squares: empty dataset");
  }
  if (ridge < 0.0) {
    throw std::invalid_argument("fit_beta_least_squares: ridge must be >= 0");
  }
  const Eigen::Index m = static_cast<Eigen::Index>(train.size());

  std::vector<std::vector<double>> xs;
  xs.reserve(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) {
    const auto row = train.x_row(i);
    xs.emplace_back(row.begin(), row.end());
  }
  const Eigen::MatrixXcd gram = kernel_matrix(encoder, config, xs);

  // Design column j evaluated at sample m: y_j kappa(x_j, x_m). The target
  // vector is real, so the imaginary rows carry target 0 and the normal
  // equations pick up both parts.
  Eigen::MatrixXd design_re(m, m);
  Eigen::MatrixXd design_im(m, m);
  for (Eigen::Index row = 0; row < m; ++row) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const Complex value = train.ys[j] * gram(j, row);
      design_re(row, j) = value.real();
      design_im(row, j) = value.imag();
    }
  }
  const Eigen::VectorXd targets =
      Eigen::Map<const Eigen::VectorXd>(train.ys.data(), m);

  const Eigen::MatrixXd normal = design_re.transpose() * design_re +
                                 design_im.transpose() * design_im +
                                 ridge * Eigen::MatrixXd::Identity(m, m);
  const Eigen::VectorXd rhs = design_re.transpose() * targets;

  if (ridge == 0.0) {
    // An LDLT solve can silently succeed on a consistent singular system, so
    // singularity is detected by rank.
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(normal);
    if (!lu.isInvertible()) {
      throw std::invalid_argument(
          "fit_beta_least_squares: singular normal equations; rerun with ridge > 0");
    }
  }

  const Eigen::LDLT<Eigen::MatrixXd> ldlt(normal);
  const Eigen::VectorXd beta = ldlt.solve(rhs);
  const double residual = (normal * beta - rhs).norm();
  const double scale = std::max(1.0, rhs.norm());
  if (!beta.allFinite() || residual > 1e-8 * scale) {
    throw std::runtime_error("fit_beta_least_squares: solver failed");
  }
  return beta;
}

}  // namespace vqra
