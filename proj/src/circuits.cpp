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

#include "vqra/circuits.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vqra {

namespace {

void check_finite(const std::vector<double>& values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(std::string(what) + ": non-finite angle");
    }
  }
}

}  // namespace

CircuitConfig CircuitConfig::from_id(int id) {
  switch (id) {
    case 1: return CircuitConfig{false, false};
    case 2: return CircuitConfig{true, false};
    case 3: return CircuitConfig{false, true};
    case 4: return CircuitConfig{true, true};
    default:
      throw std::invalid_argument("CircuitConfig: id must be 1..4, got " +
                                  std::to_string(id));
  }
}

int CircuitConfig::id() const {
  if (!memory_entanglers && !encoder_entanglers) return 1;
  if (memory_entanglers && !encoder_entanglers) return 2;
  if (!memory_entanglers && encoder_entanglers) return 3;
  return 4;
}

MemoryParams::MemoryParams(int k, int d_m) : k(k), d_m(d_m) {
  if (k < 1 || d_m < 0) {
    throw std::invalid_argument("MemoryParams: need k >= 1 and d_m >= 0");
  }
  theta.assign(static_cast<std::size_t>(d_m + 1) * k, 0.0);
}

MemoryParams::MemoryParams(int k, int d_m, std::vector<double> theta_in)
    : MemoryParams(k, d_m) {
  if (theta_in.size() != theta.size()) {
    throw std::invalid_argument("MemoryParams: expected " +
                                std::to_string(theta.size()) + " angles, got " +
                                std::to_string(theta_in.size()));
  }
  check_finite(theta_in, "MemoryParams");
  theta = std::move(theta_in);
}

EncoderParams::EncoderParams(int k, int d_e, int n_features)
    : k(k), d_e(d_e), n_features(n_features) {
  if (k < 1 || d_e < 0 || n_features < 1) {
    throw std::invalid_argument("EncoderParams: need k >= 1, d_e >= 0, n_features >= 1");
  }
  xi.assign(static_cast<std::size_t>(d_e) * n_features * 2 * k, 0.0);
}

EncoderParams::EncoderParams(int k, int d_e, int n_features, std::vector<double> xi_in)
    : EncoderParams(k, d_e, n_features) {
  if (xi_in.size() != xi.size()) {
    throw std::invalid_argument("EncoderParams: expected " + std::to_string(xi.size()) +
                                " angles, got " + std::to_string(xi_in.size()));
  }
  check_finite(xi_in, "EncoderParams");
  xi = std::move(xi_in);
}

namespace detail {

void validate_memory(const MemoryParams& params, const CircuitConfig& config) {
  if (params.k < 1) throw std::invalid_argument("memory circuit: k must be >= 1");
  if (config.memory_entanglers && params.k < 2) {
    throw std::invalid_argument("memory circuit: CNOT ring requires k >= 2");
  }
  if (params.theta.size() != static_cast<std::size_t>(params.d_m + 1) * params.k) {
    throw std::invalid_argument("memory circuit: theta size mismatch");
  }
}

void validate_encoder(const EncoderParams& params, std::span<const double> x,
                      const CircuitConfig& config) {
  if (params.k < 1) throw std::invalid_argument("encoder circuit: k must be >= 1");
  if (config.encoder_entanglers && params.k < 2) {
    throw std::invalid_argument("encoder circuit: XX ring requires k >= 2");
  }
  if (static_cast<int>(x.size()) != params.n_features) {
    throw std::invalid_argument("encoder circuit: expected " +
                                std::to_string(params.n_features) + " features, got " +
                                std::to_string(x.size()));
  }
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("encoder circuit: non-finite input feature");
    }
  }
  if (params.xi.size() !=
      static_cast<std::size_t>(params.d_e) * params.n_features * 2 * params.k) {
    throw std::invalid_argument("encoder circuit: xi size mismatch");
  }
}

}  // namespace detail

std::vector<GateOp> build_memory(const MemoryParams& params, const CircuitConfig& config) {
  std::vector<GateOp> gates;
  gates.reserve(static_cast<std::size_t>(params.k) * (params.d_m + 1) +
                (config.memory_entanglers
                     ? static_cast<std::size_t>(params.k) * params.d_m
                     : 0));
  for_each_memory_gate(params, config, [&](const GateOp& g) { gates.push_back(g); });
  return gates;
}

std::vector<GateOp> build_encoder(const EncoderParams& params, std::span<const double> x,
                                  const CircuitConfig& config) {
  std::vector<GateOp> gates;
  const std::size_t per_block =
      static_cast<std::size_t>(params.k) * (config.encoder_entanglers ? 3 : 2);
  gates.reserve(per_block * params.d_e * params.n_features);
  for_each_encoder_gate(params, x, config,
                        [&](const GateOp& g) { gates.push_back(g); });
  return gates;
}

StateVector memory_state(const MemoryParams& params, const CircuitConfig& config) {
  StateVector state(params.k);
  for_each_memory_gate(params, config,
                       [&](const GateOp& g) { apply_gate(state, g); });
  return state;
}

StateVector encode_state(const EncoderParams& params, std::span<const double> x,
                         const CircuitConfig& config) {
  StateVector state(params.k);
  for_each_encoder_gate(params, x, config,
                        [&](const GateOp& g) { apply_gate(state, g); });
  return state;
}

void encode_state_into(StateVector& out, const EncoderParams& params,
                       std::span<const double> x, const CircuitConfig& config) {
  if (out.n_qubits() != params.k) {
    throw std::invalid_argument("encode_state_into: output register has wrong width");
  }
  out.set_zero_state();
  for_each_encoder_gate(params, x, config,
                        [&](const GateOp& g) { apply_gate(out, g); });
}

ParamCount param_count(int k, int d_m, int d_e, int n_features) {
  if (k < 1 || d_m < 0 || d_e < 0 || n_features < 1) {
    throw std::invalid_argument("param_count: invalid dimensions");
  }
  ParamCount out;
  out.memory = static_cast<std::size_t>(k) * (d_m + 1);
  out.encoder = static_cast<std::size_t>(2) * k * n_features * d_e;
  return out;
}

double product_state_check(const StateVector& state) {
  const int k = state.n_qubits();
  const Eigen::Index dim = state.dim();
  const Eigen::VectorXcd& amps = state.amps();
  double min_purity = 1.0;
  for (int q = 0; q < k; ++q) {
    const Eigen::Index mask = Eigen::Index(1) << (k - 1 - q);
    double rho00 = 0.0;
    double rho11 = 0.0;
    Complex rho01(0.0, 0.0);
    for (Eigen::Index base = 0; base < dim; base += 2 * mask) {
      for (Eigen::Index off = 0; off < mask; ++off) {
        const Complex a0 = amps[base + off];
        const Complex a1 = amps[base + off + mask];
        rho00 += std::norm(a0);
        rho11 += std::norm(a1);
        rho01 += a0 * std::conj(a1);
      }
    }
    const double purity = rho00 * rho00 + rho11 * rho11 + 2.0 * std::norm(rho01);
    min_purity = std::min(min_purity, purity);
  }
  return min_purity;
}

}  // namespace vqra
