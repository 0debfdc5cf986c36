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

#include <cstddef>
#include <span>
#include <vector>

#include "vqra/gates.hpp"
#include "vqra/state.hpp"

namespace vqra {

/// Entangler switches. The four combinations are the standard circuit
/// configurations 1..4:
///   1: (off, off)   2: (on, off)   3: (off, on)   4: (on, on)
/// with the pair ordered (memory_entanglers, encoder_entanglers).
struct CircuitConfig {
  bool memory_entanglers = true;
  bool encoder_entanglers = true;

  static CircuitConfig from_id(int id);
  int id() const;

  bool operator==(const CircuitConfig&) const = default;
};

/// Memory-circuit angles, indexed [layer 0..d_m][qubit 0..k-1] row-major.
/// Layer 0 is the initial rotation column; layers 1..d_m follow each
/// entangling ring.
struct MemoryParams {
  int k = 0;
  int d_m = 0;
  std::vector<double> theta;  // size (d_m + 1) * k

  MemoryParams() = default;
  MemoryParams(int k, int d_m);  // zero-initialized angles
  MemoryParams(int k, int d_m, std::vector<double> theta);

  std::size_t size() const { return theta.size(); }
  double& at(int layer, int qubit) { return theta[index(layer, qubit)]; }
  double at(int layer, int qubit) const { return theta[index(layer, qubit)]; }
  std::size_t index(int layer, int qubit) const {
    return static_cast<std::size_t>(layer) * k + qubit;
  }
};

/// Encoder angles, indexed [layer 0..d_e-1][feature 0..n-1][slot 0..2k-1]
/// row-major. Slots 0..k-1 are the Ry angles per qubit; slots k..2k-1 are
/// the XX ring angles, slot k+j for the pair (j, (j+1) mod k).
struct EncoderParams {
  int k = 0;
  int d_e = 0;
  int n_features = 0;
  std::vector<double> xi;  // size d_e * n_features * 2k

  EncoderParams() = default;
  EncoderParams(int k, int d_e, int n_features);  // zero-initialized
  EncoderParams(int k, int d_e, int n_features, std::vector<double> xi);

  std::size_t size() const { return xi.size(); }
  double& at(int layer, int feature, int slot) { return xi[index(layer, feature, slot)]; }
  double at(int layer, int feature, int slot) const { return xi[index(layer, feature, slot)]; }
  std::size_t index(int layer, int feature, int slot) const {
    return (static_cast<std::size_t>(layer) * n_features + feature) * (2 * k) + slot;
  }
};

namespace detail {
void validate_memory(const MemoryParams& params, const CircuitConfig& config);
void validate_encoder(const EncoderParams& params, std::span<const double> x,
                      const CircuitConfig& config);
}  // namespace detail

/// Single source of truth for the memory-circuit layout: an initial Rx
/// column, then d_m repetitions of [CNOT ring (0->1, 1->2, ..., k-1->0),
/// Rx column].
template <typename Emit>
void for_each_memory_gate(const MemoryParams& params, const CircuitConfig& config,
                          Emit&& emit) {
  detail::validate_memory(params, config);
  const int k = params.k;
  for (int q = 0; q < k; ++q) emit(GateOp::rx(q, params.at(0, q)));
  for (int d = 1; d <= params.d_m; ++d) {
    if (config.memory_entanglers) {
      for (int j = 0; j < k; ++j) emit(GateOp::cnot(j, (j + 1) % k));
    }
    for (int q = 0; q < k; ++q) emit(GateOp::rx(q, params.at(d, q)));
  }
}

/// Single source of truth for the encoder layout. Each of the d_e layers
/// holds, per feature n: an Ry column, the XX ring on pairs
/// (0,1),(1,2),...,(k-1,0) in that order, then Rx(x_n) on every qubit.
template <typename Emit>
void for_each_encoder_gate(const EncoderParams& params, std::span<const double> x,
                           const CircuitConfig& config, Emit&& emit) {
  detail::validate_encoder(params, x, config);
  const int k = params.k;
  for (int d = 0; d < params.d_e; ++d) {
    for (int n = 0; n < params.n_features; ++n) {
      for (int q = 0; q < k; ++q) emit(GateOp::ry(q, params.at(d, n, q)));
      if (config.encoder_entanglers) {
        for (int j = 0; j < k; ++j) {
          emit(GateOp::xx(j, (j + 1) % k, params.at(d, n, k + j)));
        }
      }
      for (int q = 0; q < k; ++q) emit(GateOp::rx(q, x[n]));
    }
  }
}

std::vector<GateOp> build_memory(const MemoryParams& params, const CircuitConfig& config);
std::vector<GateOp> build_encoder(const EncoderParams& params, std::span<const double> x,
                                  const CircuitConfig& config);

/// |Psi> = M_theta |0...0>.
StateVector memory_state(const MemoryParams& params, const CircuitConfig& config);

/// |psi(x)> = E_xi(x) |0...0>.
StateVector encode_state(const EncoderParams& params, std::span<const double> x,
                         const CircuitConfig& config);

/// In-place variant for hot loops; `out` must have the encoder's qubit count.
void encode_state_into(StateVector& out, const EncoderParams& params,
                       std::span<const double> x, const CircuitConfig& config);

struct ParamCount {
  std::size_t memory = 0;
  std::size_t encoder = 0;
};

/// memory = k (d_m + 1); encoder = 2 k n_features d_e.
ParamCount param_count(int k, int d_m, int d_e, int n_features);

/// Minimum over qubits of the reduced single-qubit purity tr(rho_q^2).
/// Equals 1 (within tolerance) iff the state is a product across every
/// single-qubit cut; 0.5 for a maximally mixed marginal.
double product_state_check(const StateVector& state);

}  // namespace vqra
