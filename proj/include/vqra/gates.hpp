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

#include <span>
#include <string>

#include "vqra/state.hpp"

namespace vqra {

/// Gate conventions:
///   Rx(theta) = exp(-i theta X / 2)
///   Ry(theta) = exp(-i theta Y / 2)
///   Xx(xi)    = exp(-i xi X(a) X(b))   -- full angle, no half
/// Single-qubit rotations use the standard half-angle; the two-qubit XX
/// coupling is written with the bare angle in its exponent.
enum class GateKind { Rx, Ry, Cnot, Xx };

struct GateOp {
  GateKind kind;
  double angle = 0.0;  // Rx/Ry/Xx; unused for Cnot
  int q0 = 0;          // Rx/Ry target, Cnot control, Xx first qubit
  int q1 = 0;          // Cnot target, Xx second qubit

  static GateOp rx(int qubit, double angle);
  static GateOp ry(int qubit, double angle);
  static GateOp cnot(int control, int target);
  static GateOp xx(int qubit_a, int qubit_b, double angle);
};

std::string to_string(GateKind kind);

/// Applies the gate's unitary in place. Throws std::out_of_range for qubit
/// indices outside the register.
void apply_gate(StateVector& state, const GateOp& gate);

void apply_gates(StateVector& state, std::span<const GateOp> gates);

/// Full 2^k x 2^k unitary of a gate, assembled from explicit Kronecker
/// products of 2x2 / 4x4 blocks with identities (plus a wire permutation for
/// non-adjacent two-qubit gates). Independent of the strided kernels; exists
/// to cross-check apply_gate. k <= 6.
Eigen::MatrixXcd gate_matrix_oracle(const GateOp& gate, int k);

/// 2x2 and 4x4 building blocks in the conventions above.
Eigen::Matrix2cd rx_matrix(double angle);
Eigen::Matrix2cd ry_matrix(double angle);
Eigen::Matrix4cd cnot_matrix();
Eigen::Matrix4cd xx_matrix(double angle);

}  // namespace vqra
