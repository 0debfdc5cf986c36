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

#include "vqra/gates.hpp"
#include "vqra/state.hpp"

namespace vqra {

/// Mixed state of k qubits as a dense 2^k x 2^k matrix. Same basis-index
/// convention as StateVector (qubit 0 = most significant bit).
class DensityMatrix {
 public:
  /// |0...0><0...0|.
  explicit DensityMatrix(int n_qubits);

  /// Wraps a matrix. Throws on wrong dimensions, non-finite entries, or a
  /// matrix that is grossly non-Hermitian / non-unit-trace (1e-6); exact
  /// invariants are maintained by the operations, not re-checked per call.
  DensityMatrix(int n_qubits, Eigen::MatrixXcd mat);

  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return mat_.rows(); }
  const Eigen::MatrixXcd& mat() const { return mat_; }
  Eigen::MatrixXcd& mat() { return mat_; }

  double trace_real() const { return mat_.trace().real(); }
  double purity() const;              // tr(rho^2), real for Hermitian rho
  double hermiticity_error() const;   // max |rho - rho^dagger|
  double min_eigenvalue() const;      // via self-adjoint eigensolver

 private:
  int n_qubits_;
  Eigen::MatrixXcd mat_;
};

/// rho = |psi><psi|.
DensityMatrix to_density(const StateVector& psi);

/// rho <- U rho U^dagger, in place.
void apply_gate_dm(DensityMatrix& rho, const GateOp& gate);

/// <psi| rho |psi>; equals |<psi|phi>|^2 when rho = |phi><phi|.
double fidelity_pure_mixed(const StateVector& psi, const DensityMatrix& rho);

}  // namespace vqra
