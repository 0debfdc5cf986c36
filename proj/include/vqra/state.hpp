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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace vqra {

using Complex = std::complex<double>;

/// Dense-representation caps. Statevectors are 2^k amplitudes, density
/// matrices 2^k x 2^k entries; the literal swap-test circuit needs 2k+1
/// statevector qubits and therefore tops out at k = 5.
inline constexpr int kMaxStateQubits = 12;
inline constexpr int kMaxDensityQubits = 8;

/// Pure state of k qubits as a dense amplitude vector of length 2^k.
///
/// Basis-index convention: qubit 0 is the most significant bit of the index,
/// so |q0 q1 ... q_{k-1}> maps to index q0*2^{k-1} + ... + q_{k-1}.
class StateVector {
 public:
  /// |0...0> on `n_qubits` qubits.
  explicit StateVector(int n_qubits);

  /// Wraps an amplitude vector. Throws if the length is not 2^n_qubits or
  /// any component is non-finite. Amplitudes are taken as-is (no
  /// renormalization).
  StateVector(int n_qubits, Eigen::VectorXcd amps);

  /// Computational basis state |index>.
  static StateVector basis(int n_qubits, std::uint64_t index);

  /// Haar-random pure state from a seeded generator (normalized complex
  /// Gaussian vector). Deterministic per seed.
  static StateVector random(int n_qubits, std::uint64_t seed);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Eigen::VectorXcd& amps() const { return amps_; }
  Eigen::VectorXcd& amps() { return amps_; }

  double norm() const { return amps_.norm(); }

  /// Resets to |0...0> without reallocating.
  void set_zero_state();

 private:
  int n_qubits_;
  Eigen::VectorXcd amps_;
};

}  // namespace vqra
