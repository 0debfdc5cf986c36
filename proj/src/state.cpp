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

#include "vqra/state.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace vqra {

namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxStateQubits) {
    throw std::invalid_argument("StateVector: n_qubits must be in [1, " +
                                std::to_string(kMaxStateQubits) + "], got " +
                                std::to_string(n_qubits));
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amps_ = Eigen::VectorXcd::Zero(Eigen::Index(1) << n_qubits);
  amps_[0] = Complex(1.0, 0.0);
}

StateVector::StateVector(int n_qubits, Eigen::VectorXcd amps) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  const Eigen::Index expected = Eigen::Index(1) << n_qubits;
  if (amps.size() != expected) {
    throw std::invalid_argument("StateVector: amplitude length " +
                                std::to_string(amps.size()) + " != 2^" +
                                std::to_string(n_qubits));
  }
  if (!amps.allFinite()) {
    throw std::invalid_argument("StateVector: non-finite amplitude");
  }
  amps_ = std::move(amps);
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  check_qubit_count(n_qubits);
  const std::uint64_t dim = std::uint64_t(1) << n_qubits;
  if (index >= dim) {
    throw std::out_of_range("StateVector::basis: index " + std::to_string(index) +
                            " out of range for " + std::to_string(n_qubits) + " qubits");
  }
  StateVector s(n_qubits);
  s.amps_[0] = Complex(0.0, 0.0);
  s.amps_[static_cast<Eigen::Index>(index)] = Complex(1.0, 0.0);
  return s;
}

StateVector StateVector::random(int n_qubits, std::uint64_t seed) {
  check_qubit_count(n_qubits);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd amps(Eigen::Index(1) << n_qubits);
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    amps[i] = Complex(re, im);
  }
  amps /= amps.norm();
  return StateVector(n_qubits, std::move(amps));
}

void StateVector::set_zero_state() {
  amps_.setZero();
  amps_[0] = Complex(1.0, 0.0);
}

}  // namespace vqra
