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

#include "vqra/density.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vqra/detail/kernels.hpp"

namespace vqra {

namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxDensityQubits) {
    throw std::invalid_argument("DensityMatrix: n_qubits must be in [1, " +
                                std::to_string(kMaxDensityQubits) + "], got " +
                                std::to_string(n_qubits));
  }
}

void check_qubit(int qubit, int k) {
  if (qubit < 0 || qubit >= k) {
    throw std::out_of_range("apply_gate_dm: qubit " + std::to_string(qubit) +
                            " out of range for k=" + std::to_string(k));
  }
}

}  // namespace

DensityMatrix::DensityMatrix(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  mat_ = Eigen::MatrixXcd::Zero(dim, dim);
  mat_(0, 0) = 1.0;
}

DensityMatrix::DensityMatrix(int n_qubits, Eigen::MatrixXcd mat) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  if (mat.rows() != dim || mat.cols() != dim) {
    throw std::invalid_argument("DensityMatrix: expected " + std::to_string(dim) +
                                "x" + std::to_string(dim) + " matrix");
  }
  if (!mat.allFinite()) {
    throw std::invalid_argument("DensityMatrix: non-finite entry");
  }
  mat_ = std::move(mat);
  if (hermiticity_error() > 1e-6) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  if (std::abs(trace_real() - 1.0) > 1e-6 || std::abs(mat_.trace().imag()) > 1e-6) {
    throw std::invalid_argument("DensityMatrix: trace must be 1");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  check_qubit_count(n_qubits);
  DensityMatrix rho(n_qubits);
  const Eigen::Index dim = rho.dim();
  rho.mat_ = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
  return rho;
}

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

double DensityMatrix::hermiticity_error() const {
  return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat_,
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

DensityMatrix to_density(const StateVector& psi) {
  if (psi.n_qubits() > kMaxDensityQubits) {
    throw std::invalid_argument("to_density: state exceeds density-matrix cap k=" +
                                std::to_string(kMaxDensityQubits));
  }
  DensityMatrix rho(psi.n_qubits());
  rho.mat() = psi.amps() * psi.amps().adjoint();
  return rho;
}

void apply_gate_dm(DensityMatrix& rho, const GateOp& gate) {
  const int k = rho.n_qubits();
  const Eigen::Index dim = rho.dim();
  Complex* data = rho.mat().data();

  // rho <- U rho: the gate kernel over the row index of every column, then
  // rho <- rho U^dagger: the conjugated kernel over the column index of every
  // row (column-major storage: columns have stride 1, rows stride `dim`).
  switch (gate.kind) {
    case GateKind::Rx: {
      check_qubit(gate.q0, k);
      const double c = std::cos(gate.angle / 2);
      const double s = std::sin(gate.angle / 2);
      for (Eigen::Index col = 0; col < dim; ++col)
        detail::apply_rx(data + col * dim, 1, k, gate.q0, c, s);
      for (Eigen::Index row = 0; row < dim; ++row)
        detail::apply_rx(data + row, dim, k, gate.q0, c, s, /*conjugated=*/true);
      return;
    }
    case GateKind::Ry: {
      check_qubit(gate.q0, k);
      const double c = std::cos(gate.angle / 2);
      const double s = std::sin(gate.angle / 2);
      for (Eigen::Index col = 0; col < dim; ++col)
        detail::apply_ry(data + col * dim, 1, k, gate.q0, c, s);
      for (Eigen::Index row = 0; row < dim; ++row)
        detail::apply_ry(data + row, dim, k, gate.q0, c, s);
      return;
    }
    case GateKind::Cnot: {
      check_qubit(gate.q0, k);
      check_qubit(gate.q1, k);
      for (Eigen::Index col = 0; col < dim; ++col)
        detail::apply_cnot(data + col * dim, 1, k, gate.q0, gate.q1);
      for (Eigen::Index row = 0; row < dim; ++row)
        detail::apply_cnot(data + row, dim, k, gate.q0, gate.q1);
      return;
    }
    case GateKind::Xx: {
      check_qubit(gate.q0, k);
      check_qubit(gate.q1, k);
      const double c = std::cos(gate.angle);
      const double s = std::sin(gate.angle);
      for (Eigen::Index col = 0; col < dim; ++col)
        detail::apply_xx(data + col * dim, 1, k, gate.q0, gate.q1, c, s);
      for (Eigen::Index row = 0; row < dim; ++row)
        detail::apply_xx(data + row, dim, k, gate.q0, gate.q1, c, s,
                         /*conjugated=*/true);
      return;
    }
  }
}

double fidelity_pure_mixed(const StateVector& psi, const DensityMatrix& rho) {
  if (psi.n_qubits() != rho.n_qubits()) {
    throw std::invalid_argument("fidelity_pure_mixed: qubit-count mismatch (" +
                                std::to_string(psi.n_qubits()) + " vs " +
                                std::to_string(rho.n_qubits()) + ")");
  }
  const Complex value = psi.amps().dot(rho.mat() * psi.amps());
  return value.real();
}

}  // namespace vqra
