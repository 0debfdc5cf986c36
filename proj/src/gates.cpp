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

#include "vqra/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vqra/detail/kernels.hpp"

namespace vqra {

namespace {

void check_angle(double angle) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("GateOp: non-finite angle");
  }
}

void check_qubit(int qubit, int k, const char* what) {
  if (qubit < 0 || qubit >= k) {
    throw std::out_of_range(std::string("apply_gate: ") + what + " qubit " +
                            std::to_string(qubit) + " out of range for k=" +
                            std::to_string(k));
  }
}

using Eigen::MatrixXcd;

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

MatrixXcd identity_dim(Eigen::Index d) { return MatrixXcd::Identity(d, d); }

/// Permutation matrix sending the standard wire order to `order` (a
/// permutation of 0..k-1): the basis state with standard bits b_q maps to the
/// index whose p-th bit (MSB first) is b_{order[p]}.
MatrixXcd wire_permutation(int k, const std::vector<int>& order) {
  const Eigen::Index dim = Eigen::Index(1) << k;
  MatrixXcd perm = MatrixXcd::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    Eigen::Index n = 0;
    for (int p = 0; p < k; ++p) {
      const int bit = static_cast<int>((s >> (k - 1 - order[p])) & 1);
      n |= Eigen::Index(bit) << (k - 1 - p);
    }
    perm(n, s) = 1.0;
  }
  return perm;
}

}  // namespace

GateOp GateOp::rx(int qubit, double angle) {
  check_angle(angle);
  return GateOp{GateKind::Rx, angle, qubit, 0};
}

GateOp GateOp::ry(int qubit, double angle) {
  check_angle(angle);
  return GateOp{GateKind::Ry, angle, qubit, 0};
}

GateOp GateOp::cnot(int control, int target) {
  if (control == target) {
    throw std::invalid_argument("GateOp::cnot: control == target");
  }
  return GateOp{GateKind::Cnot, 0.0, control, target};
}

GateOp GateOp::xx(int qubit_a, int qubit_b, double angle) {
  check_angle(angle);
  if (qubit_a == qubit_b) {
    throw std::invalid_argument("GateOp::xx: identical qubits");
  }
  return GateOp{GateKind::Xx, angle, qubit_a, qubit_b};
}

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::Rx: return "Rx";
    case GateKind::Ry: return "Ry";
    case GateKind::Cnot: return "Cnot";
    case GateKind::Xx: return "Xx";
  }
  return "?";
}

void apply_gate(StateVector& state, const GateOp& gate) {
  const int k = state.n_qubits();
  Complex* data = state.amps().data();
  switch (gate.kind) {
    case GateKind::Rx: {
      check_qubit(gate.q0, k, "target");
      detail::apply_rx(data, 1, k, gate.q0, std::cos(gate.angle / 2),
                       std::sin(gate.angle / 2));
      return;
    }
    case GateKind::Ry: {
      check_qubit(gate.q0, k, "target");
      detail::apply_ry(data, 1, k, gate.q0, std::cos(gate.angle / 2),
                       std::sin(gate.angle / 2));
      return;
    }
    case GateKind::Cnot: {
      check_qubit(gate.q0, k, "control");
      check_qubit(gate.q1, k, "target");
      detail::apply_cnot(data, 1, k, gate.q0, gate.q1);
      return;
    }
    case GateKind::Xx: {
      check_qubit(gate.q0, k, "first");
      check_qubit(gate.q1, k, "second");
      detail::apply_xx(data, 1, k, gate.q0, gate.q1, std::cos(gate.angle),
                       std::sin(gate.angle));
      return;
    }
  }
}

void apply_gates(StateVector& state, std::span<const GateOp> gates) {
  for (const GateOp& g : gates) apply_gate(state, g);
}

Eigen::Matrix2cd rx_matrix(double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  Eigen::Matrix2cd m;
  m << Complex(c, 0), Complex(0, -s), Complex(0, -s), Complex(c, 0);
  return m;
}

Eigen::Matrix2cd ry_matrix(double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  Eigen::Matrix2cd m;
  m << Complex(c, 0), Complex(-s, 0), Complex(s, 0), Complex(c, 0);
  return m;
}

Eigen::Matrix4cd cnot_matrix() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

Eigen::Matrix4cd xx_matrix(double angle) {
  const Complex c(std::cos(angle), 0.0);
  const Complex is(0.0, std::sin(angle));
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = c;
  m(1, 1) = c;
  m(2, 2) = c;
  m(3, 3) = c;
  m(0, 3) = -is;
  m(1, 2) = -is;
  m(2, 1) = -is;
  m(3, 0) = -is;
  return m;
}

Eigen::MatrixXcd gate_matrix_oracle(const GateOp& gate, int k) {
  constexpr int kOracleCap = 6;
  if (k < 1 || k > kOracleCap) {
    throw std::invalid_argument("gate_matrix_oracle: k must be in [1, 6], got " +
                                std::to_string(k));
  }
  const auto embed_1q = [&](const Eigen::Matrix2cd& m, int q) {
    check_qubit(q, k, "target");
    MatrixXcd u = identity_dim(Eigen::Index(1) << q);
    u = kron(u, m);
    u = kron(u, identity_dim(Eigen::Index(1) << (k - 1 - q)));
    return u;
  };
  const auto embed_2q = [&](const Eigen::Matrix4cd& m, int qa, int qb) {
    check_qubit(qa, k, "first");
    check_qubit(qb, k, "second");
    std::vector<int> order = {qa, qb};
    for (int q = 0; q < k; ++q) {
      if (q != qa && q != qb) order.push_back(q);
    }
    const MatrixXcd big = kron(m, identity_dim(Eigen::Index(1) << (k - 2)));
    const MatrixXcd perm = wire_permutation(k, order);
    return MatrixXcd(perm.transpose() * big * perm);
  };

  switch (gate.kind) {
    case GateKind::Rx: return embed_1q(rx_matrix(gate.angle), gate.q0);
    case GateKind::Ry: return embed_1q(ry_matrix(gate.angle), gate.q0);
    case GateKind::Cnot: return embed_2q(cnot_matrix(), gate.q0, gate.q1);
    case GateKind::Xx: return embed_2q(xx_matrix(gate.angle), gate.q0, gate.q1);
  }
  throw std::logic_error("gate_matrix_oracle: unreachable");
}

}  // namespace vqra
