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

#include "vqra/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "vqra/detail/kernels.hpp"

namespace vqra {

namespace {

void check_strength(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": strength must be in [0, 1], got " +
                                std::to_string(value));
  }
}

/// B <- sum_k L_k B R_k with 2x2 factors acting on one qubit: L over the row
/// index, R over the column index. Works for K rho K^dagger (L = K,
/// R = K^dagger) and for K^dagger A K alike.
Eigen::MatrixXcd kraus_conjugate_qubit(const Eigen::MatrixXcd& mat, int n_qubits,
                                       int qubit,
                                       const std::vector<Eigen::Matrix2cd>& kraus,
                                       bool adjoint_action) {
  const Eigen::Index dim = mat.rows();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd term(dim, dim);
  for (const Eigen::Matrix2cd& e : kraus) {
    // adjoint_action computes E^dagger . E instead of E . E^dagger.
    // Multiplying by M from the right acts on each row vector w as
    // w'[j] = sum_b M^T(j,b) w[b], hence the transposed/conjugated forms.
    Eigen::Matrix2cd left;
    Eigen::Matrix2cd right;
    if (adjoint_action) {
      left = e.adjoint();
      right = e.transpose();
    } else {
      left = e;
      right = e.conjugate();
    }
    term = mat;
    Complex* data = term.data();
    for (Eigen::Index col = 0; col < dim; ++col) {
      detail::apply_2x2(data + col * dim, 1, n_qubits, qubit, left(0, 0), left(0, 1),
                        left(1, 0), left(1, 1));
    }
    for (Eigen::Index row = 0; row < dim; ++row) {
      detail::apply_2x2(data + row, dim, n_qubits, qubit, right(0, 0), right(0, 1),
                        right(1, 0), right(1, 1));
    }
    out += term;
  }
  return out;
}

}  // namespace

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::Identity: return "none";
    case ChannelKind::Depolarizing: return "depolarizing";
    case ChannelKind::AmplitudeDamping: return "amplitude_damping";
    case ChannelKind::PhaseDamping: return "phase_damping";
  }
  return "?";
}

ChannelKind channel_kind_from_string(const std::string& name) {
  if (name == "none" || name == "identity") return ChannelKind::Identity;
  if (name == "depolarizing") return ChannelKind::Depolarizing;
  if (name == "amplitude_damping") return ChannelKind::AmplitudeDamping;
  if (name == "phase_damping") return ChannelKind::PhaseDamping;
  throw std::invalid_argument("unknown noise channel '" + name + "'");
}

double KrausChannel::completeness_error() const {
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
  for (const auto& e : kraus) sum += e.adjoint() * e;
  return (sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
}

KrausChannel identity_channel() {
  KrausChannel ch;
  ch.kind = ChannelKind::Identity;
  ch.strength = 0.0;
  ch.kraus = {Eigen::Matrix2cd::Identity()};
  return ch;
}

KrausChannel depolarizing(double p) {
  check_strength(p, "depolarizing");
  KrausChannel ch;
  ch.kind = ChannelKind::Depolarizing;
  ch.strength = p;
  Eigen::Matrix2cd x, y, z;
  x << 0, 1, 1, 0;
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  z << 1, 0, 0, -1;
  ch.kraus = {std::sqrt(1.0 - 0.75 * p) * Eigen::Matrix2cd::Identity(),
              std::sqrt(0.25 * p) * x, std::sqrt(0.25 * p) * y,
              std::sqrt(0.25 * p) * z};
  return ch;
}

KrausChannel amplitude_damping(double gamma) {
  check_strength(gamma, "amplitude_damping");
  KrausChannel ch;
  ch.kind = ChannelKind::AmplitudeDamping;
  ch.strength = gamma;
  Eigen::Matrix2cd e0 = Eigen::Matrix2cd::Zero();
  Eigen::Matrix2cd e1 = Eigen::Matrix2cd::Zero();
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - gamma);
  e1(0, 1) = std::sqrt(gamma);
  ch.kraus = {e0, e1};
  return ch;
}

KrausChannel phase_damping(double gamma) {
  check_strength(gamma, "phase_damping");
  KrausChannel ch;
  ch.kind = ChannelKind::PhaseDamping;
  ch.strength = gamma;
  Eigen::Matrix2cd e0 = Eigen::Matrix2cd::Zero();
  Eigen::Matrix2cd e1 = Eigen::Matrix2cd::Zero();
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - gamma);
  e1(1, 1) = std::sqrt(gamma);
  ch.kraus = {e0, e1};
  return ch;
}

KrausChannel make_channel(ChannelKind kind, double strength) {
  switch (kind) {
    case ChannelKind::Identity: return identity_channel();
    case ChannelKind::Depolarizing: return depolarizing(strength);
    case ChannelKind::AmplitudeDamping: return amplitude_damping(strength);
    case ChannelKind::PhaseDamping: return phase_damping(strength);
  }
  throw std::logic_error("make_channel: unreachable");
}

void apply_channel_qubit(DensityMatrix& rho, const KrausChannel& channel, int qubit) {
  if (qubit < 0 || qubit >= rho.n_qubits()) {
    throw std::out_of_range("apply_channel_qubit: qubit out of range");
  }
  rho.mat() = kraus_conjugate_qubit(rho.mat(), rho.n_qubits(), qubit, channel.kraus,
                                    /*adjoint_action=*/false);
}

DensityMatrix apply_local_noise(const DensityMatrix& rho, const NoiseSpec& spec) {
  DensityMatrix out = rho;
  if (spec.is_identity()) return out;
  for (int q = 0; q < rho.n_qubits(); ++q) {
    apply_channel_qubit(out, spec.channel, q);
  }
  return out;
}

Eigen::MatrixXcd apply_local_noise_adjoint(const Eigen::MatrixXcd& observable,
                                           const NoiseSpec& spec, int n_qubits) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  if (observable.rows() != dim || observable.cols() != dim) {
    throw std::invalid_argument("apply_local_noise_adjoint: dimension mismatch");
  }
  Eigen::MatrixXcd out = observable;
  if (spec.is_identity()) return out;
  for (int q = 0; q < n_qubits; ++q) {
    out = kraus_conjugate_qubit(out, n_qubits, q, spec.channel.kraus,
                                /*adjoint_action=*/true);
  }
  return out;
}

}  // namespace vqra
