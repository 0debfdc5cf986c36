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

#include <string>
#include <vector>

#include "vqra/density.hpp"

namespace vqra {

enum class ChannelKind { Identity, Depolarizing, AmplitudeDamping, PhaseDamping };

std::string to_string(ChannelKind kind);
ChannelKind channel_kind_from_string(const std::string& name);

/// Single-qubit channel as a set of 2x2 Kraus operators satisfying the
/// completeness relation sum_k E_k^dagger E_k = I.
struct KrausChannel {
  ChannelKind kind = ChannelKind::Identity;
  double strength = 0.0;
  std::vector<Eigen::Matrix2cd> kraus;

  /// max-abs deviation of sum E^dagger E from the identity.
  double completeness_error() const;
};

KrausChannel identity_channel();

/// Symmetric depolarizing: rho -> p I/2 + (1-p) rho, realized as the Kraus
/// set {sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z}.
KrausChannel depolarizing(double p);

/// Amplitude damping toward |0>: E0 = diag(1, sqrt(1-g)), E1 = sqrt(g)|0><1|.
KrausChannel amplitude_damping(double gamma);

/// Phase damping: E0 = diag(1, sqrt(1-g)), E1 = diag(0, sqrt(g)); populations
/// fixed, coherences scaled by sqrt(1-g).
KrausChannel phase_damping(double gamma);

KrausChannel make_channel(ChannelKind kind, double strength);

/// Noise placement is fixed: the single-qubit channel acts once on every
/// qubit of the encoded register, immediately after the encoder.
struct NoiseSpec {
  KrausChannel channel = identity_channel();

  bool is_identity() const {
    return channel.kind == ChannelKind::Identity || channel.strength == 0.0;
  }
};

/// rho <- (channel on `qubit`) applied to rho.
void apply_channel_qubit(DensityMatrix& rho, const KrausChannel& channel, int qubit);

/// (tensor over qubits of the channel)(rho); qubit order is irrelevant since
/// the factors act on disjoint supports.
DensityMatrix apply_local_noise(const DensityMatrix& rho, const NoiseSpec& spec);

/// Heisenberg-picture counterpart: observable <- sum_k E_k^dagger . E_k per
/// qubit, so that tr[(local noise)(rho) A] = tr[rho (adjoint noise)(A)].
/// Lets <Psi| noisy-rho |Psi> be evaluated as a quadratic form against a
/// once-transformed memory projector.
Eigen::MatrixXcd apply_local_noise_adjoint(const Eigen::MatrixXcd& observable,
                                           const NoiseSpec& spec, int n_qubits);

}  // namespace vqra
