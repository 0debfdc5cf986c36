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

#include <doctest.h>

#include "test_helpers.hpp"
#include "vqra/noise.hpp"
#include "vqra/swap_test.hpp"

using namespace vqra;
using namespace vqra::test;

TEST_CASE("depolarizing channel") {
  SUBCASE("p=1 maps any state to I/2") {
    std::mt19937_64 rng(3);
    const DensityMatrix rho = random_density(1, rng);
    const DensityMatrix out = apply_local_noise(rho, NoiseSpec{depolarizing(1.0)});
    CHECK(max_abs_diff(out.mat(), DensityMatrix::maximally_mixed(1).mat()) < 1e-12);
  }
  SUBCASE("p=0 is the identity") {
    std::mt19937_64 rng(5);
    const DensityMatrix rho = random_density(1, rng);
    const DensityMatrix out = apply_local_noise(rho, NoiseSpec{depolarizing(0.0)});
    CHECK(max_abs_diff(out.mat(), rho.mat()) < 1e-15);
  }
  SUBCASE("p=0.1 on |0><0| gives diag(0.95, 0.05)") {
    DensityMatrix rho(1);
    apply_channel_qubit(rho, depolarizing(0.1), 0);
    CHECK(rho.mat()(0, 0).real() == doctest::Approx(0.95));
    CHECK(rho.mat()(1, 1).real() == doctest::Approx(0.05));
    CHECK(std::abs(rho.mat()(0, 1)) < 1e-15);
  }
  SUBCASE("closed form p I/2 + (1-p) rho on a strength grid") {
    std::mt19937_64 rng(7);
    for (int i = 0; i <= 20; ++i) {
      const double p = i / 20.0;
      const DensityMatrix rho = random_density(1, rng);
      DensityMatrix out = rho;
      apply_channel_qubit(out, depolarizing(p), 0);
      const Eigen::MatrixXcd expected =
          0.5 * p * Eigen::MatrixXcd::Identity(2, 2) + (1.0 - p) * rho.mat();
      CHECK(max_abs_diff(out.mat(), expected) < 1e-12);
    }
  }
  SUBCASE("strength outside [0,1] is rejected") {
    CHECK_THROWS_AS(depolarizing(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(depolarizing(1.1), std::invalid_argument);
  }
}

TEST_CASE("amplitude damping channel") {
  const DensityMatrix one = to_density(StateVector::basis(1, 1));
  SUBCASE("gamma=1 fully decays |1><1| to |0><0|") {
    DensityMatrix rho = one;
    apply_channel_qubit(rho, amplitude_damping(1.0), 0);
    CHECK(rho.mat()(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(rho.mat()(1, 1)) < 1e-15);
  }
  SUBCASE("gamma=0 is the identity") {
    DensityMatrix rho = one;
    apply_channel_qubit(rho, amplitude_damping(0.0), 0);
    CHECK(max_abs_diff(rho.mat(), one.mat()) < 1e-15);
  }
  SUBCASE("gamma=0.2 on |1><1| gives diag(0.2, 0.8)") {
    DensityMatrix rho = one;
    apply_channel_qubit(rho, amplitude_damping(0.2), 0);
    CHECK(rho.mat()(0, 0).real() == doctest::Approx(0.2));
    CHECK(rho.mat()(1, 1).real() == doctest::Approx(0.8));
  }
}

TEST_CASE("phase damping channel") {
  StateVector plus(1);
  apply_gate(plus, GateOp::ry(0, kPi / 2));
  const DensityMatrix plus_rho = to_density(plus);

  SUBCASE("diagonal states are fixed points") {
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(2, 2);
    diag(0, 0) = 0.3;
    diag(1, 1) = 0.7;
    DensityMatrix rho(1, diag);
    apply_channel_qubit(rho, phase_damping(0.63), 0);
    CHECK(max_abs_diff(rho.mat(), diag) < 1e-15);
  }
  SUBCASE("gamma=1 fully dephases |+><+| to I/2") {
    DensityMatrix rho = plus_rho;
    apply_channel_qubit(rho, phase_damping(1.0), 0);
    CHECK(max_abs_diff(rho.mat(), DensityMatrix::maximally_mixed(1).mat()) < 1e-12);
  }
  SUBCASE("gamma=0.36 scales off-diagonals to 0.4") {
    DensityMatrix rho = plus_rho;
    apply_channel_qubit(rho, phase_damping(0.36), 0);
    CHECK(rho.mat()(0, 1).real() == doctest::Approx(0.4));
    CHECK(rho.mat()(0, 0).real() == doctest::Approx(0.5));
  }
}

TEST_CASE("completeness relation on a strength grid") {
  for (ChannelKind kind : {ChannelKind::Depolarizing, ChannelKind::AmplitudeDamping,
                           ChannelKind::PhaseDamping}) {
    for (int i = 0; i <= 20; ++i) {
      CHECK(make_channel(kind, i / 20.0).completeness_error() < 1e-12);
    }
  }
  CHECK(identity_channel().completeness_error() < 1e-15);
}

TEST_CASE("strength zero means identity channel") {
  std::mt19937_64 rng(11);
  const DensityMatrix rho = random_density(2, rng);
  for (ChannelKind kind : {ChannelKind::Depolarizing, ChannelKind::AmplitudeDamping,
                           ChannelKind::PhaseDamping}) {
    const NoiseSpec spec{make_channel(kind, 0.0)};
    CHECK(spec.is_identity());
    const DensityMatrix out = apply_local_noise(rho, spec);
    CHECK(max_abs_diff(out.mat(), rho.mat()) < 1e-12);
  }
}

TEST_CASE("CPTP sanity over random density matrices") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> strength(0.0, 1.0);
  for (int rep = 0; rep < 100; ++rep) {
    const auto kind = static_cast<ChannelKind>(1 + rng() % 3);
    const NoiseSpec spec{make_channel(kind, strength(rng))};
    const int k = 1 + static_cast<int>(rng() % 3);
    const DensityMatrix out = apply_local_noise(random_density(k, rng), spec);
    CHECK(out.hermiticity_error() < 1e-10);
    CHECK(std::abs(out.trace_real() - 1.0) < 1e-10);
    CHECK(out.min_eigenvalue() > -1e-9);
  }
}

TEST_CASE("apply_local_noise") {
  std::mt19937_64 rng(17);
  SUBCASE("identity spec leaves the state unchanged") {
    const DensityMatrix rho = random_density(3, rng);
    CHECK(max_abs_diff(apply_local_noise(rho, NoiseSpec{}).mat(), rho.mat()) < 1e-12);
  }
  SUBCASE("depolarizing p=1 on k=3 gives I/8") {
    const DensityMatrix rho = to_density(StateVector::random(3, rng()));
    const DensityMatrix out = apply_local_noise(rho, NoiseSpec{depolarizing(1.0)});
    CHECK(max_abs_diff(out.mat(), DensityMatrix::maximally_mixed(3).mat()) < 1e-12);
  }
  SUBCASE("qubit order does not matter") {
    const KrausChannel channel = amplitude_damping(0.3);
    const DensityMatrix rho = random_density(3, rng);
    DensityMatrix forward = rho;
    for (int q = 0; q < 3; ++q) apply_channel_qubit(forward, channel, q);
    DensityMatrix backward = rho;
    for (int q = 2; q >= 0; --q) apply_channel_qubit(backward, channel, q);
    CHECK(max_abs_diff(forward.mat(), backward.mat()) < 1e-12);
  }
}

TEST_CASE("noise contracts fidelity toward 2^-k") {
  // Entangled random state; fidelity against its own noisy projector must
  // decrease strictly in p and end at 1/2^k.
  StateVector psi = StateVector::random(3, 191);
  const DensityMatrix rho = to_density(psi);
  double previous = 2.0;
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const double fidelity =
        fidelity_pure_mixed(psi, apply_local_noise(rho, NoiseSpec{depolarizing(p)}));
    CHECK(fidelity < previous);
    previous = fidelity;
  }
  CHECK(previous == doctest::Approx(1.0 / 8.0).epsilon(1e-9));
}

TEST_CASE("adjoint application is the Hilbert-Schmidt dual") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> strength(0.0, 1.0);
  for (int rep = 0; rep < 30; ++rep) {
    const auto kind = static_cast<ChannelKind>(1 + rng() % 3);
    const NoiseSpec spec{make_channel(kind, strength(rng))};
    const StateVector big_psi = StateVector::random(3, rng());
    const StateVector psi_x = StateVector::random(3, rng());
    const double direct =
        fidelity_pure_mixed(big_psi, apply_local_noise(to_density(psi_x), spec));
    const Eigen::MatrixXcd observable = apply_local_noise_adjoint(
        big_psi.amps() * big_psi.amps().adjoint(), spec, 3);
    const double dual = psi_x.amps().dot(observable * psi_x.amps()).real();
    CHECK(std::abs(direct - dual) < 1e-12);
  }
}

TEST_CASE("channel name round-trip") {
  for (ChannelKind kind : {ChannelKind::Identity, ChannelKind::Depolarizing,
                           ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping}) {
    CHECK(channel_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(channel_kind_from_string("bitflip"), std::invalid_argument);
}
