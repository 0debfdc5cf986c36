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

#include "vqra/selftest.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "vqra/experiments.hpp"
#include "vqra/serialize.hpp"

namespace vqra {

namespace {

struct Suite {
  std::vector<CheckResult> results;
  std::string fault;

  void add(const std::string& name, bool passed, const std::string& detail) {
    results.push_back({name, passed, detail});
  }

  /// passes iff |measured| <= tol
  void add_tol(const std::string& name, double measured, double tol) {
    std::ostringstream detail;
    detail << "max error " << measured << " (tolerance " << tol << ")";
    add(name, std::abs(measured) <= tol, detail.str());
  }
};

GateOp random_gate(GateKind kind, int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_int_distribution<int> qubit(0, k - 1);
  switch (kind) {
    case GateKind::Rx: return GateOp::rx(qubit(rng), angle(rng));
    case GateKind::Ry: return GateOp::ry(qubit(rng), angle(rng));
    case GateKind::Cnot: {
      const int c = qubit(rng);
      int t = qubit(rng);
      while (t == c) t = qubit(rng);
      return GateOp::cnot(c, t);
    }
    case GateKind::Xx: {
      const int a = qubit(rng);
      int b = qubit(rng);
      while (b == a) b = qubit(rng);
      return GateOp::xx(a, b, angle(rng));
    }
  }
  throw std::logic_error("random_gate: unreachable");
}

DensityMatrix random_density(int k, std::mt19937_64& rng) {
  const Eigen::Index dim = Eigen::Index(1) << k;
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint().eval()) / 2.0;  // exact Hermiticity
  return DensityMatrix(k, rho);
}

void check_gate_oracles(Suite& suite) {
  for (GateKind kind : {GateKind::Rx, GateKind::Ry, GateKind::Cnot, GateKind::Xx}) {
    std::mt19937_64 rng(11 + static_cast<int>(kind));
    double worst = 0.0;
    for (int k = (kind == GateKind::Rx || kind == GateKind::Ry) ? 1 : 2; k <= 4; ++k) {
      for (int rep = 0; rep < 10; ++rep) {
        const GateOp gate = random_gate(kind, k, rng);
        StateVector state = StateVector::random(k, rng());
        const Eigen::VectorXcd expected = gate_matrix_oracle(gate, k) * state.amps();
        apply_gate(state, gate);
        worst = std::max(worst, (state.amps() - expected).cwiseAbs().maxCoeff());
      }
    }
    suite.add_tol("gate oracle: " + to_string(kind), worst, 1e-10);
  }
}

void check_norm_preservation(Suite& suite) {
  std::mt19937_64 rng(23);
  double worst = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    StateVector state = StateVector::random(3, rng());
    for (int g = 0; g < 100; ++g) {
      const auto kind = static_cast<GateKind>(rng() % 4);
      apply_gate(state, random_gate(kind, 3, rng));
    }
    worst = std::max(worst, std::abs(state.norm() - 1.0));
  }
  suite.add_tol("norm preservation", worst, 1e-9);
}

void check_overlap(Suite& suite) {
  std::mt19937_64 rng(31);
  double worst_sym = 0.0;
  double worst_bound = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const StateVector a = StateVector::random(3, rng());
    const StateVector b = StateVector::random(3, rng());
    const Complex ab = overlap(a, b);
    const Complex ba = overlap(b, a);
    worst_sym = std::max(worst_sym, std::abs(ab - std::conj(ba)));
    worst_bound = std::max(worst_bound, std::abs(ab) - 1.0);
  }
  suite.add_tol("overlap symmetry", worst_sym, 1e-12);
  suite.add_tol("overlap bound", std::max(worst_bound, 0.0), 1e-10);
}

void check_swap_test_law(Suite& suite) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double worst = 0.0;
  for (int k = 1; k <= 3; ++k) {
    for (int rep = 0; rep < 15; ++rep) {
      const StateVector psi = StateVector::random(k, rng());
      // Build phi by a short random circuit so the fault hook can corrupt
      // the convention used on the circuit side only.
      StateVector phi(k);
      StateVector phi_for_circuit(k);
      for (int q = 0; q < k; ++q) {
        const double a = angle(rng);
        const double corrupted =
            suite.fault == "gate-convention" ? a * 1.01 : a;
        apply_gate(phi, GateOp::rx(q, a));
        apply_gate(phi_for_circuit, GateOp::rx(q, corrupted));
        apply_gate(phi, GateOp::ry(q, a / 2));
        apply_gate(phi_for_circuit, GateOp::ry(q, corrupted / 2));
      }
      const double law = swap_test_p0(psi, phi);
      const double circuit = swap_test_circuit_exact(psi, phi_for_circuit);
      worst = std::max(worst, std::abs(law - circuit));
    }
  }
  suite.add_tol("swap-test law", worst, 1e-10);
}

void check_pure_state_consistency(Suite& suite) {
  std::mt19937_64 rng(41);
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const StateVector psi = StateVector::random(3, rng());
    const StateVector phi = StateVector::random(3, rng());
    const double via_dm = fidelity_pure_mixed(psi, to_density(phi));
    const double direct = std::norm(overlap(psi, phi));
    worst = std::max(worst, std::abs(via_dm - direct));
  }
  suite.add_tol("pure-state consistency", worst, 1e-10);
}

void check_purity(Suite& suite) {
  std::mt19937_64 rng(43);
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const DensityMatrix rho = to_density(StateVector::random(3, rng()));
    worst = std::max(worst, std::abs(rho.purity() - 1.0));
  }
  suite.add_tol("to_density purity", worst, 1e-10);
}

void check_channels(Suite& suite) {
  for (ChannelKind kind : {ChannelKind::Depolarizing, ChannelKind::AmplitudeDamping,
                           ChannelKind::PhaseDamping}) {
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
      const double strength = i / 20.0;
      worst = std::max(worst, make_channel(kind, strength).completeness_error());
    }
    suite.add_tol("channel completeness: " + to_string(kind), worst, 1e-12);
  }

  std::mt19937_64 rng(47);
  double worst_closed = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const NoiseSpec spec{depolarizing(p)};
    for (int rep = 0; rep < 5; ++rep) {
      const DensityMatrix rho = random_density(1, rng);
      const DensityMatrix noisy = apply_local_noise(rho, spec);
      const Eigen::MatrixXcd expected =
          0.5 * p * Eigen::MatrixXcd::Identity(2, 2) + (1.0 - p) * rho.mat();
      worst_closed =
          std::max(worst_closed, (noisy.mat() - expected).cwiseAbs().maxCoeff());
    }
  }
  suite.add_tol("depolarizing closed form", worst_closed, 1e-12);

  double worst_herm = 0.0, worst_trace = 0.0, worst_eig = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const auto kind = static_cast<ChannelKind>(1 + rng() % 3);
    std::uniform_real_distribution<double> strength(0.0, 1.0);
    const NoiseSpec spec{make_channel(kind, strength(rng))};
    const DensityMatrix out = apply_local_noise(random_density(2, rng), spec);
    worst_herm = std::max(worst_herm, out.hermiticity_error());
    worst_trace = std::max(worst_trace, std::abs(out.trace_real() - 1.0));
    worst_eig = std::max(worst_eig, -out.min_eigenvalue());
  }
  suite.add_tol("cptp sanity: hermitian", worst_herm, 1e-10);
  suite.add_tol("cptp sanity: trace", worst_trace, 1e-10);
  suite.add_tol("cptp sanity: positive", std::max(worst_eig, 0.0), 1e-9);

  // Full depolarizing drives any pure state to the maximally mixed state.
  const StateVector psi = StateVector::random(3, 99);
  const DensityMatrix mixed = apply_local_noise(to_density(psi), NoiseSpec{depolarizing(1.0)});
  suite.add_tol("noise fixed point p=1",
                (mixed.mat() - DensityMatrix::maximally_mixed(3).mat()).cwiseAbs().maxCoeff(),
                1e-12);
}

void check_adjoint_duality(Suite& suite) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> strength(0.0, 1.0);
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const auto kind = static_cast<ChannelKind>(1 + rng() % 3);
    const NoiseSpec spec{make_channel(kind, strength(rng))};
    const StateVector big_psi = StateVector::random(3, rng());
    const StateVector psi_x = StateVector::random(3, rng());
    const double direct =
        fidelity_pure_mixed(big_psi, apply_local_noise(to_density(psi_x), spec));
    const Eigen::MatrixXcd observable = apply_local_noise_adjoint(
        big_psi.amps() * big_psi.amps().adjoint(), spec, 3);
    const double dual = (psi_x.amps().dot(observable * psi_x.amps())).real();
    worst = std::max(worst, std::abs(direct - dual));
  }
  suite.add_tol("adjoint-noise duality", worst, 1e-12);
}

void check_shots(Suite& suite) {
  const StateVector psi(2);
  StateVector phi(2);
  apply_gate(phi, GateOp::ry(0, 1.1));
  apply_gate(phi, GateOp::ry(1, -0.4));
  const DensityMatrix rho = to_density(phi);
  const double p0 = swap_test_p0(psi, rho);

  const double est1 = swap_test_shots(psi, rho, 20000, 7);
  const double est2 = swap_test_shots(psi, rho, 20000, 7);
  suite.add("shot estimator determinism", est1 == est2,
            "two seeded runs: " + format_double(est1) + " vs " + format_double(est2));

  const double bound = 5.0 * std::sqrt(p0 * (1.0 - p0) / 20000.0);
  suite.add_tol("shot estimator concentration", std::abs(est1 - p0),
                std::max(bound, 1e-6));
}

void check_gradients(Suite& suite) {
  const Objective square = [](const Eigen::VectorXd& p) { return p[0] * p[0]; };
  Eigen::VectorXd at(1);
  at << 1.0;
  const double g = numerical_gradient(square, at, 1e-4)[0];
  suite.add_tol("gradient: quadratic", g - 2.0, 1e-7);

  // Richardson extrapolation oracle on the model loss.
  const ExperimentSpec spec = [] {
    ExperimentSpec s;
    s.d_e = 2;
    s.sample_count = 8;
    s.train.seed = 5;
    return s;
  }();
  const Dataset data = spec.make_data();
  VqraModel scratch = spec.make_model();
  const Objective loss = [&scratch, &data](const Eigen::VectorXd& p) {
    scratch.set_parameter_vector(p);
    return scratch.loss(data).total;
  };
  std::mt19937_64 rng(59);
  double worst_rel = 0.0;
  for (int rep = 0; rep < 3; ++rep) {
    const Eigen::VectorXd point = random_initial_params(
        static_cast<Eigen::Index>(scratch.parameter_count()), rng());
    const double h = 1e-3;
    const Eigen::VectorXd g_h = numerical_gradient(loss, point, h);
    const Eigen::VectorXd g_h2 = numerical_gradient(loss, point, h / 2);
    const Eigen::VectorXd oracle = (4.0 * g_h2 - g_h) / 3.0;
    const Eigen::VectorXd probe = numerical_gradient(loss, point, 1e-4);
    const double rel = (probe - oracle).norm() / std::max(oracle.norm(), 1e-12);
    worst_rel = std::max(worst_rel, rel);
  }
  suite.add_tol("gradient: richardson oracle", worst_rel, 1e-3);

  AdamState adam = AdamState::init(1);
  Eigen::VectorXd params = Eigen::VectorXd::Zero(1);
  Eigen::VectorXd grad = Eigen::VectorXd::Ones(1);
  adam_step(adam, params, grad);
  suite.add_tol("adam first step", params[0] + adam.lr, 1e-6);
}

void check_training_determinism(Suite& suite) {
  ExperimentSpec spec;
  spec.d_e = 1;
  spec.sample_count = 6;
  spec.train.iterations = 5;
  spec.train.seed = 17;
  const Dataset data = spec.make_data();
  const VqraModel model = spec.make_model();
  const TrainTrace a = train(model, data, spec.train);
  const TrainTrace b = train(model, data, spec.train);
  suite.add("training determinism",
            a.loss_history == b.loss_history && a.final_params == b.final_params,
            "two runs with seed 17");
}

void check_circuit_basics(Suite& suite) {
  const EncoderParams encoder(3, 2, 1);
  const std::vector<double> x{0.0};
  const StateVector encoded =
      encode_state(encoder, x, CircuitConfig::from_id(4));
  suite.add_tol("encoder zero-params identity", std::abs(encoded.amps()[0] - 1.0),
                1e-12);

  std::mt19937_64 rng(61);
  ExperimentSpec spec;
  spec.config_id = 1;
  spec.d_e = 3;
  double worst = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    VqraModel model = spec.make_model();
    model.set_parameter_vector(random_initial_params(
        static_cast<Eigen::Index>(model.parameter_count()), rng()));
    const std::vector<double> probe{0.37};
    const StateVector state = encode_state(model.encoder(), probe, model.config());
    worst = std::max(worst, std::abs(product_state_check(state) - 1.0));
    worst = std::max(worst,
                     std::abs(product_state_check(model.cached_memory_state()) - 1.0));
  }
  suite.add_tol("product states: configuration 1", worst, 1e-9);

  const ParamCount count = param_count(3, 3, 6, 1);
  suite.add("param count formulas", count.memory == 12 && count.encoder == 36,
            "k=3 d_m=3 d_e=6 n=1 -> memory 12, encoder 36");
}

}  // namespace

std::vector<CheckResult> run_selftest(const std::string& inject_fault) {
  Suite suite;
  suite.fault = inject_fault;

  check_gate_oracles(suite);
  check_norm_preservation(suite);
  check_overlap(suite);
  check_swap_test_law(suite);
  check_pure_state_consistency(suite);
  check_purity(suite);
  check_channels(suite);
  check_adjoint_duality(suite);
  check_shots(suite);
  check_gradients(suite);
  check_training_determinism(suite);
  check_circuit_basics(suite);

  return suite.results;
}

}  // namespace vqra
