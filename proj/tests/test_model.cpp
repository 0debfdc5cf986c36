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

#include <Eigen/Eigenvalues>

#include "test_helpers.hpp"
#include "vqra/experiments.hpp"
#include "vqra/model.hpp"

using namespace vqra;
using namespace vqra::test;

namespace {

VqraModel default_model(int config_id = 4) {
  return VqraModel(MemoryParams(3, 3), EncoderParams(3, 6, 1),
                   CircuitConfig::from_id(config_id));
}

VqraModel random_model(std::uint64_t seed, int config_id = 4,
                       NoiseSpec noise = NoiseSpec{}) {
  VqraModel model(MemoryParams(3, 3), EncoderParams(3, 6, 1),
                  CircuitConfig::from_id(config_id), std::move(noise));
  model.set_parameter_vector(random_initial_params(
      static_cast<Eigen::Index>(model.parameter_count()), seed));
  return model;
}

}  // namespace

TEST_CASE("predict: exact values") {
  SUBCASE("encoded state equal to the memory state gives 1") {
    const VqraModel model = default_model();  // all angles zero: both |000>
    CHECK(model.predict(std::vector<double>{0.0}) == doctest::Approx(1.0));
  }
  SUBCASE("orthogonal memory and encoded states give 0") {
    MemoryParams memory(3, 3);
    memory.at(0, 0) = kPi;  // Rx(pi) flips qubit 0: |Psi> = |100> up to phase
    const VqraModel model(memory, EncoderParams(3, 6, 1), CircuitConfig::from_id(1));
    CHECK(model.predict(std::vector<double>{0.0}) == doctest::Approx(0.0));
  }
  SUBCASE("full depolarizing forces sqrt(1/8) everywhere") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 5; ++rep) {
      const VqraModel model = random_model(rng(), 4, NoiseSpec{depolarizing(1.0)});
      const double x = std::uniform_real_distribution<double>(-1, 1)(rng);
      CHECK(model.predict(std::vector<double>{x}) ==
            doctest::Approx(std::sqrt(1.0 / 8.0)).epsilon(1e-9));
    }
  }
  SUBCASE("feature mismatch") {
    const VqraModel model = default_model();
    CHECK_THROWS_AS(model.predict(std::vector<double>{0.1, 0.2}),
                    std::invalid_argument);
  }
}

TEST_CASE("predict range and noise consistency") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> input(-1, 1);
  std::uniform_real_distribution<double> strength(0, 1);
  for (int rep = 0; rep < 25; ++rep) {
    const auto kind = static_cast<ChannelKind>(rng() % 4);
    const NoiseSpec noise{make_channel(kind, kind == ChannelKind::Identity
                                                 ? 0.0
                                                 : strength(rng))};
    const VqraModel model = random_model(rng(), 4, noise);
    const double f = model.predict(std::vector<double>{input(rng)});
    CHECK(f >= 0.0);
    CHECK(f <= 1.0 + 1e-12);
  }
}

TEST_CASE("noise-free consistency: statevector path vs density-matrix path") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const VqraModel pure = random_model(rng());
    // Same parameters, but routed through the mixed-state machinery.
    const std::vector<double> x{std::uniform_real_distribution<double>(-1, 1)(rng)};
    const StateVector encoded = encode_state(pure.encoder(), x, pure.config());
    const double via_dm = std::sqrt(std::max(
        0.0, 2.0 * swap_test_p0(pure.cached_memory_state(), to_density(encoded)) - 1.0));
    CHECK(std::abs(pure.predict(x) - via_dm) < 1e-9);
  }
}

TEST_CASE("noisy predict equals the direct density-matrix route") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> strength(0, 1);
  for (int rep = 0; rep < 15; ++rep) {
    const auto kind = static_cast<ChannelKind>(1 + rng() % 3);
    const NoiseSpec noise{make_channel(kind, strength(rng))};
    const VqraModel model = random_model(rng(), 4, noise);
    const std::vector<double> x{std::uniform_real_distribution<double>(-1, 1)(rng)};
    const StateVector encoded = encode_state(model.encoder(), x, model.config());
    const DensityMatrix noisy = apply_local_noise(to_density(encoded), noise);
    const double expected = std::sqrt(
        std::max(0.0, fidelity_pure_mixed(model.cached_memory_state(), noisy)));
    CHECK(model.predict(x) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("exact/shot agreement within the binomial bound") {
  // |f_hat - f| ~ |p_hat - p0| / f, so the fixed 0.02 bound applies away
  // from the f -> 0 singularity where the propagated binomial bound
  // diverges; kept cases have f >= 0.2 (bound ~ 5 sigma / 0.4 = 0.02).
  std::mt19937_64 rng(17);
  int kept = 0;
  while (kept < 20) {
    VqraModel model = random_model(rng());
    const std::vector<double> x{std::uniform_real_distribution<double>(-1, 1)(rng)};
    const double exact = model.predict(x);
    if (exact < 0.2) continue;
    ++kept;
    model.set_eval(EvalSpec::with_shots(100000, rng()));
    const double sampled = model.predict(x);
    CHECK(std::abs(sampled - exact) <= 0.02);
  }
}

TEST_CASE("shot-mode predictions are deterministic per (input, seed)") {
  VqraModel model = random_model(23);
  model.set_eval(EvalSpec::with_shots(2000, 99));
  const std::vector<double> x{0.31};
  const double a = model.predict(x);
  const double b = model.predict(x);
  CHECK(a == b);
}

TEST_CASE("loss") {
  SUBCASE("perfect predictions give zero") {
    const VqraModel model = default_model();
    Dataset data(1);
    data.add(std::vector<double>{0.0}, 1.0);  // f(0) = 1 for the zero model
    const LossReport report = model.loss(data);
    CHECK(report.total == doctest::Approx(0.0));
  }
  SUBCASE("single sample f=0.5, y=0.25 gives 0.0625") {
    // k=1, no entanglers: overlap = cos(theta/2) -> theta = 2 pi/3 gives 0.5.
    MemoryParams memory(1, 0);
    memory.at(0, 0) = 2.0 * kPi / 3.0;
    const VqraModel model(memory, EncoderParams(1, 1, 1), CircuitConfig::from_id(1));
    Dataset data(1);
    data.add(std::vector<double>{0.0}, 0.25);
    CHECK(model.predict(std::vector<double>{0.0}) == doctest::Approx(0.5));
    CHECK(model.loss(data).total == doctest::Approx(0.0625));
  }
  SUBCASE("residuals {0.1, -0.1} average to 0.01") {
    // Two-point dataset whose labels sit 0.1 below/above the model's
    // constant output of 0.5.
    MemoryParams memory(1, 0);
    memory.at(0, 0) = 2.0 * kPi / 3.0;
    const VqraModel model(memory, EncoderParams(1, 1, 1), CircuitConfig::from_id(1));
    const double f0 = model.predict(std::vector<double>{0.0});
    REQUIRE(f0 == doctest::Approx(0.5));
    Dataset data(1);
    data.add(std::vector<double>{0.0}, f0 - 0.1);
    data.add(std::vector<double>{0.0}, f0 + 0.1);
    const LossReport report = model.loss(data);
    CHECK(report.mse == doctest::Approx(0.01));
    CHECK(report.residuals[0] == doctest::Approx(0.1));
    CHECK(report.residuals[1] == doctest::Approx(-0.1));
  }
  SUBCASE("total = mse + regularization exactly") {
    const VqraModel model = random_model(29);
    Dataset data(1);
    data.add(std::vector<double>{0.3}, 0.4);
    data.add(std::vector<double>{-0.2}, 0.9);
    const LossReport report = model.loss(data, 0.37);
    CHECK(report.total == report.mse + report.regularization);
    CHECK(report.regularization > 0.0);
  }
  SUBCASE("empty dataset") {
    const VqraModel model = default_model();
    CHECK_THROWS_AS(model.loss(Dataset(1)), std::invalid_argument);
  }
}

TEST_CASE("dataset guards") {
  Dataset data(1);
  CHECK_THROWS_AS(data.add(std::vector<double>{0.1, 0.2}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(data.add(std::vector<double>{0.1}, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(Dataset(0), std::invalid_argument);
}

TEST_CASE("kernel matrix") {
  std::mt19937_64 rng(31);
  EncoderParams encoder(3, 3, 1);
  for (double& v : encoder.xi) {
    v = std::uniform_real_distribution<double>(-kPi, kPi)(rng);
  }
  std::vector<std::vector<double>> xs;
  for (int i = 0; i < 12; ++i) xs.push_back({-1.0 + 2.0 * i / 11});

  const Eigen::MatrixXcd gram = kernel_matrix(encoder, CircuitConfig::from_id(4), xs);

  SUBCASE("unit diagonal") {
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
      CHECK(std::abs(gram(i, i) - 1.0) < 1e-10);
    }
  }
  SUBCASE("Hermitian") {
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
      for (Eigen::Index j = 0; j < gram.cols(); ++j) {
        CHECK(std::abs(gram(i, j) - std::conj(gram(j, i))) < 1e-12);
      }
    }
  }
  SUBCASE("positive semidefinite (eigen-decomposition oracle)") {
    const Eigen::MatrixXcd sym = (gram + gram.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
    CHECK(solver.eigenvalues().minCoeff() > -1e-9);
  }
}

TEST_CASE("representer predictor") {
  const EncoderParams encoder(3, 2, 1);
  const CircuitConfig config = CircuitConfig::from_id(4);

  SUBCASE("single training point with beta=1, y=1 reproduces 1 at that point") {
    Dataset train(1);
    train.add(std::vector<double>{0.4}, 1.0);
    const double f = representer_predict(encoder, config, train,
                                         std::vector<double>{1.0},
                                         std::vector<double>{0.4});
    CHECK(f == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("zero beta gives zero") {
    Dataset train(1);
    train.add(std::vector<double>{0.4}, 1.0);
    train.add(std::vector<double>{-0.2}, 0.5);
    const double f = representer_predict(encoder, config, train,
                                         std::vector<double>{0.0, 0.0},
                                         std::vector<double>{0.1});
    CHECK(f == doctest::Approx(0.0));
  }
  SUBCASE("beta size mismatch") {
    Dataset train(1);
    train.add(std::vector<double>{0.4}, 1.0);
    CHECK_THROWS_AS(representer_predict(encoder, config, train,
                                        std::vector<double>{1.0, 2.0},
                                        std::vector<double>{0.1}),
                    std::invalid_argument);
  }
}

TEST_CASE("fit_beta_least_squares") {
  std::mt19937_64 rng(37);
  EncoderParams encoder(3, 2, 1);
  for (double& v : encoder.xi) {
    v = std::uniform_real_distribution<double>(-kPi, kPi)(rng);
  }
  const CircuitConfig config = CircuitConfig::from_id(4);

  const auto representer_mse = [&](const Dataset& train,
                                   const Eigen::VectorXd& beta) {
    double acc = 0.0;
    for (std::size_t m = 0; m < train.size(); ++m) {
      const auto row = train.x_row(m);
      const double f = representer_predict(
          encoder, config, train, {beta.data(), static_cast<std::size_t>(beta.size())},
          row);
      acc += (f - train.ys[m]) * (f - train.ys[m]);
    }
    return acc / static_cast<double>(train.size());
  };

  SUBCASE("single point, y = 1: beta recovers 1") {
    Dataset train(1);
    train.add(std::vector<double>{0.3}, 1.0);
    const Eigen::VectorXd beta = fit_beta_least_squares(encoder, config, train, 0.0);
    CHECK(beta[0] == doctest::Approx(1.0).epsilon(1e-8));
  }
  SUBCASE("huge ridge shrinks beta toward zero") {
    const Dataset train = make_dataset(TargetId::F4, 10, 0.0, 5);
    const Eigen::VectorXd beta = fit_beta_least_squares(encoder, config, train, 1e12);
    CHECK(beta.cwiseAbs().maxCoeff() < 1e-6);
  }
  SUBCASE("least-squares beats the uniform baseline") {
    const Dataset train = make_dataset(TargetId::F4, 12, 0.0, 7);
    const Eigen::VectorXd fitted = fit_beta_least_squares(encoder, config, train, 1e-10);
    const Eigen::VectorXd uniform = Eigen::VectorXd::Constant(
        static_cast<Eigen::Index>(train.size()), 1.0 / static_cast<double>(train.size()));
    CHECK(representer_mse(train, fitted) <= representer_mse(train, uniform) + 1e-12);
  }
  SUBCASE("duplicated samples make the system singular without ridge") {
    Dataset train(1);
    train.add(std::vector<double>{0.2}, 0.6);
    train.add(std::vector<double>{0.2}, 0.6);
    train.add(std::vector<double>{0.2}, 0.6);
    CHECK_THROWS_WITH_AS(fit_beta_least_squares(encoder, config, train, 0.0),
                         doctest::Contains("ridge"), std::invalid_argument);
    CHECK_NOTHROW(fit_beta_least_squares(encoder, config, train, 1e-6));
  }
}
