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

#include <atomic>
#include <cmath>

#include "test_helpers.hpp"
#include "vqra/experiments.hpp"
#include "vqra/optimize.hpp"

using namespace vqra;
using namespace vqra::test;

TEST_CASE("numerical_gradient") {
  SUBCASE("x^2 at 1 gives 2 (exact for quadratics up to rounding)") {
    const Objective f = [](const Eigen::VectorXd& p) { return p[0] * p[0]; };
    Eigen::VectorXd at(1);
    at << 1.0;
    CHECK(numerical_gradient(f, at, 1e-4)[0] == doctest::Approx(2.0).epsilon(1e-7));
  }
  SUBCASE("constant objective gives the zero vector") {
    const Objective f = [](const Eigen::VectorXd&) { return 3.5; };
    const Eigen::VectorXd g = numerical_gradient(f, Eigen::VectorXd::Zero(4), 1e-4);
    CHECK(g.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("sin at 0 with h=1e-3 is 1 within 1e-6") {
    const Objective f = [](const Eigen::VectorXd& p) { return std::sin(p[0]); };
    const double g = numerical_gradient(f, Eigen::VectorXd::Zero(1), 1e-3)[0];
    CHECK(std::abs(g - 1.0) < 1e-6);
  }
  SUBCASE("non-finite objective names the coordinate") {
    const Objective f = [](const Eigen::VectorXd& p) {
      return p[1] > 0.5 ? std::numeric_limits<double>::infinity() : 0.0;
    };
    CHECK_THROWS_WITH_AS(numerical_gradient(f, Eigen::VectorXd::Zero(3), 1.0),
                         doctest::Contains("coordinate 1"), std::runtime_error);
  }
  SUBCASE("exactly 2*dim evaluations") {
    std::atomic<int> calls{0};
    const Objective f = [&calls](const Eigen::VectorXd& p) {
      ++calls;
      return p.squaredNorm();
    };
    numerical_gradient(f, Eigen::VectorXd::Zero(7), 1e-4);
    CHECK(calls.load() == 14);
  }
}

TEST_CASE("adam_step") {
  SUBCASE("first step with unit gradient moves by about -lr") {
    AdamState state = AdamState::init(1);
    Eigen::VectorXd params = Eigen::VectorXd::Zero(1);
    adam_step(state, params, Eigen::VectorXd::Ones(1));
    CHECK(std::abs(params[0] + state.lr) < 1e-6);
    CHECK(state.step == 1);
  }
  SUBCASE("zero gradient from a fresh state leaves parameters unchanged") {
    AdamState state = AdamState::init(2);
    Eigen::VectorXd params = Eigen::VectorXd::Constant(2, 1.0);
    adam_step(state, params, Eigen::VectorXd::Zero(2));
    CHECK(params[0] == 1.0);
    CHECK(params[1] == 1.0);
    CHECK(state.m.isZero());
    CHECK(state.v.isZero());
  }
  SUBCASE("zero gradient decays accumulated moments") {
    AdamState state = AdamState::init(1);
    state.m = Eigen::VectorXd::Constant(1, 0.5);
    state.v = Eigen::VectorXd::Constant(1, 0.25);
    Eigen::VectorXd params = Eigen::VectorXd::Zero(1);
    adam_step(state, params, Eigen::VectorXd::Zero(1));
    CHECK(state.m[0] == doctest::Approx(0.45));
    CHECK(state.v[0] == doctest::Approx(0.25 * 0.999));
  }
  SUBCASE("deterministic: same state and inputs give identical outputs") {
    AdamState a = AdamState::init(3);
    AdamState b = AdamState::init(3);
    Eigen::VectorXd pa = Eigen::VectorXd::Constant(3, 0.2);
    Eigen::VectorXd pb = pa;
    const Eigen::VectorXd grad = Eigen::VectorXd::LinSpaced(3, -1.0, 1.0);
    adam_step(a, pa, grad);
    adam_step(b, pb, grad);
    CHECK(pa == pb);
    CHECK(a.m == b.m);
    CHECK(a.v == b.v);
  }
  SUBCASE("dimension mismatch") {
    AdamState state = AdamState::init(2);
    Eigen::VectorXd params = Eigen::VectorXd::Zero(3);
    CHECK_THROWS_AS(adam_step(state, params, Eigen::VectorXd::Zero(3)),
                    std::invalid_argument);
  }
}

TEST_CASE("train_objective") {
  SUBCASE("constant objective gives a constant history") {
    const Objective f = [](const Eigen::VectorXd&) { return 1.25; };
    TrainConfig cfg;
    cfg.iterations = 20;
    const TrainTrace trace = train_objective(f, Eigen::VectorXd::Zero(3), cfg);
    CHECK(trace.loss_history.size() == 20);
    for (double v : trace.loss_history) CHECK(v == 1.25);
  }
  SUBCASE("quadratic bowl converges toward the minimum") {
    const Objective f = [](const Eigen::VectorXd& p) { return (p.array() - 2.0).square().sum(); };
    TrainConfig cfg;
    cfg.iterations = 400;
    cfg.lr = 0.05;
    const TrainTrace trace = train_objective(f, Eigen::VectorXd::Zero(2), cfg);
    CHECK(trace.final_loss() < 1e-2);
    CHECK((trace.final_params.array() - 2.0).abs().maxCoeff() < 0.2);
  }
  SUBCASE("evaluation budget is iterations * (2 dim + 1)") {
    std::atomic<int> calls{0};
    const Objective f = [&calls](const Eigen::VectorXd& p) {
      ++calls;
      return p.squaredNorm();
    };
    TrainConfig cfg;
    cfg.iterations = 13;
    train_objective(f, Eigen::VectorXd::Zero(5), cfg);
    CHECK(calls.load() == 13 * (2 * 5 + 1));
  }
  SUBCASE("log_every > 1 carries the last logged value forward") {
    const Objective f = [](const Eigen::VectorXd& p) { return (p.array() - 2.0).square().sum(); };
    TrainConfig cfg;
    cfg.iterations = 7;
    cfg.lr = 0.05;
    const TrainTrace trace =
        train_objective(f, Eigen::VectorXd::Zero(1), cfg, /*log_every=*/3);
    REQUIRE(trace.loss_history.size() == 7);
    CHECK(trace.loss_history[1] == trace.loss_history[0]);
    CHECK(trace.loss_history[2] == trace.loss_history[0]);
    CHECK(trace.loss_history[3] != trace.loss_history[0]);  // freshly logged
    CHECK(trace.loss_history[4] == trace.loss_history[3]);
    CHECK(trace.loss_history[6] != trace.loss_history[3]);
    for (double v : trace.loss_history) CHECK(std::isfinite(v));
  }
  SUBCASE("iterations = 0 returns the initial point untouched") {
    const Objective f = [](const Eigen::VectorXd& p) { return p.squaredNorm(); };
    TrainConfig cfg;
    cfg.iterations = 0;
    const TrainTrace trace =
        train_objective(f, Eigen::VectorXd::Constant(2, 0.7), cfg);
    CHECK(trace.loss_history.empty());
    CHECK(trace.final_params[0] == 0.7);
  }
}

TEST_CASE("train on the model is deterministic per seed") {
  ExperimentSpec spec;
  spec.d_e = 2;
  spec.sample_count = 10;
  spec.train.iterations = 8;
  spec.train.seed = 321;
  const Dataset data = spec.make_data();
  const VqraModel model = spec.make_model();

  const TrainTrace a = train(model, data, spec.train);
  const TrainTrace b = train(model, data, spec.train);
  CHECK(a.loss_history == b.loss_history);
  CHECK(a.final_params == b.final_params);

  TrainConfig other = spec.train;
  other.seed = 322;
  const TrainTrace c = train(model, data, other);
  CHECK(a.loss_history != c.loss_history);
}

TEST_CASE("gradient matches a Richardson-extrapolated oracle on the model loss") {
  ExperimentSpec spec;
  spec.d_e = 3;
  spec.sample_count = 12;
  spec.train.seed = 8;
  const Dataset data = spec.make_data();
  VqraModel scratch = spec.make_model();
  const Objective loss = [&scratch, &data](const Eigen::VectorXd& p) {
    scratch.set_parameter_vector(p);
    return scratch.loss(data).total;
  };

  std::mt19937_64 rng(55);
  for (int rep = 0; rep < 10; ++rep) {
    const Eigen::VectorXd point = random_initial_params(
        static_cast<Eigen::Index>(scratch.parameter_count()), rng());
    const double h = 1e-3;
    const Eigen::VectorXd oracle =
        (4.0 * numerical_gradient(loss, point, h / 2) -
         numerical_gradient(loss, point, h)) /
        3.0;
    const Eigen::VectorXd probe = numerical_gradient(loss, point, 1e-4);
    const double rel = (probe - oracle).norm() / std::max(oracle.norm(), 1e-12);
    CHECK(rel <= 1e-3);
  }
}

TEST_CASE("train_rounds") {
  SUBCASE("one round: mean is that run, std is zero") {
    ExperimentSpec spec;
    spec.d_e = 1;
    spec.sample_count = 6;
    spec.train.iterations = 4;
    spec.train.rounds = 1;
    const Dataset data = spec.make_data();
    const RoundsSummary summary = train_rounds(spec.make_model(), data, spec.train);
    CHECK(summary.traces.size() == 1);
    CHECK(summary.mean_final_loss == summary.traces[0].final_loss());
    CHECK(summary.std_final_loss == 0.0);
  }
  SUBCASE("constant objective: std is zero across rounds") {
    const Objective f = [](const Eigen::VectorXd&) { return 0.75; };
    TrainConfig cfg;
    cfg.iterations = 3;
    cfg.rounds = 5;
    const RoundsSummary summary = train_rounds_objective(f, 4, cfg);
    CHECK(summary.mean_final_loss == 0.75);
    CHECK(summary.std_final_loss == 0.0);
  }
  SUBCASE("round seeds are seed + r") {
    ExperimentSpec spec;
    spec.d_e = 1;
    spec.sample_count = 6;
    spec.train.iterations = 3;
    spec.train.rounds = 3;
    spec.train.seed = 40;
    const Dataset data = spec.make_data();
    const VqraModel model = spec.make_model();
    const RoundsSummary summary = train_rounds(model, data, spec.train);

    TrainConfig single = spec.train;
    single.seed = 41;  // round 1
    const TrainTrace expected = train(model, data, single);
    CHECK(summary.traces[1].loss_history == expected.loss_history);
  }
  SUBCASE("parallel rounds match serial rounds") {
    ExperimentSpec spec;
    spec.d_e = 2;
    spec.sample_count = 8;
    spec.train.iterations = 4;
    spec.train.rounds = 4;
    const Dataset data = spec.make_data();
    const VqraModel model = spec.make_model();
    const RoundsSummary serial = train_rounds(model, data, spec.train, 0.0, 1);
    const RoundsSummary parallel = train_rounds(model, data, spec.train, 0.0, 4);
    CHECK(serial.mean_final_loss == parallel.mean_final_loss);
    CHECK(serial.std_final_loss == parallel.std_final_loss);
    for (int r = 0; r < 4; ++r) {
      CHECK(serial.traces[r].loss_history == parallel.traces[r].loss_history);
    }
  }
}

TEST_CASE("mean_std") {
  const auto [mean, sd] = mean_std({1.0, 2.0, 3.0, 4.0});
  CHECK(mean == doctest::Approx(2.5));
  CHECK(sd == doctest::Approx(std::sqrt(1.25)));
  const auto [m1, s1] = mean_std({7.0});
  CHECK(m1 == 7.0);
  CHECK(s1 == 0.0);
}
