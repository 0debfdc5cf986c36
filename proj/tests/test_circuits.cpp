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

#include <algorithm>

#include "test_helpers.hpp"
#include "vqra/circuits.hpp"
#include "vqra/optimize.hpp"

using namespace vqra;
using namespace vqra::test;

namespace {

MemoryParams random_memory(int k, int d_m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  MemoryParams params(k, d_m);
  for (double& v : params.theta) v = angle(rng);
  return params;
}

EncoderParams random_encoder(int k, int d_e, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  EncoderParams params(k, d_e, n);
  for (double& v : params.xi) v = angle(rng);
  return params;
}

}  // namespace

TEST_CASE("configuration id mapping") {
  CHECK(CircuitConfig::from_id(1) == CircuitConfig{false, false});
  CHECK(CircuitConfig::from_id(2) == CircuitConfig{true, false});
  CHECK(CircuitConfig::from_id(3) == CircuitConfig{false, true});
  CHECK(CircuitConfig::from_id(4) == CircuitConfig{true, true});
  for (int id = 1; id <= 4; ++id) CHECK(CircuitConfig::from_id(id).id() == id);
  CHECK_THROWS_AS(CircuitConfig::from_id(0), std::invalid_argument);
  CHECK_THROWS_AS(CircuitConfig::from_id(5), std::invalid_argument);
}

TEST_CASE("build_memory: layout") {
  std::mt19937_64 rng(3);

  SUBCASE("k=3, d_m=3: 12 rotations") {
    const auto gates = build_memory(random_memory(3, 3, rng), CircuitConfig::from_id(4));
    const auto rx_count = std::count_if(gates.begin(), gates.end(), [](const GateOp& g) {
      return g.kind == GateKind::Rx;
    });
    const auto cnot_count = std::count_if(gates.begin(), gates.end(), [](const GateOp& g) {
      return g.kind == GateKind::Cnot;
    });
    CHECK(rx_count == 12);
    CHECK(cnot_count == 9);
  }
  SUBCASE("entanglers off: zero CNOTs, state |0...0> at zero angles") {
    const MemoryParams zeros(3, 3);
    const auto gates = build_memory(zeros, CircuitConfig::from_id(1));
    CHECK(gates.size() == 12);
    for (const GateOp& g : gates) CHECK(g.kind == GateKind::Rx);
    const StateVector state = memory_state(zeros, CircuitConfig::from_id(1));
    CHECK(std::abs(state.amps()[0] - 1.0) < 1e-15);
  }
  SUBCASE("k=3, d_m=1: CNOT ring order (0->1),(1->2),(2->0)") {
    const auto gates = build_memory(random_memory(3, 1, rng), CircuitConfig::from_id(2));
    std::vector<std::pair<int, int>> ring;
    for (const GateOp& g : gates) {
      if (g.kind == GateKind::Cnot) ring.emplace_back(g.q0, g.q1);
    }
    CHECK(ring == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
  }
  SUBCASE("k=1 with entanglers is rejected") {
    CHECK_THROWS_AS(build_memory(MemoryParams(1, 1), CircuitConfig::from_id(2)),
                    std::invalid_argument);
    CHECK_NOTHROW(build_memory(MemoryParams(1, 1), CircuitConfig::from_id(1)));
  }
}

TEST_CASE("build_encoder: layout") {
  std::mt19937_64 rng(5);

  SUBCASE("k=3, N=1, d_e=6: 36 trainable angles") {
    const EncoderParams params(3, 6, 1);
    CHECK(params.size() == 36);
    const auto gates =
        build_encoder(params, std::vector<double>{0.5}, CircuitConfig::from_id(4));
    // Per (d, n) block: 3 Ry + 3 Xx + 3 data Rx.
    CHECK(gates.size() == 6u * (3 + 3 + 3));
  }
  SUBCASE("zero parameters and zero input give |0...0>") {
    const EncoderParams params(3, 4, 1);
    const StateVector state =
        encode_state(params, std::vector<double>{0.0}, CircuitConfig::from_id(1));
    CHECK(std::abs(state.amps()[0] - 1.0) < 1e-15);
  }
  SUBCASE("zero XX angles with entanglers on equals entanglers off") {
    EncoderParams params = random_encoder(3, 3, 1, rng);
    for (int d = 0; d < 3; ++d) {
      for (int slot = 3; slot < 6; ++slot) params.at(d, 0, slot) = 0.0;
    }
    const std::vector<double> x{0.7};
    const StateVector on = encode_state(params, x, CircuitConfig::from_id(4));
    const StateVector off = encode_state(params, x, CircuitConfig::from_id(2));
    CHECK(max_abs_diff(on.amps(), off.amps()) < 1e-12);
  }
  SUBCASE("k=2, d_e=1, xi=0, x=pi: Rx(pi) on both qubits gives -|11>") {
    const EncoderParams params(2, 1, 1);
    const StateVector state =
        encode_state(params, std::vector<double>{kPi}, CircuitConfig::from_id(1));
    CHECK(std::abs(state.amps()[3] - Complex(-1.0, 0.0)) < 1e-12);
  }
  SUBCASE("k=2 keeps both ring factors on the same pair") {
    const EncoderParams params(2, 1, 1);
    const auto gates =
        build_encoder(params, std::vector<double>{0.1}, CircuitConfig::from_id(4));
    const auto xx_count = std::count_if(gates.begin(), gates.end(), [](const GateOp& g) {
      return g.kind == GateKind::Xx;
    });
    CHECK(xx_count == 2);
  }
  SUBCASE("feature-count mismatch") {
    const EncoderParams params(3, 2, 1);
    CHECK_THROWS_AS(
        encode_state(params, std::vector<double>{0.1, 0.2}, CircuitConfig::from_id(4)),
        std::invalid_argument);
  }
  SUBCASE("doubling d_e doubles the gate count") {
    const std::vector<double> x{0.3};
    const auto g3 = build_encoder(EncoderParams(3, 3, 1), x, CircuitConfig::from_id(4));
    const auto g6 = build_encoder(EncoderParams(3, 6, 1), x, CircuitConfig::from_id(4));
    CHECK(g6.size() == 2 * g3.size());
  }
}

TEST_CASE("encoder ordering: XX factors commute within a block") {
  std::mt19937_64 rng(7);
  const EncoderParams params = random_encoder(3, 2, 1, rng);
  const std::vector<double> x{-0.4};
  const CircuitConfig config = CircuitConfig::from_id(4);
  const StateVector reference = encode_state(params, x, config);

  // Re-apply with the XX factors of every block in reversed order.
  StateVector permuted(3);
  std::vector<GateOp> block;
  const auto flush = [&]() {
    for (auto it = block.rbegin(); it != block.rend(); ++it) apply_gate(permuted, *it);
    block.clear();
  };
  for_each_encoder_gate(params, x, config, [&](const GateOp& g) {
    if (g.kind == GateKind::Xx) {
      block.push_back(g);
    } else {
      flush();
      apply_gate(permuted, g);
    }
  });
  flush();
  CHECK(max_abs_diff(permuted.amps(), reference.amps()) < 1e-12);
}

TEST_CASE("encode_state determinism") {
  std::mt19937_64 rng(11);
  const EncoderParams params = random_encoder(3, 6, 1, rng);
  const std::vector<double> x{0.2};
  const StateVector a = encode_state(params, x, CircuitConfig::from_id(4));
  const StateVector b = encode_state(params, x, CircuitConfig::from_id(4));
  CHECK(a.amps() == b.amps());
}

TEST_CASE("param_count") {
  const ParamCount a = param_count(3, 3, 6, 1);
  CHECK(a.memory == 12);
  CHECK(a.encoder == 36);
  CHECK(param_count(3, 3, 6, 2).encoder == 72);
  CHECK(param_count(3, 3, 0, 1).encoder == 0);
  CHECK_THROWS_AS(param_count(0, 3, 6, 1), std::invalid_argument);
}

TEST_CASE("product_state_check") {
  SUBCASE("|000> gives exactly 1") {
    CHECK(product_state_check(StateVector(3)) == doctest::Approx(1.0));
  }
  SUBCASE("Bell state gives 0.5") {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
    amps[0] = amps[3] = 1 / std::sqrt(2.0);
    CHECK(product_state_check(StateVector(2, amps)) == doctest::Approx(0.5));
  }
  SUBCASE("configuration-1 circuits always produce product states") {
    std::mt19937_64 rng(13);
    const CircuitConfig config = CircuitConfig::from_id(1);
    for (int rep = 0; rep < 20; ++rep) {
      const StateVector mem = memory_state(random_memory(3, 3, rng), config);
      CHECK(product_state_check(mem) == doctest::Approx(1.0).epsilon(1e-9));
      const std::vector<double> x{std::uniform_real_distribution<double>(-1, 1)(rng)};
      const StateVector enc = encode_state(random_encoder(3, 6, 1, rng), x, config);
      CHECK(product_state_check(enc) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("entangler removal equals explicit deletion with zeroed angles") {
  std::mt19937_64 rng(17);
  const MemoryParams memory = random_memory(3, 2, rng);
  const EncoderParams encoder = random_encoder(3, 2, 1, rng);
  const std::vector<double> x{0.6};

  // Config 1 output vs config 4 with CNOTs deleted and XX angles zeroed.
  const StateVector off_mem = memory_state(memory, CircuitConfig::from_id(1));
  StateVector manual_mem(3);
  for_each_memory_gate(memory, CircuitConfig::from_id(4), [&](const GateOp& g) {
    if (g.kind != GateKind::Cnot) apply_gate(manual_mem, g);
  });
  CHECK(max_abs_diff(off_mem.amps(), manual_mem.amps()) < 1e-12);

  const StateVector off_enc = encode_state(encoder, x, CircuitConfig::from_id(1));
  StateVector manual_enc(3);
  for_each_encoder_gate(encoder, x, CircuitConfig::from_id(4), [&](const GateOp& g) {
    if (g.kind != GateKind::Xx) apply_gate(manual_enc, g);
  });
  CHECK(max_abs_diff(off_enc.amps(), manual_enc.amps()) < 1e-12);
}
