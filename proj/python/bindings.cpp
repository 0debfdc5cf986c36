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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vqra/cli.hpp"
#include "vqra/experiments.hpp"
#include "vqra/selftest.hpp"
#include "vqra/serialize.hpp"

namespace py = pybind11;
using namespace vqra;

namespace {

std::vector<double> to_vec(const py::object& x) {
  return x.cast<std::vector<double>>();
}

}  // namespace

PYBIND11_MODULE(vqra, m) {
  m.doc() = "Statevector/density-matrix simulator and training harness for "
            "variational quantum regression";
  m.attr("__version__") = cli::kVersion;

  // ---- simulator core ----
  py::class_<StateVector>(m, "StateVector")
      .def(py::init<int>(), py::arg("n_qubits"))
      .def(py::init<int, Eigen::VectorXcd>(), py::arg("n_qubits"), py::arg("amps"))
      .def_static("basis", &StateVector::basis, py::arg("n_qubits"), py::arg("index"))
      .def_static("random", &StateVector::random, py::arg("n_qubits"), py::arg("seed"))
      .def_property_readonly("n_qubits", &StateVector::n_qubits)
      .def_property_readonly("amps",
                             [](const StateVector& s) { return s.amps(); })
      .def("norm", &StateVector::norm);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<int>(), py::arg("n_qubits"))
      .def(py::init<int, Eigen::MatrixXcd>(), py::arg("n_qubits"), py::arg("mat"))
      .def_static("maximally_mixed", &DensityMatrix::maximally_mixed)
      .def_property_readonly("n_qubits", &DensityMatrix::n_qubits)
      .def_property_readonly("mat", [](const DensityMatrix& r) { return r.mat(); })
      .def("purity", &DensityMatrix::purity)
      .def("trace_real", &DensityMatrix::trace_real)
      .def("hermiticity_error", &DensityMatrix::hermiticity_error)
      .def("min_eigenvalue", &DensityMatrix::min_eigenvalue);

  py::enum_<GateKind>(m, "GateKind")
      .value("Rx", GateKind::Rx)
      .value("Ry", GateKind::Ry)
      .value("Cnot", GateKind::Cnot)
      .value("Xx", GateKind::Xx);

  py::class_<GateOp>(m, "GateOp")
      .def_static("rx", &GateOp::rx, py::arg("qubit"), py::arg("angle"))
      .def_static("ry", &GateOp::ry, py::arg("qubit"), py::arg("angle"))
      .def_static("cnot", &GateOp::cnot, py::arg("control"), py::arg("target"))
      .def_static("xx", &GateOp::xx, py::arg("qubit_a"), py::arg("qubit_b"),
                  py::arg("angle"))
      .def_readonly("kind", &GateOp::kind)
      .def_readonly("angle", &GateOp::angle)
      .def_readonly("q0", &GateOp::q0)
      .def_readonly("q1", &GateOp::q1);

  m.def("apply_gate",
        [](StateVector& s, const GateOp& g) { apply_gate(s, g); },
        py::arg("state"), py::arg("gate"));
  m.def("apply_gate_dm",
        [](DensityMatrix& rho, const GateOp& g) { apply_gate_dm(rho, g); },
        py::arg("rho"), py::arg("gate"));
  m.def("gate_matrix_oracle", &gate_matrix_oracle, py::arg("gate"), py::arg("k"));
  m.def("overlap", &overlap, py::arg("a"), py::arg("b"));
  m.def("to_density", &to_density, py::arg("psi"));
  m.def("fidelity_pure_mixed", &fidelity_pure_mixed, py::arg("psi"), py::arg("rho"));
  m.def("swap_test_p0",
        py::overload_cast<const StateVector&, const StateVector&>(&swap_test_p0),
        py::arg("psi"), py::arg("phi"));
  m.def("swap_test_p0",
        py::overload_cast<const StateVector&, const DensityMatrix&>(&swap_test_p0),
        py::arg("psi"), py::arg("rho"));
  m.def("swap_test_shots", &swap_test_shots, py::arg("psi"), py::arg("rho"),
        py::arg("shots"), py::arg("seed"));
  m.def("swap_test_circuit_exact", &swap_test_circuit_exact, py::arg("psi"),
        py::arg("phi"));

  // ---- circuits ----
  py::class_<CircuitConfig>(m, "CircuitConfig")
      .def(py::init<bool, bool>(), py::arg("memory_entanglers") = true,
           py::arg("encoder_entanglers") = true)
      .def_static("from_id", &CircuitConfig::from_id, py::arg("id"))
      .def_property_readonly("id", &CircuitConfig::id)
      .def_readwrite("memory_entanglers", &CircuitConfig::memory_entanglers)
      .def_readwrite("encoder_entanglers", &CircuitConfig::encoder_entanglers);

  py::class_<MemoryParams>(m, "MemoryParams")
      .def(py::init<int, int>(), py::arg("k"), py::arg("d_m"))
      .def(py::init<int, int, std::vector<double>>(), py::arg("k"), py::arg("d_m"),
           py::arg("theta"))
      .def_readonly("k", &MemoryParams::k)
      .def_readonly("d_m", &MemoryParams::d_m)
      .def_readwrite("theta", &MemoryParams::theta);

  py::class_<EncoderParams>(m, "EncoderParams")
      .def(py::init<int, int, int>(), py::arg("k"), py::arg("d_e"),
           py::arg("n_features"))
      .def(py::init<int, int, int, std::vector<double>>(), py::arg("k"),
           py::arg("d_e"), py::arg("n_features"), py::arg("xi"))
      .def_readonly("k", &EncoderParams::k)
      .def_readonly("d_e", &EncoderParams::d_e)
      .def_readonly("n_features", &EncoderParams::n_features)
      .def_readwrite("xi", &EncoderParams::xi);

  m.def("build_memory", &build_memory, py::arg("params"), py::arg("config"));
  m.def("build_encoder",
        [](const EncoderParams& p, const std::vector<double>& x,
           const CircuitConfig& c) { return build_encoder(p, x, c); },
        py::arg("params"), py::arg("x"), py::arg("config"));
  m.def("memory_state", &memory_state, py::arg("params"), py::arg("config"));
  m.def("encode_state",
        [](const EncoderParams& p, const std::vector<double>& x,
           const CircuitConfig& c) { return encode_state(p, x, c); },
        py::arg("params"), py::arg("x"), py::arg("config"));
  m.def("param_count",
        [](int k, int d_m, int d_e, int n_features) {
          const ParamCount c = param_count(k, d_m, d_e, n_features);
          return py::make_tuple(c.memory, c.encoder);
        },
        py::arg("k"), py::arg("d_m"), py::arg("d_e"), py::arg("n_features"));
  m.def("product_state_check", &product_state_check, py::arg("state"));

  // ---- noise ----
  py::enum_<ChannelKind>(m, "ChannelKind")
      .value("Identity", ChannelKind::Identity)
      .value("Depolarizing", ChannelKind::Depolarizing)
      .value("AmplitudeDamping", ChannelKind::AmplitudeDamping)
      .value("PhaseDamping", ChannelKind::PhaseDamping);

  py::class_<KrausChannel>(m, "KrausChannel")
      .def_readonly("kind", &KrausChannel::kind)
      .def_readonly("strength", &KrausChannel::strength)
      .def_readonly("kraus", &KrausChannel::kraus)
      .def("completeness_error", &KrausChannel::completeness_error);

  py::class_<NoiseSpec>(m, "NoiseSpec")
      .def(py::init<>())
      .def(py::init([](const KrausChannel& ch) { return NoiseSpec{ch}; }),
           py::arg("channel"))
      .def_readwrite("channel", &NoiseSpec::channel)
      .def("is_identity", &NoiseSpec::is_identity);

  m.def("identity_channel", &identity_channel);
  m.def("depolarizing", &depolarizing, py::arg("p"));
  m.def("amplitude_damping", &amplitude_damping, py::arg("gamma"));
  m.def("phase_damping", &phase_damping, py::arg("gamma"));
  m.def("make_channel", &make_channel, py::arg("kind"), py::arg("strength"));
  m.def("apply_local_noise", &apply_local_noise, py::arg("rho"), py::arg("spec"));

  // ---- model ----
  py::class_<Dataset>(m, "Dataset")
      .def(py::init<int>(), py::arg("feature_dim"))
      .def_readonly("feature_dim", &Dataset::feature_dim)
      .def_readonly("xs", &Dataset::xs)
      .def_readonly("ys", &Dataset::ys)
      .def("__len__", &Dataset::size)
      .def("add",
           [](Dataset& d, const std::vector<double>& x, double y) { d.add(x, y); },
           py::arg("x"), py::arg("y"))
      .def("x_row", [](const Dataset& d, std::size_t m) {
        const auto row = d.x_row(m);
        return std::vector<double>(row.begin(), row.end());
      });

  py::class_<LossReport>(m, "LossReport")
      .def_readonly("mse", &LossReport::mse)
      .def_readonly("regularization", &LossReport::regularization)
      .def_readonly("total", &LossReport::total)
      .def_readonly("residuals", &LossReport::residuals);

  py::class_<EvalSpec>(m, "EvalSpec")
      .def_static("exact", &EvalSpec::exact)
      .def_static("with_shots", &EvalSpec::with_shots, py::arg("shots"),
                  py::arg("seed"))
      .def_readonly("shots", &EvalSpec::shots)
      .def_readonly("seed", &EvalSpec::seed);

  py::class_<VqraModel>(m, "VqraModel")
      .def(py::init<MemoryParams, EncoderParams, CircuitConfig, NoiseSpec, EvalSpec>(),
           py::arg("memory"), py::arg("encoder"), py::arg("config"),
           py::arg("noise") = NoiseSpec{}, py::arg("eval") = EvalSpec::exact())
      .def_property_readonly("k", &VqraModel::k)
      .def_property_readonly("n_features", &VqraModel::n_features)
      .def("parameter_count", &VqraModel::parameter_count)
      .def("parameter_vector", &VqraModel::parameter_vector)
      .def("set_parameter_vector", &VqraModel::set_parameter_vector)
      .def("set_noise", &VqraModel::set_noise)
      .def("set_eval", &VqraModel::set_eval)
      .def("predict",
           [](const VqraModel& model, const py::object& x) {
             return model.predict(to_vec(x));
           },
           py::arg("x"))
      .def("loss", &VqraModel::loss, py::arg("data"), py::arg("reg_lambda") = 0.0);

  m.def("kernel_matrix", &kernel_matrix, py::arg("encoder"), py::arg("config"),
        py::arg("xs"));
  m.def("representer_predict",
        [](const EncoderParams& e, const CircuitConfig& c, const Dataset& d,
           const std::vector<double>& beta, const std::vector<double>& x) {
          return representer_predict(e, c, d, beta, x);
        },
        py::arg("encoder"), py::arg("config"), py::arg("train"), py::arg("beta"),
        py::arg("x"));
  m.def("fit_beta_least_squares", &fit_beta_least_squares, py::arg("encoder"),
        py::arg("config"), py::arg("train"), py::arg("ridge"));

  // ---- optimizer ----
  py::class_<TrainConfig>(m, "TrainConfig")
      .def(py::init<>())
      .def_readwrite("iterations", &TrainConfig::iterations)
      .def_readwrite("fd_step", &TrainConfig::fd_step)
      .def_readwrite("seed", &TrainConfig::seed)
      .def_readwrite("rounds", &TrainConfig::rounds)
      .def_readwrite("log_every", &TrainConfig::log_every)
      .def_readwrite("lr", &TrainConfig::lr);

  py::class_<TrainTrace>(m, "TrainTrace")
      .def_readonly("loss_history", &TrainTrace::loss_history)
      .def_readonly("final_params", &TrainTrace::final_params)
      .def_readonly("wall_time_s", &TrainTrace::wall_time_s)
      .def("final_loss", &TrainTrace::final_loss);

  py::class_<RoundsSummary>(m, "RoundsSummary")
      .def_readonly("mean_final_loss", &RoundsSummary::mean_final_loss)
      .def_readonly("std_final_loss", &RoundsSummary::std_final_loss)
      .def_readonly("traces", &RoundsSummary::traces);

  m.def("numerical_gradient",
        [](const std::function<double(const Eigen::VectorXd&)>& f,
           const Eigen::VectorXd& p, double h) { return numerical_gradient(f, p, h); },
        py::arg("objective"), py::arg("params"), py::arg("fd_step"));
  m.def("train", &train, py::arg("model"), py::arg("data"), py::arg("cfg"),
        py::arg("reg_lambda") = 0.0,
        py::call_guard<py::gil_scoped_release>());
  m.def("train_rounds", &train_rounds, py::arg("model"), py::arg("data"),
        py::arg("cfg"), py::arg("reg_lambda") = 0.0, py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());

  // ---- experiments ----
  py::enum_<TargetId>(m, "Target")
      .value("F1", TargetId::F1)
      .value("F2", TargetId::F2)
      .value("F3", TargetId::F3)
      .value("F4", TargetId::F4)
      .value("F5", TargetId::F5);

  m.def("eval_target",
        [](TargetId id, const std::vector<double>& x) { return eval_target(id, x); },
        py::arg("target"), py::arg("x"));
  m.def("make_dataset", &make_dataset, py::arg("target"), py::arg("m"),
        py::arg("sigma"), py::arg("seed"));

  py::class_<ExperimentSpec>(m, "ExperimentSpec")
      .def(py::init<>())
      .def_readwrite("target", &ExperimentSpec::target)
      .def_readwrite("k", &ExperimentSpec::k)
      .def_readwrite("d_m", &ExperimentSpec::d_m)
      .def_readwrite("d_e", &ExperimentSpec::d_e)
      .def_readwrite("config_id", &ExperimentSpec::config_id)
      .def_readwrite("noise", &ExperimentSpec::noise)
      .def_readwrite("train", &ExperimentSpec::train)
      .def_readwrite("sample_count", &ExperimentSpec::sample_count)
      .def_readwrite("label_noise_sigma", &ExperimentSpec::label_noise_sigma)
      .def_readwrite("reg_lambda", &ExperimentSpec::reg_lambda)
      .def("make_model", &ExperimentSpec::make_model)
      .def("make_data", &ExperimentSpec::make_data);

  py::class_<PredictionRow>(m, "PredictionRow")
      .def_readonly("x", &PredictionRow::x)
      .def_readonly("y_true", &PredictionRow::y_true)
      .def_readonly("y_pred", &PredictionRow::y_pred);

  py::class_<FitResult>(m, "FitResult")
      .def_readonly("trace", &FitResult::trace)
      .def_readonly("final_loss", &FitResult::final_loss)
      .def_readonly("grid", &FitResult::grid);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("axis_name", &SweepResult::axis_name)
      .def_readonly("config_ids", &SweepResult::config_ids)
      .def_readonly("axis", &SweepResult::axis)
      .def_readonly("mean_loss", &SweepResult::mean_loss)
      .def_readonly("std_loss", &SweepResult::std_loss);

  m.def("run_fit", &run_fit, py::arg("spec"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run_depth_sweep", &run_depth_sweep, py::arg("base"), py::arg("d_e_values"),
        py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("run_noise_sweep", &run_noise_sweep, py::arg("base"), py::arg("strengths"),
        py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());

  // ---- selftest ----
  m.def("selftest", [](const std::string& fault) {
    py::list out;
    for (const CheckResult& r : run_selftest(fault)) {
      out.append(py::make_tuple(r.name, r.passed, r.detail));
    }
    return out;
  }, py::arg("inject_fault") = std::string());
}
