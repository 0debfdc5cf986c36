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

#include "vqra/serialize.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace vqra {

namespace {

/// Strict object reader: rejects unknown keys so config typos fail loudly.
class ObjectReader {
 public:
  ObjectReader(json j, std::string scope) : j_(std::move(j)), scope_(std::move(scope)) {
    if (!j_.is_object()) {
      throw ConfigError("expected an object at '" + scope_ + "'");
    }
  }

  template <typename T>
  T get(const std::string& key, T fallback) {
    seen_.push_back(key);
    if (!j_.contains(key)) return fallback;
    return read<T>(key);
  }

  template <typename T>
  T require(const std::string& key) {
    seen_.push_back(key);
    if (!j_.contains(key)) {
      throw ConfigError("missing required key '" + qualified(key) + "'");
    }
    return read<T>(key);
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  json child(const std::string& key) {
    seen_.push_back(key);
    return j_.contains(key) ? j_.at(key) : json::object();
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      (void)value;
      if (std::find(seen_.begin(), seen_.end(), key) == seen_.end()) {
        throw ConfigError("unknown key '" + qualified(key) + "'");
      }
    }
  }

  std::string qualified(const std::string& key) const {
    return scope_.empty() ? key : scope_ + "." + key;
  }

 private:
  template <typename T>
  T read(const std::string& key) {
    try {
      return j_.at(key).get<T>();
    } catch (const json::exception&) {
      throw ConfigError("invalid value for key '" + qualified(key) + "'");
    }
  }

  json j_;
  std::string scope_;
  std::vector<std::string> seen_;
};

void check_range_int(int value, int lo, int hi, const std::string& key) {
  if (value < lo || value > hi) {
    throw ConfigError("key '" + key + "' must be in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "], got " + std::to_string(value));
  }
}

}  // namespace

json circuit_to_json(const MemoryParams& memory, const EncoderParams& encoder,
                     const CircuitConfig& config) {
  return json{{"k", memory.k},
              {"d_m", memory.d_m},
              {"d_e", encoder.d_e},
              {"n_features", encoder.n_features},
              {"config", config.id()},
              {"theta", memory.theta},
              {"xi", encoder.xi}};
}

void circuit_from_json(const json& j, MemoryParams& memory, EncoderParams& encoder,
                       CircuitConfig& config) {
  ObjectReader reader(j, "circuit");
  const int k = reader.require<int>("k");
  const int d_m = reader.require<int>("d_m");
  const int d_e = reader.require<int>("d_e");
  const int n_features = reader.require<int>("n_features");
  const int config_id = reader.require<int>("config");
  auto theta = reader.require<std::vector<double>>("theta");
  auto xi = reader.require<std::vector<double>>("xi");
  reader.finish();

  check_range_int(k, 1, kMaxStateQubits, "circuit.k");
  check_range_int(config_id, 1, 4, "circuit.config");
  try {
    memory = MemoryParams(k, d_m, std::move(theta));
    encoder = EncoderParams(k, d_e, n_features, std::move(xi));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("circuit: ") + e.what());
  }
  config = CircuitConfig::from_id(config_id);
}

json noise_to_json(const NoiseSpec& spec) {
  return json{{"channel", to_string(spec.channel.kind)},
              {"strength", spec.channel.strength}};
}

NoiseSpec noise_from_json(const json& j) {
  ObjectReader reader(j, "noise");
  const std::string channel = reader.get<std::string>("channel", "none");
  const double strength = reader.get<double>("strength", 0.0);
  reader.finish();
  NoiseSpec spec;
  try {
    spec.channel = make_channel(channel_kind_from_string(channel), strength);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("noise: ") + e.what());
  }
  return spec;
}

json eval_to_json(const EvalSpec& eval) {
  if (eval.mode == EvalSpec::Mode::Exact) {
    return json{{"mode", "exact"}};
  }
  return json{{"mode", "shots"}, {"shots", eval.shots}, {"seed", eval.seed}};
}

EvalSpec eval_from_json(const json& j) {
  ObjectReader reader(j, "eval_mode");
  const std::string mode = reader.get<std::string>("mode", "exact");
  if (mode == "exact") {
    reader.finish();
    return EvalSpec::exact();
  }
  if (mode != "shots") {
    throw ConfigError("eval_mode.mode must be 'exact' or 'shots'");
  }
  const auto shots = reader.require<std::uint64_t>("shots");
  const auto seed = reader.get<std::uint64_t>("seed", 0);
  reader.finish();
  if (shots == 0) throw ConfigError("eval_mode.shots must be >= 1");
  return EvalSpec::with_shots(shots, seed);
}

json checkpoint_to_json(const VqraModel& model, const std::vector<double>& loss_history) {
  return json{{"circuit", circuit_to_json(model.memory(), model.encoder(), model.config())},
              {"noise", noise_to_json(model.noise())},
              {"eval_mode", eval_to_json(model.eval())},
              {"loss_history", loss_history}};
}

VqraModel checkpoint_from_json(const json& j, std::vector<double>* loss_history) {
  ObjectReader reader(j, "");
  MemoryParams memory;
  EncoderParams encoder;
  CircuitConfig config;
  circuit_from_json(reader.child("circuit"), memory, encoder, config);
  const NoiseSpec noise = noise_from_json(reader.child("noise"));
  const EvalSpec eval = eval_from_json(reader.child("eval_mode"));
  if (loss_history != nullptr) {
    *loss_history = reader.get<std::vector<double>>("loss_history", {});
  } else {
    (void)reader.get<std::vector<double>>("loss_history", {});
  }
  reader.finish();
  try {
    return VqraModel(std::move(memory), std::move(encoder), config, noise, eval);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("checkpoint: ") + e.what());
  }
}

RunConfig run_config_from_json(const json& j) {
  ObjectReader reader(j, "");
  RunConfig config;
  ExperimentSpec& spec = config.spec;

  try {
    spec.target = target_from_string(reader.get<std::string>("target", "f4"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("target: ") + e.what());
  }
  spec.k = reader.get<int>("k", 3);
  spec.d_m = reader.get<int>("d_m", 3);
  spec.d_e = reader.get<int>("d_e", 6);
  spec.config_id = reader.get<int>("config_id", 4);
  spec.reg_lambda = reader.get<double>("reg_lambda", 0.0);
  check_range_int(spec.k, 1, kMaxStateQubits, "k");
  check_range_int(spec.d_m, 0, 64, "d_m");
  check_range_int(spec.d_e, 0, 64, "d_e");
  check_range_int(spec.config_id, 1, 4, "config_id");
  if (spec.reg_lambda < 0.0) throw ConfigError("key 'reg_lambda' must be >= 0");
  if (CircuitConfig::from_id(spec.config_id).memory_entanglers && spec.k < 2) {
    throw ConfigError("key 'k' must be >= 2 when the memory entanglers are on");
  }
  if (CircuitConfig::from_id(spec.config_id).encoder_entanglers && spec.k < 2) {
    throw ConfigError("key 'k' must be >= 2 when the encoder entanglers are on");
  }

  spec.noise = noise_from_json(reader.child("noise"));

  {
    ObjectReader train(reader.child("train"), "train");
    spec.train.iterations = train.get<int>("iterations", 2000);
    spec.train.rounds = train.get<int>("rounds", 10);
    spec.train.seed = train.get<std::uint64_t>("seed", 0);
    spec.train.fd_step = train.get<double>("fd_step", 1e-4);
    spec.train.lr = train.get<double>("lr", 0.01);
    spec.train.log_every = train.get<int>("log_every", 1);
    train.finish();
    if (spec.train.iterations < 0) throw ConfigError("key 'train.iterations' must be >= 0");
    if (spec.train.rounds < 1) throw ConfigError("key 'train.rounds' must be >= 1");
    if (!(spec.train.fd_step > 0)) throw ConfigError("key 'train.fd_step' must be > 0");
    if (!(spec.train.lr > 0)) throw ConfigError("key 'train.lr' must be > 0");
    if (spec.train.log_every < 1) throw ConfigError("key 'train.log_every' must be >= 1");
  }

  {
    ObjectReader data(reader.child("data"), "data");
    spec.sample_count = data.get<int>("samples", 0);
    spec.label_noise_sigma = data.get<double>("label_noise_sigma", 0.01);
    data.finish();
    if (spec.sample_count != 0 && spec.sample_count < 2) {
      throw ConfigError("key 'data.samples' must be >= 2 (or 0 for the default)");
    }
    if (spec.label_noise_sigma < 0.0) {
      throw ConfigError("key 'data.label_noise_sigma' must be >= 0");
    }
  }

  {
    ObjectReader sweep(reader.child("sweep"), "sweep");
    config.sweep_d_e = sweep.get<std::vector<int>>("d_e_values", config.sweep_d_e);
    config.sweep_strengths =
        sweep.get<std::vector<double>>("noise_strengths", config.sweep_strengths);
    const std::string channel = sweep.get<std::string>("channel", "depolarizing");
    sweep.finish();
    try {
      config.sweep_channel = channel_kind_from_string(channel);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("sweep.channel: ") + e.what());
    }
    if (config.sweep_channel == ChannelKind::Identity) {
      throw ConfigError("key 'sweep.channel' must name a non-identity channel");
    }
    if (config.sweep_d_e.empty()) throw ConfigError("key 'sweep.d_e_values' must be nonempty");
    for (int d : config.sweep_d_e) {
      if (d < 1) throw ConfigError("key 'sweep.d_e_values' entries must be >= 1");
    }
    if (config.sweep_strengths.empty()) {
      throw ConfigError("key 'sweep.noise_strengths' must be nonempty");
    }
    for (double p : config.sweep_strengths) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError("key 'sweep.noise_strengths' entries must lie in [0, 1]");
      }
    }
    if (!std::is_sorted(config.sweep_strengths.begin(), config.sweep_strengths.end())) {
      throw ConfigError("key 'sweep.noise_strengths' must be ascending");
    }
  }

  reader.finish();
  return config;
}

json run_config_to_json(const RunConfig& config) {
  const ExperimentSpec& spec = config.spec;
  return json{{"target", to_string(spec.target)},
              {"k", spec.k},
              {"d_m", spec.d_m},
              {"d_e", spec.d_e},
              {"config_id", spec.config_id},
              {"reg_lambda", spec.reg_lambda},
              {"noise", noise_to_json(spec.noise)},
              {"train",
               {{"iterations", spec.train.iterations},
                {"rounds", spec.train.rounds},
                {"seed", spec.train.seed},
                {"fd_step", spec.train.fd_step},
                {"lr", spec.train.lr},
                {"log_every", spec.train.log_every}}},
              {"data",
               {{"samples", spec.sample_count},
                {"label_noise_sigma", spec.label_noise_sigma}}},
              {"sweep",
               {{"d_e_values", config.sweep_d_e},
                {"noise_strengths", config.sweep_strengths},
                {"channel", to_string(config.sweep_channel)}}}};
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path.string() + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return run_config_from_json(j);
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  // Trim to the shortest representation that round-trips.
  for (int precision = 1; precision < 17; ++precision) {
    char shorter[40];
    std::snprintf(shorter, sizeof(shorter), "%.*g", precision, value);
    if (std::strtod(shorter, nullptr) == value) return shorter;
  }
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.parent_path().empty() ? "." : path.parent_path();
  fs::create_directories(dir);
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write '" + tmp.string() + "'");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      throw std::runtime_error("short write to '" + tmp.string() + "'");
    }
  }
  fs::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string trace_csv(const TrainTrace& trace) {
  std::string out = "iteration,loss\n";
  for (std::size_t i = 0; i < trace.loss_history.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_double(trace.loss_history[i]);
    out += '\n';
  }
  return out;
}

std::string predictions_csv(const std::vector<PredictionRow>& grid) {
  if (grid.empty()) return "";
  const std::size_t arity = grid.front().x.size();
  std::string out = arity == 1 ? "x,y_true,y_pred\n" : "x,x2,y_true,y_pred\n";
  for (const PredictionRow& row : grid) {
    for (double v : row.x) {
      out += format_double(v);
      out += ',';
    }
    out += format_double(row.y_true);
    out += ',';
    out += format_double(row.y_pred);
    out += '\n';
  }
  return out;
}

std::string sweep_csv(const SweepResult& sweep) {
  const bool depth = sweep.axis_name == "d_e";
  std::string out = depth ? "config,d_e,mean,std\n" : "config,p,mean,std\n";
  for (std::size_t ci = 0; ci < sweep.config_ids.size(); ++ci) {
    for (std::size_t ai = 0; ai < sweep.axis.size(); ++ai) {
      out += std::to_string(sweep.config_ids[ci]);
      out += ',';
      out += depth ? std::to_string(static_cast<int>(sweep.axis[ai]))
                   : format_double(sweep.axis[ai]);
      out += ',';
      out += format_double(sweep.mean_loss[ci][ai]);
      out += ',';
      out += format_double(sweep.std_loss[ci][ai]);
      out += '\n';
    }
  }
  return out;
}

std::string sweep_aggregate_csv(const SweepResult& sweep, const ExperimentSpec& base) {
  const bool depth = sweep.axis_name == "d_e";
  std::string out = "config_id,d_e,noise_p,mean_loss,std_loss\n";
  for (std::size_t ci = 0; ci < sweep.config_ids.size(); ++ci) {
    for (std::size_t ai = 0; ai < sweep.axis.size(); ++ai) {
      out += std::to_string(sweep.config_ids[ci]);
      out += ',';
      out += depth ? std::to_string(static_cast<int>(sweep.axis[ai]))
                   : std::to_string(base.d_e);
      out += ',';
      out += depth ? format_double(base.noise.channel.strength)
                   : format_double(sweep.axis[ai]);
      out += ',';
      out += format_double(sweep.mean_loss[ci][ai]);
      out += ',';
      out += format_double(sweep.std_loss[ci][ai]);
      out += '\n';
    }
  }
  return out;
}

std::string kernel_csv(const Eigen::MatrixXcd& gram) {
  std::string out = "row,col,re,im\n";
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = 0; j < gram.cols(); ++j) {
      out += std::to_string(i);
      out += ',';
      out += std::to_string(j);
      out += ',';
      out += format_double(gram(i, j).real());
      out += ',';
      out += format_double(gram(i, j).imag());
      out += '\n';
    }
  }
  return out;
}

std::string gnuplot_sweep_script(const SweepResult& sweep, const std::string& csv_name,
                                 const std::string& output_png) {
  const bool depth = sweep.axis_name == "d_e";
  std::ostringstream out;
  out << "set datafile separator ','\n"
      << "set terminal pngcairo size 900,600\n"
      << "set output '" << output_png << "'\n"
      << "set key top " << (depth ? "right" : "left") << "\n"
      << "set xlabel '" << (depth ? "encoder depth D_E" : "noise strength p") << "'\n"
      << "set ylabel 'final training loss (mean over rounds)'\n"
      << "set logscale y\n"
      << "plot ";
  for (std::size_t ci = 0; ci < sweep.config_ids.size(); ++ci) {
    if (ci > 0) out << ", \\\n     ";
    const int id = sweep.config_ids[ci];
    out << "'" << csv_name << "' using 2:($1==" << id << "?$3:1/0):4 with yerrorlines "
        << "title 'configuration " << id << "'";
  }
  out << "\n";
  return out.str();
}

std::string gnuplot_fit_script(int arity, const std::string& csv_name,
                               const std::string& output_png) {
  std::ostringstream out;
  out << "set datafile separator ','\n"
      << "set terminal pngcairo size 900,600\n"
      << "set output '" << output_png << "'\n";
  if (arity == 1) {
    out << "set xlabel 'x'\nset ylabel 'y'\n"
        << "plot '" << csv_name << "' using 1:2 every ::1 with lines title 'target', \\\n"
        << "     '" << csv_name << "' using 1:3 every ::1 with lines title 'model'\n";
  } else {
    out << "set xlabel 'x1'\nset ylabel 'x2'\nset view map\n"
        << "splot '" << csv_name
        << "' using 1:2:4 every ::1 with points pointtype 5 palette title 'model'\n";
  }
  return out.str();
}

}  // namespace vqra
