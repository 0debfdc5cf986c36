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

#include "vqra/cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "vqra/selftest.hpp"
#include "vqra/serialize.hpp"
#include "vqra/util.hpp"

namespace vqra::cli {

namespace {

namespace fs = std::filesystem;

/// Shot-mode seed is split off the run seed the same way the dataset seed is.
constexpr std::uint64_t kShotSeedTag = 2000003;

struct OutputFile {
  std::string name;
  std::string content;
};

json manifest_json(const std::string& command, const CommonOptions& options,
                   const json& resolved_config, std::uint64_t seed, double wall_time_s,
                   const std::vector<OutputFile>& outputs) {
  json entries = json::array();
  for (const OutputFile& f : outputs) {
    char hash[32];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(f.content)));
    entries.push_back({{"path", f.name}, {"fnv1a64", hash}});
  }
  return json{{"command", command},
              {"argv", options.argv_echo},
              {"config", resolved_config},
              {"seed", seed},
              {"version", kVersion},
              {"wall_time_s", wall_time_s},
              {"outputs", entries}};
}

void write_outputs(const fs::path& out_dir, const std::vector<OutputFile>& outputs) {
  for (const OutputFile& f : outputs) {
    write_file_atomic(out_dir / f.name, f.content);
  }
}

RunConfig load_config_with_overrides(const CommonOptions& options) {
  if (options.config_path.empty()) {
    throw ConfigError("missing required option '--config'");
  }
  RunConfig config = load_run_config(options.config_path);
  if (options.seed_override) {
    config.spec.train.seed = *options.seed_override;
  }
  if (options.shots_override) {
    if (*options.shots_override == 0) {
      throw ConfigError("option '--shots' must be >= 1");
    }
    config.spec.eval = EvalSpec::with_shots(*options.shots_override,
                                            config.spec.train.seed + kShotSeedTag);
  }
  return config;
}

int jobs_or_default(const CommonOptions& options) {
  return options.jobs > 0 ? options.jobs : default_jobs();
}

template <typename Body>
int run_command(const Body& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace

int cmd_fit(const CommonOptions& options) {
  return run_command([&] {
    const auto t0 = std::chrono::steady_clock::now();
    const RunConfig config = load_config_with_overrides(options);
    if (config.spec.d_e < 1 && config.spec.train.iterations > 0) {
      throw ConfigError("key 'd_e' must be >= 1 when training (degenerate circuit)");
    }

    const FitResult result = run_fit(config.spec);

    VqraModel model = config.spec.make_model();
    model.set_parameter_vector(result.trace.final_params);
    const json checkpoint = checkpoint_to_json(model, result.trace.loss_history);

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::vector<OutputFile> outputs;
    outputs.push_back({"trace.csv", trace_csv(result.trace)});
    outputs.push_back({"predictions.csv", predictions_csv(result.grid)});
    outputs.push_back({"checkpoint.json", checkpoint.dump(2) + "\n"});
    outputs.push_back(
        {"manifest.json",
         manifest_json("fit", options, run_config_to_json(config),
                       config.spec.train.seed, wall, outputs)
                 .dump(2) +
             "\n"});
    write_outputs(options.out_dir, outputs);

    if (!options.quiet) {
      std::cout << "fit: final mse " << format_double(result.final_loss.mse)
                << " after " << result.trace.loss_history.size() << " iterations ("
                << format_double(wall) << " s); outputs in " << options.out_dir
                << "\n";
    }
    return kExitOk;
  });
}

int cmd_sweep(const CommonOptions& options, const std::string& kind) {
  return run_command([&] {
    if (kind != "depth" && kind != "noise") {
      throw ConfigError("sweep kind must be 'depth' or 'noise', got '" + kind + "'");
    }
    const auto t0 = std::chrono::steady_clock::now();
    RunConfig config = load_config_with_overrides(options);
    if (config.spec.d_e < 1) {
      throw ConfigError("key 'd_e' must be >= 1 for sweeps");
    }

    SweepResult sweep;
    std::string csv_name;
    if (kind == "depth") {
      sweep = run_depth_sweep(config.spec, config.sweep_d_e, jobs_or_default(options));
      csv_name = "fig5.csv";
    } else {
      config.spec.noise.channel = make_channel(config.sweep_channel, 0.0);
      sweep = run_noise_sweep(config.spec, config.sweep_strengths,
                              jobs_or_default(options));
      csv_name = "fig6.csv";
    }

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string plot_name = kind == "depth" ? "fig5.gp" : "fig6.gp";
    const std::string png_name = kind == "depth" ? "fig5.png" : "fig6.png";
    std::vector<OutputFile> outputs;
    outputs.push_back({csv_name, sweep_csv(sweep)});
    outputs.push_back({"aggregate.csv", sweep_aggregate_csv(sweep, config.spec)});
    outputs.push_back({plot_name, gnuplot_sweep_script(sweep, csv_name, png_name)});
    outputs.push_back(
        {"manifest.json",
         manifest_json("sweep-" + kind, options, run_config_to_json(config),
                       config.spec.train.seed, wall, outputs)
                 .dump(2) +
             "\n"});
    write_outputs(options.out_dir, outputs);

    if (!options.quiet) {
      std::cout << "sweep-" << kind << ": " << sweep.config_ids.size() << " configs x "
                << sweep.axis.size() << " points x " << config.spec.train.rounds
                << " rounds (" << format_double(wall) << " s); outputs in "
                << options.out_dir << "\n";
    }
    return kExitOk;
  });
}

int cmd_predict(const std::string& checkpoint_path,
                const std::vector<std::string>& x_tokens, bool quiet) {
  return run_command([&] {
    json j;
    try {
      std::istringstream in(read_file(checkpoint_path));
      in >> j;
    } catch (const json::exception& e) {
      throw ConfigError("checkpoint '" + checkpoint_path + "' is not valid JSON: " +
                        e.what());
    } catch (const std::runtime_error& e) {
      throw ConfigError(e.what());
    }
    const VqraModel model = checkpoint_from_json(j);
    const int arity = model.n_features();

    if (x_tokens.empty()) {
      throw ConfigError("predict: no input points given");
    }

    std::vector<std::vector<double>> rows;
    for (const std::string& token : x_tokens) {
      std::vector<double> x;
      std::stringstream parts(token);
      std::string part;
      while (std::getline(parts, part, ',')) {
        try {
          std::size_t used = 0;
          x.push_back(std::stod(part, &used));
          if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
          throw ConfigError("predict: cannot parse input value '" + part + "'");
        }
      }
      if (static_cast<int>(x.size()) != arity) {
        throw ConfigError("predict: input '" + token + "' has " +
                          std::to_string(x.size()) + " value(s); checkpoint expects " +
                          std::to_string(arity));
      }
      rows.push_back(std::move(x));
    }

    std::cout << (arity == 1 ? "x,prediction\n" : "x1,x2,prediction\n");
    for (const auto& x : rows) {
      for (double v : x) {
        if (v < -1.0 || v > 1.0) {
          if (!quiet) {
            std::cerr << "warning: input " << format_double(v)
                      << " outside the model domain [-1, 1]\n";
          }
          break;
        }
      }
      for (double v : x) std::cout << format_double(v) << ',';
      std::cout << format_double(model.predict(x)) << '\n';
    }
    return kExitOk;
  });
}

int cmd_selftest(const std::string& inject_fault, bool quiet) {
  return run_command([&] {
    const std::vector<CheckResult> results = run_selftest(inject_fault);
    std::size_t failed = 0;
    std::string first_failure;
    for (const CheckResult& r : results) {
      if (!r.passed && first_failure.empty()) first_failure = r.name;
      if (!r.passed) ++failed;
      if (!quiet || !r.passed) {
        std::printf("%-36s %s  %s\n", r.name.c_str(), r.passed ? "PASS" : "FAIL",
                    r.detail.c_str());
      }
    }
    std::printf("checks run: %zu, failed: %zu\n", results.size(), failed);
    if (failed > 0) {
      std::printf("FIRST FAILURE: %s\n", first_failure.c_str());
      return kExitRuntime;
    }
    return kExitOk;
  });
}

}  // namespace vqra::cli
