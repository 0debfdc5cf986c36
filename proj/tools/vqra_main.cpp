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

#include <CLI11.hpp>

#include "vqra/cli.hpp"

int main(int argc, char** argv) {
  using namespace vqra::cli;

  CLI::App app{"Variational quantum regression: simulator, trainer, and experiment runner"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  CommonOptions options;
  options.argv_echo.assign(argv, argv + argc);

  const auto add_common = [&](CLI::App* cmd, bool needs_config) {
    auto* config = cmd->add_option("--config", options.config_path, "JSON config file");
    if (needs_config) config->required();
    cmd->add_option("--out", options.out_dir, "output directory")
        ->capture_default_str();
    cmd->add_option("--jobs", options.jobs, "parallel workers (0 = all cores)")
        ->capture_default_str();
    cmd->add_option("--seed", options.seed_override, "override the config seed");
    cmd->add_option("--shots", options.shots_override,
                    "evaluate kernels from this many simulated shots");
    cmd->add_flag("--quiet", options.quiet, "suppress progress output");
  };

  CLI::App* fit = app.add_subcommand("fit", "train one model and export its outputs");
  add_common(fit, true);

  std::string sweep_kind;
  CLI::App* sweep = app.add_subcommand("sweep", "run a depth or noise sweep");
  add_common(sweep, true);
  sweep->add_option("--kind", sweep_kind, "depth | noise")->required();

  std::string checkpoint_path;
  std::vector<std::string> x_tokens;
  bool predict_quiet = false;
  CLI::App* predict =
      app.add_subcommand("predict", "evaluate a checkpoint at input points");
  predict->add_option("--checkpoint", checkpoint_path, "checkpoint.json from fit")
      ->required();
  predict->add_option("x", x_tokens,
                      "input points; comma-separate features for 2-D models");
  predict->add_flag("--quiet", predict_quiet, "suppress domain warnings");

  std::string inject_fault;
  bool selftest_quiet = false;
  CLI::App* selftest = app.add_subcommand("selftest", "run the fast invariant suite");
  selftest->add_option("--inject-fault", inject_fault,
                       "test hook: corrupt a named convention (gate-convention)");
  selftest->add_flag("--quiet", selftest_quiet, "print only failures and the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (fit->parsed()) return cmd_fit(options);
  if (sweep->parsed()) return cmd_sweep(options, sweep_kind);
  if (predict->parsed()) return cmd_predict(checkpoint_path, x_tokens, predict_quiet);
  if (selftest->parsed()) return cmd_selftest(inject_fault, selftest_quiet);
  return kExitConfig;
}
