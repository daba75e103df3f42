// Copyright 2026 The ifom Authors
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

#include "harness/cli.h"

#include <CLI11.hpp>

#include <exception>
#include <optional>
#include <string>

#include "harness/config.h"
#include "harness/experiments.h"
#include "harness/plot.h"
#include "ifom/types.h"

namespace ifom::harness {
namespace {

struct Flags {
  std::string config;
  std::optional<std::string> out;
  std::optional<uint64_t> seed;
  std::optional<int> jobs;

  CommandOptions Options() const { return {out, seed, jobs}; }
};

void AddFlags(CLI::App* cmd, Flags& flags, bool needs_config) {
  auto* opt = cmd->add_option("--config", flags.config, "experiment config (JSON)");
  if (needs_config) opt->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", flags.out, "output directory");
  cmd->add_option("--seed", flags.seed, "override the config's seeds");
  cmd->add_option("--jobs", flags.jobs, "worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
}

RunConfig Load(const Flags& flags, ExperimentKind expected) {
  RunConfig config = LoadConfig(flags.config);
  if (config.kind != expected) {
    throw ConfigError("config kind is '" + KindName(config.kind) +
                      "' but the subcommand is '" + KindName(expected) + "'");
  }
  return config;
}

}  // namespace

int Main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"First-order methods under relative gradient error"};
  app.require_subcommand(1);
  Flags flags;
  CLI::App* run = app.add_subcommand("run", "run one algorithm on one problem");
  CLI::App* sweep = app.add_subcommand("sweep", "run over a parameter list");
  CLI::App* probe = app.add_subcommand("probe", "alpha-threshold scan");
  CLI::App* report =
      app.add_subcommand("report", "print report.json and re-render plot.svg");
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  AddFlags(run, flags, true);
  AddFlags(sweep, flags, true);
  AddFlags(probe, flags, true);
  AddFlags(report, flags, false);
  AddFlags(verify, flags, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (run->parsed()) {
      return RunCommand(Load(flags, ExperimentKind::kRun), flags.Options(), out);
    }
    if (sweep->parsed()) {
      return SweepCommand(Load(flags, ExperimentKind::kSweep), flags.Options(),
                          out);
    }
    if (probe->parsed()) {
      return ProbeCommand(Load(flags, ExperimentKind::kProbe), flags.Options(),
                          out);
    }
    if (report->parsed()) {
      std::string dir;
      if (flags.out) {
        dir = *flags.out;
      } else if (!flags.config.empty()) {
        dir = ResolveOutputDir(LoadConfig(flags.config), flags.Options());
      } else {
        dir = ResolveOutputDir(RunConfig{}, flags.Options());
      }
      return ReportCommand(dir, out);
    }
    return VerifyCommand(flags.Options(), out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace ifom::harness
