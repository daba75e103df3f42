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

#include "harness/experiments.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "harness/plot.h"
#include "ifom/min_solvers.h"
#include "ifom/oracles.h"
#include "ifom/probe.h"
#include "ifom/random.h"
#include "ifom/saddle_solvers.h"
#include "ifom/types.h"

namespace ifom::harness {
namespace {

namespace fs = std::filesystem;

constexpr double kEnvelopeSlack = 1e-12;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

// Worst-first ordering used to aggregate verdicts.
int Severity(Verdict v) {
  switch (v) {
    case Verdict::kConverged:
      return 0;
    case Verdict::kInconclusive:
      return 1;
    case Verdict::kDiverged:
      break;
  }
  return 2;
}

Verdict Worse(Verdict a, Verdict b) { return Severity(a) >= Severity(b) ? a : b; }

Json FitJson(const RateFit& fit) {
  Json j;
  j["rho_fit"] = std::isfinite(fit.rho) ? Json(fit.rho) : Json(nullptr);
  j["residual"] = fit.residual;
  j["slope_stderr"] = fit.slope_stderr;
  j["points"] = fit.points;
  return j;
}

std::string PrepareDir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir + "'");
  }
  return dir;
}

std::string Join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

void WriteJson(const std::string& path, const Json& j) {
  WriteFile(path, j.dump(2) + "\n");
}

RunConfig WithSeeds(const RunConfig& config, const CommandOptions& options) {
  RunConfig c = config;
  if (options.seed) c.seeds = {*options.seed};
  return c;
}

double AlphaEffOf(const NoiseSpec& noise, const Problem& problem,
                  uint64_t seed) {
  const NoisePolicy policy = MakePolicy(noise, seed);
  if (const auto* mp = std::get_if<MinProblem>(&problem)) {
    return InexactOracle::ForMin(*mp, policy).alpha_eff();
  }
  return InexactOracle::ForSaddle(std::get<SaddleProblem>(problem), policy)
      .alpha_eff();
}

SeedOutcome RunSeed(const RunConfig& config, const Problem& problem,
                    const ResolvedAlgorithm& alg, const Vector& start,
                    double tolerance, uint64_t seed) {
  SeedOutcome out;
  out.seed = seed;
  const NoisePolicy policy = MakePolicy(config.noise, seed);
  const int n = config.iterations;
  if (const auto* mp = std::get_if<MinProblem>(&problem)) {
    InexactOracle oracle = InexactOracle::ForMin(*mp, policy);
    Trace trace;
    if (alg.name == "reagm") {
      ReagmOptions options;
      options.alpha = alg.alpha;
      options.envelope_mode = alg.envelope_mode;
      options.mu_alg = alg.mu_alg;
      trace = ReagmRun(*mp, oracle, start, n, options);
    } else if (alg.name == "stm") {
      trace = StmRun(*mp, oracle, start, n);
    } else {
      GdOptions options;
      options.alpha = alg.alpha;
      options.step = alg.gd_step;
      trace = GdRun(*mp, oracle, start, n, options);
    }
    out.csv = ToCsv(trace);
    out.status = trace.status;
    out.calls = oracle.call_count();
    out.measure = trace.Gaps();
    for (const TraceRow& r : trace.rows) out.envelope.push_back(r.envelope);
  } else {
    const SaddleProblem& sp = std::get<SaddleProblem>(problem);
    SaddleTrace trace;
    if (alg.name == "eg") {
      const OperatorProblem op = ToOperator(sp);
      InexactOracle oracle = InexactOracle::ForOperator(op, policy);
      trace = EgRun(op, oracle, start, alg.eta_x, n);
      out.calls = oracle.call_count();
    } else {
      InexactOracle oracle = InexactOracle::ForSaddle(sp, policy);
      trace = alg.name == "sim-gda"
                  ? SimGdaRun(sp, oracle, start, alg.eta_x, alg.eta_y, n)
                  : AltGdaRun(sp, oracle, start, alg.eta_x, alg.eta_y, n);
      out.calls = oracle.call_count();
    }
    out.csv = ToCsv(trace);
    out.status = trace.status;
    out.measure = trace.SquaredDistances();
    out.envelope.assign(out.measure.size(), kNaN);
  }
  // Envelopes other than RE-AGM's come from the theoretical factor.
  if (alg.name != "reagm" && alg.rho_theory && alg.convergence_expected &&
      !out.measure.empty()) {
    for (size_t k = 0; k < out.measure.size(); ++k) {
      out.envelope[k] =
          out.measure[0] * std::pow(*alg.rho_theory, static_cast<double>(k));
    }
  }
  for (size_t k = 0; k < out.measure.size(); ++k) {
    const double e = out.envelope[k];
    if (std::isfinite(e) && out.measure[k] > e * (1.0 + kEnvelopeSlack)) {
      ++out.envelope_violations;
    }
  }
  out.fit = FitRate(out.measure);
  out.verdict = Classify(out.fit, out.status == RunStatus::kDiverged, tolerance);
  return out;
}

std::string MeasureName(const Problem& problem) {
  return std::holds_alternative<MinProblem>(problem) ? "f(x^k) - f*"
                                                     : "|z^k - z*|^2";
}

std::vector<std::string> SplitLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double ParseNumber(const std::string& s) {
  if (s.empty()) return kNaN;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return kNaN;
  return v;
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Csv ReadCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  Csv csv;
  std::string line;
  if (std::getline(in, line)) csv.header = SplitLine(line);
  while (std::getline(in, line)) {
    if (!line.empty()) csv.rows.push_back(SplitLine(line));
  }
  return csv;
}

}  // namespace

std::string ResolveOutputDir(const RunConfig& config,
                             const CommandOptions& options) {
  if (options.out_dir) return *options.out_dir;
  if (!config.output_dir.empty()) return config.output_dir;
  if (const char* env = std::getenv("INEXACT_FOM_OUT"); env && *env) {
    return env;
  }
  return "ifom_out";
}

int ResolveJobs(const RunConfig& config, const CommandOptions& options) {
  const int jobs = options.jobs.value_or(config.jobs.value_or(0));
  if (jobs < 0) throw ConfigError("jobs must be >= 0");
  return jobs;
}

void ParallelFor(int n, int jobs, const std::function<void(int)>& body) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp(jobs, 1, std::max(n, 1));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (int i = next++; i < n && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

RunOutcome ExecuteRun(const RunConfig& config, int jobs) {
  const Problem problem = MakeProblem(config.problem);
  RunOutcome out;
  out.problem = ProblemSummary(problem);
  out.alpha_eff = AlphaEffOf(config.noise, problem, config.seeds.front());
  out.algorithm = ResolveAlgorithm(config, problem, out.alpha_eff);
  const double mu = out.problem["mu"].get<double>();
  const double lip = out.problem["lip"].get<double>();
  out.tolerance = DefaultScanTolerance(mu, lip);
  const Vector start = ResolveStart(config, problem);
  out.seeds.resize(config.seeds.size());
  ParallelFor(static_cast<int>(config.seeds.size()), jobs, [&](int i) {
    out.seeds[i] = RunSeed(config, problem, out.algorithm, start,
                           out.tolerance, config.seeds[i]);
  });
  out.worst = Verdict::kConverged;
  for (const SeedOutcome& s : out.seeds) out.worst = Worse(out.worst, s.verdict);
  return out;
}

RunConfig WithParameter(const RunConfig& config, const std::string& param,
                        double value) {
  RunConfig c = config;
  if (param == "noise.alpha") {
    c.noise.alpha = value;
  } else if (param == "noise.bits") {
    c.noise.bits = static_cast<int>(value);
  } else if (param == "noise.grid_points") {
    c.noise.grid_points = static_cast<int>(value);
  } else if (param == "iterations") {
    c.iterations = static_cast<int>(value);
  } else if (param.rfind("algorithm.", 0) == 0) {
    c.algorithm.params[param.substr(10)] = value;
  } else if (param.rfind("problem.", 0) == 0) {
    c.problem.params[param.substr(8)] = value;
  } else {
    throw ConfigError("sweep: unknown parameter '" + param + "'");
  }
  return c;
}

int RunCommand(const RunConfig& base, const CommandOptions& options,
               std::ostream& log) {
  const RunConfig config = WithSeeds(base, options);
  const RunOutcome run = ExecuteRun(config, ResolveJobs(config, options));
  const std::string dir = PrepareDir(ResolveOutputDir(config, options));

  WriteFile(Join(dir, "trace.csv"), run.seeds.front().csv);
  if (run.seeds.size() > 1) {
    for (const SeedOutcome& s : run.seeds) {
      WriteFile(Join(dir, "trace_seed" + std::to_string(s.seed) + ".csv"),
                s.csv);
    }
  }

  const bool expected =
      config.expect_convergence.value_or(run.algorithm.convergence_expected);
  Json report;
  report["kind"] = "run";
  report["config_hash"] = config.hash;
  report["problem"] = run.problem;
  report["algorithm"] = run.algorithm.name;
  report["algorithm_params"] = config.algorithm.params;
  report["noise"] = {{"policy", config.noise.policy},
                     {"alpha_eff", run.alpha_eff}};
  report["iterations"] = config.iterations;
  report["theory"] = run.algorithm.theory;
  report["tolerance"] = run.tolerance;
  report["convergence_expected"] = expected;
  report["verdict"] = VerdictName(run.worst);
  Json seeds = Json::array();
  int64_t violations = 0;
  for (const SeedOutcome& s : run.seeds) {
    Json j = FitJson(s.fit);
    j["seed"] = s.seed;
    j["status"] = StatusName(s.status);
    j["calls"] = s.calls;
    j["verdict"] = VerdictName(s.verdict);
    j["final"] = s.measure.empty() ? Json(nullptr) : Json(s.measure.back());
    j["envelope_violations"] = s.envelope_violations;
    violations += s.envelope_violations;
    seeds.push_back(j);
  }
  report["runs"] = seeds;
  report["envelope_violations"] = violations;
  WriteJson(Join(dir, "report.json"), report);

  if (config.plot) {
    std::vector<Series> series;
    const size_t shown = std::min<size_t>(run.seeds.size(), 6);
    for (size_t i = 0; i < shown; ++i) {
      Series s;
      s.name = "seed " + std::to_string(run.seeds[i].seed);
      for (size_t k = 0; k < run.seeds[i].measure.size(); ++k) {
        s.x.push_back(static_cast<double>(k));
        s.y.push_back(run.seeds[i].measure[k]);
      }
      series.push_back(std::move(s));
    }
    const SeedOutcome& first = run.seeds.front();
    if (std::any_of(first.envelope.begin(), first.envelope.end(),
                    [](double e) { return std::isfinite(e); })) {
      Series env;
      env.name = "envelope";
      env.dashed = true;
      for (size_t k = 0; k < first.envelope.size(); ++k) {
        env.x.push_back(static_cast<double>(k));
        env.y.push_back(first.envelope[k]);
      }
      series.push_back(std::move(env));
    }
    const std::string measure = run.problem.contains("dx") ? "|z^k - z*|^2"
                                                           : "f(x^k) - f*";
    WriteFile(Join(dir, "plot.svg"),
              LogPlot(run.algorithm.name + " on " + config.problem.name +
                          ", " + config.noise.policy + " noise",
                      "iteration k", measure, series));
  }

  for (const SeedOutcome& s : run.seeds) {
    log << "seed " << s.seed << ": " << VerdictName(s.verdict)
        << " rho_fit=" << FormatDouble(s.fit.rho)
        << " final=" << FormatDouble(s.measure.empty() ? kNaN : s.measure.back())
        << " envelope_violations=" << s.envelope_violations << '\n';
  }
  log << "verdict " << VerdictName(run.worst) << " -> " << dir << '\n';
  if (expected && run.worst == Verdict::kDiverged) return kExitDiverged;
  return kExitOk;
}

int SweepCommand(const RunConfig& base, const CommandOptions& options,
                 std::ostream& log) {
  const RunConfig config = WithSeeds(base, options);
  const int nv = static_cast<int>(config.sweep.values.size());
  const int ns = static_cast<int>(config.seeds.size());
  // Validate every point before spending time on any of them.
  std::vector<RunConfig> points;
  for (double v : config.sweep.values) {
    points.push_back(WithParameter(config, config.sweep.param, v));
  }
  std::vector<RunOutcome> results(nv * ns);
  ParallelFor(nv * ns, ResolveJobs(config, options), [&](int cell) {
    RunConfig c = points[cell / ns];
    c.seeds = {config.seeds[cell % ns]};
    results[cell] = ExecuteRun(c, 1);
  });
  const std::string dir = PrepareDir(ResolveOutputDir(config, options));

  std::string csv = "value,seed,rho_fit,verdict,final,envelope_violations\n";
  Json rows = Json::array();
  bool diverged_when_expected = false;
  std::vector<Series> series(std::min(ns, 6));
  for (int s = 0; s < static_cast<int>(series.size()); ++s) {
    series[s].name = "seed " + std::to_string(config.seeds[s]);
  }
  for (int cell = 0; cell < nv * ns; ++cell) {
    const double value = config.sweep.values[cell / ns];
    const RunOutcome& r = results[cell];
    const SeedOutcome& s = r.seeds.front();
    const double final_value = s.measure.empty() ? kNaN : s.measure.back();
    csv += FormatDouble(value) + ',' + std::to_string(s.seed) + ',' +
           FormatDouble(s.fit.rho) + ',' + VerdictName(s.verdict) + ',' +
           FormatDouble(final_value) + ',' +
           std::to_string(s.envelope_violations) + '\n';
    const bool expected = points[cell / ns].expect_convergence.value_or(
        r.algorithm.convergence_expected);
    if (expected && s.verdict == Verdict::kDiverged) {
      diverged_when_expected = true;
    }
    Json j = FitJson(s.fit);
    j["value"] = value;
    j["seed"] = s.seed;
    j["verdict"] = VerdictName(s.verdict);
    j["convergence_expected"] = expected;
    j["theory"] = r.algorithm.theory;
    rows.push_back(j);
    if (cell % ns < static_cast<int>(series.size())) {
      series[cell % ns].x.push_back(value);
      series[cell % ns].y.push_back(s.fit.rho);
    }
  }
  WriteFile(Join(dir, "sweep.csv"), csv);
  Json report;
  report["kind"] = "sweep";
  report["config_hash"] = config.hash;
  report["param"] = config.sweep.param;
  report["problem"] = results.front().problem;
  report["algorithm"] = config.algorithm.name;
  report["noise"] = {{"policy", config.noise.policy}};
  report["iterations"] = config.iterations;
  report["tolerance"] = results.front().tolerance;
  report["points"] = rows;
  WriteJson(Join(dir, "report.json"), report);
  if (config.plot) {
    WriteFile(Join(dir, "plot.svg"),
              LinePlot(config.algorithm.name + ": fitted rate vs " +
                           config.sweep.param,
                       config.sweep.param, "rho_fit", series));
  }
  log << "sweep of " << config.sweep.param << ": " << nv << " values x " << ns
      << " seeds -> " << dir << '\n';
  return diverged_when_expected ? kExitDiverged : kExitOk;
}

int ProbeCommand(const RunConfig& base, const CommandOptions& options,
                 std::ostream& log) {
  const RunConfig config = WithSeeds(base, options);
  const Problem problem = MakeProblem(config.problem);
  const auto* sp = std::get_if<SaddleProblem>(&problem);
  if (!sp) throw ConfigError("probe needs a saddle problem");
  ScanConfig scan;
  scan.algorithm = ParseSaddleAlgorithm(config.algorithm.name);
  scan.alpha_grid = config.scan.alpha_grid.empty()
                        ? DefaultAlphaGrid(scan.algorithm, sp->mu, sp->lip,
                                           config.scan.alpha_points)
                        : config.scan.alpha_grid;
  scan.step_grid = config.scan.step_grid.empty()
                       ? DefaultStepGrid(sp->lip, config.scan.step_points)
                       : config.scan.step_grid;
  scan.iterations = config.iterations;
  scan.seeds = config.seeds;
  scan.tolerance = config.scan.tolerance;
  scan.jobs = ResolveJobs(config, options);
  scan.grid_points = config.scan.grid_points;
  scan.z_start = ResolveStart(config, problem);
  const ScanResult result = AlphaThresholdScan(*sp, scan);
  const std::string dir = PrepareDir(ResolveOutputDir(config, options));

  WriteFile(Join(dir, "scan.csv"), ScanToCsv(result));
  const bool eg = scan.algorithm == SaddleAlgorithm::kEg;
  const double unit = eg ? std::sqrt(sp->mu / sp->lip) : sp->mu / sp->lip;
  Json report;
  report["kind"] = "probe";
  report["config_hash"] = config.hash;
  report["problem"] = ProblemSummary(problem);
  report["algorithm"] = result.algorithm;
  report["iterations"] = scan.iterations;
  report["seeds"] = scan.seeds;
  report["tolerance"] = result.tolerance;
  report["alpha_grid"] = result.alpha_grid;
  report["step_grid"] = result.step_grid;
  report["threshold"] =
      result.threshold ? Json(*result.threshold) : Json(nullptr);
  report["threshold_unit"] = eg ? "sqrt(mu/L)" : "mu/L";
  report["threshold_in_units"] =
      result.threshold ? Json(*result.threshold / unit) : Json(nullptr);
  Json theory;
  theory["sim_gda_threshold"] = SimGdaThreshold(sp->mu, sp->lip);
  theory["alt_gda_threshold"] = AltGdaThreshold(sp->mu, sp->lip);
  const EgThresholdResult best = EgBestThreshold(sp->mu, sp->lip);
  theory["eg_alpha_max"] = best.alpha_max;
  theory["eg_best_c"] = best.c;
  theory["eg_alpha_max_exact"] = EgExactThreshold(sp->mu, sp->lip, best.c);
  report["theory"] = theory;
  Json violations = Json::array();
  for (const auto& [i, j] : result.monotonicity_violations) {
    violations.push_back({result.alpha_grid[i], result.step_grid[j]});
  }
  report["monotonicity_violations"] = violations;
  WriteJson(Join(dir, "report.json"), report);
  if (config.plot) {
    WriteFile(Join(dir, "plot.svg"),
              Heatmap(result.algorithm + " on " + config.problem.name +
                          ": fitted rho over (eta, alpha)",
                      result.alpha_grid, result.step_grid, result.rho,
                      result.threshold));
  }
  log << result.algorithm << " threshold ";
  if (result.threshold) {
    log << FormatDouble(*result.threshold) << " = "
        << FormatDouble(*result.threshold / unit) << " "
        << (eg ? "sqrt(mu/L)" : "mu/L");
  } else {
    log << "none";
  }
  log << "; monotonicity violations " << violations.size() << " -> " << dir
      << '\n';
  return kExitOk;
}

namespace {

std::string Cell(const Json& v) {
  if (v.is_number_float()) return FormatDouble(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Flattens report.json into a two-column table.
void PrintReportTable(const Json& report, std::ostream& log) {
  std::vector<std::pair<std::string, std::string>> rows;
  const std::function<void(const std::string&, const Json&)> walk =
      [&](const std::string& prefix, const Json& v) {
        if (v.is_object()) {
          for (const auto& [key, child] : v.items()) {
            walk(prefix.empty() ? key : prefix + "." + key, child);
          }
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
          for (size_t i = 0; i < v.size(); ++i) {
            walk(prefix + "[" + std::to_string(i) + "]", v[i]);
          }
        } else if (!v.is_array()) {
          rows.emplace_back(prefix, Cell(v));
        }
      };
  walk("", report);
  size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [key, value] : rows) {
    log << std::left << std::setw(static_cast<int>(width) + 2) << key << value
        << '\n';
  }
}

}  // namespace

int ReportCommand(const std::string& dir, std::ostream& log) {
  const std::string report_path = Join(dir, "report.json");
  if (fs::exists(report_path)) {
    std::ifstream in(report_path);
    try {
      PrintReportTable(Json::parse(in), log);
    } catch (const Json::exception& e) {
      throw IoError("malformed report.json: " + std::string(e.what()));
    }
  }
  const std::string scan_path = Join(dir, "scan.csv");
  const std::string trace_path = Join(dir, "trace.csv");
  if (fs::exists(scan_path)) {
    const Csv csv = ReadCsv(scan_path);
    std::set<double> alphas, etas;
    for (const auto& row : csv.rows) {
      if (row.size() < 5) throw IoError("malformed scan.csv");
      alphas.insert(ParseNumber(row[0]));
      etas.insert(ParseNumber(row[1]));
    }
    const std::vector<double> ag(alphas.begin(), alphas.end());
    const std::vector<double> eg(etas.begin(), etas.end());
    std::map<std::pair<double, double>, double> rho;
    std::map<std::pair<double, double>, Verdict> verdict;
    for (const auto& row : csv.rows) {
      const auto key = std::make_pair(ParseNumber(row[0]), ParseNumber(row[1]));
      const double r = ParseNumber(row[3]);
      const Verdict v = row[4] == "converged"   ? Verdict::kConverged
                        : row[4] == "diverged" ? Verdict::kDiverged
                                               : Verdict::kInconclusive;
      auto [it, fresh] = rho.emplace(key, r);
      if (!fresh && !(it->second >= r)) it->second = r;
      auto [vt, vfresh] = verdict.emplace(key, v);
      if (!vfresh) vt->second = Worse(vt->second, v);
    }
    std::vector<std::vector<double>> grid(ag.size(),
                                          std::vector<double>(eg.size(), kNaN));
    std::optional<double> threshold;
    for (size_t i = 0; i < ag.size(); ++i) {
      for (size_t j = 0; j < eg.size(); ++j) {
        const auto key = std::make_pair(ag[i], eg[j]);
        if (auto it = rho.find(key); it != rho.end()) grid[i][j] = it->second;
        if (auto it = verdict.find(key);
            it != verdict.end() && it->second == Verdict::kConverged) {
          threshold = ag[i];
        }
      }
    }
    WriteFile(Join(dir, "plot.svg"),
              Heatmap("fitted rho over (eta, alpha)", ag, eg, grid, threshold));
    log << "scan: " << ag.size() << " alphas x " << eg.size()
        << " steps, threshold "
        << (threshold ? FormatDouble(*threshold) : std::string("none")) << '\n';
    return kExitOk;
  }
  if (fs::exists(trace_path)) {
    const Csv csv = ReadCsv(trace_path);
    if (csv.header.size() < 2) throw IoError("malformed trace.csv");
    const bool min_trace = csv.header[1] == "gap";
    Series measure, envelope;
    measure.name = csv.header[1];
    envelope.name = "envelope";
    envelope.dashed = true;
    std::vector<double> values;
    for (const auto& row : csv.rows) {
      if (row.size() < 2) throw IoError("malformed trace.csv");
      const double k = ParseNumber(row[0]);
      measure.x.push_back(k);
      measure.y.push_back(ParseNumber(row[1]));
      values.push_back(measure.y.back());
      if (min_trace && row.size() >= 6) {
        envelope.x.push_back(k);
        envelope.y.push_back(ParseNumber(row[5]));
      }
    }
    std::vector<Series> series = {measure};
    if (std::any_of(envelope.y.begin(), envelope.y.end(),
                    [](double e) { return std::isfinite(e); })) {
      series.push_back(envelope);
    }
    WriteFile(Join(dir, "plot.svg"),
              LogPlot("trace", "iteration k", measure.name, series));
    const RateFit fit = FitRate(values);
    log << "trace: " << values.size() << " rows, final "
        << FormatDouble(values.empty() ? kNaN : values.back()) << ", rho_fit "
        << FormatDouble(fit.rho) << '\n';
    return kExitOk;
  }
  if (fs::exists(report_path)) return kExitOk;  // sweeps: table only
  throw IoError("no report.json, trace.csv or scan.csv in '" + dir + "'");
}

namespace {

struct Check {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

std::string Sci(double v) {
  std::ostringstream s;
  s << std::setprecision(3) << v;
  return s.str();
}

void Corollary1Suite(std::vector<Check>& checks) {
  const MinProblem p = RandomQuadratic(10, 1.0, 100.0, 11);
  struct Case {
    std::string name;
    NoisePolicy policy;
    double tolerance;
  };
  const std::vector<Case> cases = {
      {"exact", ExactPolicy{}, 0.0},
      {"sphere a=0.1", SpherePolicy{0.1, 1}, 1e-12},
      {"sphere a=0.3", SpherePolicy{0.3, 2}, 1e-12},
      {"sphere a=0.5", SpherePolicy{0.5, 3}, 1e-12},
      {"mantissa p=10", MantissaPolicy{10}, 0.0},
      {"mantissa p=23", MantissaPolicy{23}, 0.0},
  };
  for (const Case& c : cases) {
    InexactOracle oracle = InexactOracle::ForMin(p, c.policy);
    const Corollary1Report r =
        VerifyCorollary1(oracle, p.minimizer, 3.0, 10000, 5);
    const double worst = std::max(
        {r.max_bound_violation, r.max_sandwich_violation, r.max_angle_violation});
    checks.push_back({"corollary1", c.name, worst <= c.tolerance,
                      "max violation " + Sci(worst)});
  }
}

void DescentSuite(std::vector<Check>& checks) {
  const std::vector<MinProblem> problems = {
      NesterovWorst(20, 1.0, 100.0), RandomQuadratic(20, 0.1, 10.0, 3),
      RegularizedLogistic(100, 10, 0.01, 4)};
  for (const MinProblem& p : problems) {
    for (double alpha : {0.0, 0.1, 0.3}) {
      const double h = NoiseCorrectedStep(p.lip, alpha);
      const double l_hat = NoiseCorrectedLipschitz(p.lip, alpha);
      InexactOracle oracle = InexactOracle::ForMin(p, SpherePolicy{alpha, 7});
      Rng rng(DeriveSeed(17, static_cast<uint64_t>(alpha * 100)));
      double worst = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < 1000; ++i) {
        const Vector x = p.minimizer + rng.Gaussian(p.dimension);
        const Vector g = p.gradient(x);
        const double lhs = p.value(x - h * oracle.Query(x));
        worst = std::max(worst,
                         lhs - (p.value(x) - g.squaredNorm() / (2.0 * l_hat)));
      }
      checks.push_back({"descent", p.name + " a=" + Sci(alpha),
                        worst <= 1e-9, "max excess " + Sci(worst)});
    }
  }
}

void RootSuite(std::vector<Check>& checks) {
  double residual = 0.0;
  double worst_ratio = std::numeric_limits<double>::infinity();
  bool in_unit = true;
  int count = 0;
  for (int i = 0; i < 40; ++i) {
    const double ratio = std::pow(10.0, -6.0 + 6.0 * i / 40.0);  // < 1
    for (int t = 0; t < 25; ++t) {
      const double tau = 0.5 * t / 24.0;
      const double alpha = ReagmAlphaForTau(1.0, ratio, tau);
      const ReagmConstants c = ComputeReagmConstants(1.0, ratio, alpha);
      residual = std::max(residual, std::abs(c.m * c.a * c.a +
                                             (c.s - c.m) * c.a - c.q));
      in_unit = in_unit && c.a > 0.0 && c.a < 1.0;
      worst_ratio =
          std::min(worst_ratio, c.a / (0.1 * std::pow(ratio, 0.5 + tau)));
      ++count;
    }
  }
  // Below the optimal-rate noise level a stays above sqrt(mu/L)/10.
  double worst_opt = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 40; ++i) {
    const double ratio = std::pow(10.0, -6.0 + 6.0 * i / 40.0);
    for (int t = 0; t <= 10; ++t) {
      const double alpha = ReagmOptimalRateAlpha(1.0, ratio) * t / 10.0;
      const ReagmConstants c = ComputeReagmConstants(1.0, ratio, alpha);
      worst_opt = std::min(worst_opt, c.a / (0.1 * std::sqrt(ratio)));
    }
  }
  checks.push_back({"a-root", "a >= sqrt(mu/L)/10 at small alpha",
                    worst_opt >= 1.0, "min a/bound " + Sci(worst_opt)});
  checks.push_back({"a-root", "0 < a < 1", in_unit,
                    std::to_string(count) + " pairs"});
  checks.push_back({"a-root", "a >= (mu/L)^(1/2+tau)/10", worst_ratio >= 1.0,
                    "min a/bound " + Sci(worst_ratio)});
  checks.push_back({"a-root", "quadratic residual", residual <= 1e-12,
                    "max " + Sci(residual)});
}

void FiniteDiffSuite(std::vector<Check>& checks) {
  const int d = 20;
  for (double eps_f : {0.0, 1e-8}) {
    const MinProblem p = RandomQuadratic(d, 1.0, 10.0, 21);
    const double sigma = eps_f > 0.0 ? FiniteDiffStep(p.lip, eps_f) : 1e-6;
    const double bound = FiniteDiffErrorBound(d, p.lip, sigma, eps_f);
    const ScalarFn f = eps_f > 0.0 ? PerturbedValue(p.value, eps_f, 5) : p.value;
    Rng rng(9);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Vector x = rng.Gaussian(d);
      worst = std::max(worst,
                       (FiniteDiffGradient(f, x, sigma) - p.gradient(x)).norm());
    }
    checks.push_back({"finite-diff", "eps_f=" + Sci(eps_f), worst <= bound,
                      "max err " + Sci(worst) + " bound " + Sci(bound)});
  }
}

}  // namespace

int VerifyCommand(const CommandOptions& options, std::ostream& log) {
  (void)options;
  std::vector<Check> checks;
  Corollary1Suite(checks);
  DescentSuite(checks);
  RootSuite(checks);
  FiniteDiffSuite(checks);
  bool all = true;
  log << std::left << std::setw(13) << "suite" << std::setw(38) << "case"
      << std::setw(8) << "result" << "detail\n";
  for (const Check& c : checks) {
    all = all && c.pass;
    log << std::left << std::setw(13) << c.suite << std::setw(38) << c.name
        << std::setw(8) << (c.pass ? "PASS" : "FAIL") << c.detail << '\n';
  }
  log << (all ? "all suites passed" : "some checks FAILED") << '\n';
  return all ? kExitOk : kExitFailure;
}

}  // namespace ifom::harness
