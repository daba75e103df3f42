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

#include "harness/config.h"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "ifom/types.h"

namespace ifom::harness {
namespace {

template <class T>
T Get(const Json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ConfigError(std::string("config: bad type for '") + key + "'");
  }
}

NamedSpec ParseNamed(const Json& j, const char* key) {
  NamedSpec spec;
  if (!j.contains(key)) return spec;
  const Json& v = j.at(key);
  if (v.is_string()) {
    spec.name = v.get<std::string>();
    return spec;
  }
  if (!v.is_object() || !v.contains("name") || !v.at("name").is_string()) {
    throw ConfigError(std::string("config: '") + key + "' needs a name");
  }
  spec.name = v.at("name").get<std::string>();
  if (v.contains("params")) {
    if (!v.at("params").is_object()) {
      throw ConfigError(std::string("config: '") + key +
                        ".params' must be an object");
    }
    spec.params = v.at("params");
  }
  return spec;
}

}  // namespace

ExperimentKind ParseKind(const std::string& name) {
  if (name == "run") return ExperimentKind::kRun;
  if (name == "sweep") return ExperimentKind::kSweep;
  if (name == "probe") return ExperimentKind::kProbe;
  if (name == "report") return ExperimentKind::kReport;
  if (name == "verify") return ExperimentKind::kVerify;
  throw ConfigError("config: unknown experiment kind '" + name + "'");
}

std::string KindName(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kRun:
      return "run";
    case ExperimentKind::kSweep:
      return "sweep";
    case ExperimentKind::kProbe:
      return "probe";
    case ExperimentKind::kReport:
      return "report";
    case ExperimentKind::kVerify:
      break;
  }
  return "verify";
}

RunConfig ParseConfig(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");

  RunConfig config;
  config.source = text;
  config.hash = ContentHash(text);
  config.kind = ParseKind(Get<std::string>(j, "kind", "run"));
  config.problem = ParseNamed(j, "problem");
  config.algorithm = ParseNamed(j, "algorithm");
  if (j.contains("noise")) {
    const Json& n = j.at("noise");
    if (!n.is_object()) throw ConfigError("config: 'noise' must be an object");
    config.noise.policy = Get<std::string>(n, "policy", "exact");
    config.noise.alpha = Get<double>(n, "alpha", 0.0);
    config.noise.bits = Get<int>(n, "bits", 52);
    config.noise.grid_points = Get<int>(n, "grid_points", 256);
  }
  config.iterations = Get<int>(j, "iterations", 1000);
  config.seeds = Get<std::vector<uint64_t>>(j, "seeds", {1});
  config.output_dir = Get<std::string>(j, "output_dir", "");
  config.envelope = Get<bool>(j, "envelope", true);
  config.plot = Get<bool>(j, "plot", true);
  if (j.contains("expect_convergence")) {
    config.expect_convergence = Get<bool>(j, "expect_convergence", true);
  }
  if (j.contains("jobs")) config.jobs = Get<int>(j, "jobs", 0);
  if (j.contains("sweep")) {
    const Json& s = j.at("sweep");
    config.sweep.param = Get<std::string>(s, "param", "");
    config.sweep.values = Get<std::vector<double>>(s, "values", {});
  }
  if (j.contains("scan")) {
    const Json& s = j.at("scan");
    config.scan.alpha_grid = Get<std::vector<double>>(s, "alpha_grid", {});
    config.scan.step_grid = Get<std::vector<double>>(s, "step_grid", {});
    config.scan.alpha_points = Get<int>(s, "alpha_points", 32);
    config.scan.step_points = Get<int>(s, "step_points", 64);
    config.scan.grid_points = Get<int>(s, "grid_points", 256);
    if (s.contains("tolerance")) {
      config.scan.tolerance = Get<double>(s, "tolerance", 0.0);
    }
  }

  if (config.iterations < 1) throw ConfigError("config: iterations must be >= 1");
  if (config.seeds.empty()) throw ConfigError("config: seeds must be nonempty");
  const bool needs_problem = config.kind == ExperimentKind::kRun ||
                             config.kind == ExperimentKind::kSweep ||
                             config.kind == ExperimentKind::kProbe;
  if (needs_problem && config.problem.name.empty()) {
    throw ConfigError("config: missing 'problem'");
  }
  if (needs_problem && config.algorithm.name.empty()) {
    throw ConfigError("config: missing 'algorithm'");
  }
  if (config.kind == ExperimentKind::kSweep &&
      (config.sweep.param.empty() || config.sweep.values.empty())) {
    throw ConfigError("config: sweep needs 'param' and nonempty 'values'");
  }
  if (config.jobs && *config.jobs < 0) throw ConfigError("config: jobs must be >= 0");
  return config;
}

RunConfig LoadConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str());
}

std::string ContentHash(const std::string& content) {
  const std::string blob =
      "blob " + std::to_string(content.size()) + '\0' + content;
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(blob.data(), blob.size(), digest, &length, EVP_sha1(), nullptr);
  static const char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

}  // namespace ifom::harness
