/*
 * Copyright 2026 The roekit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "roekit/roekit.h"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

struct Flags {
  std::string config_file;
  std::map<std::string, std::string> values;  // config key -> text
  std::vector<std::string> inputs;
};

void add_common(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--config", flags.config_file, "flat key = value config file");
  auto opt = [&](const char* name, const char* key, const char* help) {
    cmd->add_option_function<std::string>(name, [&flags, key](const std::string& v) { flags.values[key] = v; }, help);
  };
  opt("--family", "family", "family descriptor, e.g. cyclic:4,8,16 or sl2:3,5,7");
  opt("--radius", "radius", "radius R of the generating entourage");
  opt("--system", "system", "auto | generators | matching");
  opt("--p", "p", "comma-separated exponents, e.g. 1.5,2,3");
  opt("--threshold", "threshold", "uniform-gap threshold on lambda");
  opt("--kmax", "kmax", "largest power in the Kazhdan iteration");
  opt("--tol", "tol", "stop the Kazhdan iteration below this norm");
  opt("--seed", "seed", "random seed");
  opt("--budget", "budget", "maximum points per component");
  opt("--out", "out", "output directory");
  opt("--workers", "workers", "worker threads (0 = all cores)");
}

int fail(const char* what) {
  std::fprintf(stderr, "roekit: %s: %s\n", what, rk_last_error());
  return kExitError;
}

int run(const std::string& command, const Flags& flags) {
  rk_config* config = nullptr;
  if (rk_config_new(&config) != RK_OK) return fail("config");
  auto cleanup = std::unique_ptr<rk_config, decltype(&rk_config_free)>(config, &rk_config_free);
  if (!flags.config_file.empty() && rk_config_load_file(config, flags.config_file.c_str()) != RK_OK) {
    return fail("config file");
  }
  if (rk_config_apply_env(config) != RK_OK) return fail("environment");
  for (const auto& [key, value] : flags.values) {
    if (rk_config_set(config, key.c_str(), value.c_str()) != RK_OK) return fail(("--" + key).c_str());
  }
  if (!flags.inputs.empty()) {
    std::string joined;
    for (const auto& in : flags.inputs) joined += (joined.empty() ? "" : ",") + in;
    if (rk_config_set(config, "inputs", joined.c_str()) != RK_OK) return fail("inputs");
  }

  rk_report* report = nullptr;
  if (rk_run(command.c_str(), config, &report) != RK_OK) return fail(command.c_str());
  auto release = std::unique_ptr<rk_report, decltype(&rk_report_free)>(report, &rk_report_free);
  std::fputs(rk_report_summary(report), stdout);
  for (size_t i = 0; i < rk_report_file_count(report); ++i) std::printf("wrote %s\n", rk_report_file(report, i));
  std::printf("determinism hash %s\n", rk_report_hash(report));
  const bool passed = rk_report_passed(report) != 0;
  std::printf("%s\n", passed ? "all checks passed" : "CHECK FAILURE (see checks in the report)");
  return passed ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"roekit: spectral gaps and decompositions on uniform Roe algebras of finite families"};
  app.set_version_flag("--version", std::string(rk_version()));
  app.require_subcommand(1);
  Flags flags;
  std::string selected;

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"generate", "build a family and write space and system files"},
      {"gap", "spectral report with the uniform-gap verdict"},
      {"decompose", "decompose partial translations into the translation system"},
      {"kazhdan", "tabulate ||A^k - P|| against lambda^k"},
      {"mazur", "Mazur map and almost-invariance experiments"},
      {"net", "extract a net and re-run the spectral report on it"},
      {"report", "merge JSON reports"},
  };
  for (const auto& spec : specs) {
    auto* cmd = app.add_subcommand(spec.name, spec.help);
    add_common(cmd, flags);
    const std::string name = spec.name;
    if (name == "decompose") {
      cmd->add_option_function<std::string>("--pt", [&flags](const std::string& v) { flags.values["pt"] = v; },
                                            "partial-translation file (pt v1); random batch when absent");
      cmd->add_option_function<std::string>(
          "--samples", [&flags](const std::string& v) { flags.values["samples"] = v; }, "random batch size");
    }
    if (name == "net") {
      cmd->add_option_function<std::string>(
          "--net-radius", [&flags](const std::string& v) { flags.values["net_radius"] = v; }, "net separation R");
    }
    if (name == "report") cmd->add_option("inputs", flags.inputs, "report JSON files")->required();
    cmd->callback([&selected, name] { selected = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }
  return run(selected, flags);
}
