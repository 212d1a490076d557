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

#ifndef ROEKIT_PIPELINE_HPP
#define ROEKIT_PIPELINE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "roekit/group.hpp"
#include "roekit/spectral.hpp"

namespace roekit {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kSchemaVersion = "roekit.report/1";
/// The only environment variable read: overrides the output directory.
inline constexpr const char* kOutDirEnv = "ROEKIT_OUT_DIR";

struct RunConfig {
  std::string family = "cyclic:4,8,16,32,64";
  std::int32_t radius = 1;
  std::string system = "auto";  // auto | generators | matching
  std::vector<double> p_values{1.5, 2.0, 3.0};
  double threshold = 0.999;
  int k_max = 200;
  double tol = 1e-12;
  double rayleigh_tol = 1e-10;
  double oracle_tol = 1e-9;
  std::uint64_t seed = 1;
  std::size_t budget = kDefaultBudget;
  std::string out = "roekit_out";
  std::size_t workers = 0;
  bool kazhdan = true;
  int lp_restarts = 32;
  int witness_samples = 10000;
  std::string pt;          // decompose: partial-translation file
  int samples = 1000;      // decompose: random batch size when no file
  std::int32_t net_radius = 2;
  std::vector<std::string> inputs;  // report: JSON files to merge
};

/// Sets one key from its text form. Throws kParse / kOutOfRange.
void set_config_value(RunConfig& config, std::string_view key, std::string_view value);
/// Flat `key = value` lines, '#' comments. Errors carry line and column.
RunConfig parse_config(std::string_view text, RunConfig base = {});
void apply_environment(RunConfig& config);

struct CommandResult {
  std::string command;
  std::string json;     // report document, numbers at 12 significant digits
  std::string csv;
  std::string summary;  // human-readable table and verdict lines
  std::string hash;     // FNV-1a 64 over the binary payload, hex
  bool passed = true;   // false iff an assertion-grade check failed
  std::vector<std::string> files;
};

/// generate | gap | decompose | kazhdan | mazur | net | report.
/// Writes its files under config.out. Throws on engine errors.
CommandResult run_command(std::string_view command, const RunConfig& config);

/// Builds the analysed system for a family: the generator system when the
/// radius is 1 (or system=generators), else the matching system of Δ_R.
FullTranslationSystem analysis_system(const GeneratedFamily& family, const RunConfig& config);

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t state = 0xcbf29ce484222325ULL);

}  // namespace roekit

#endif  // ROEKIT_PIPELINE_HPP
