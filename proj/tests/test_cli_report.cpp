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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>

#include "json.hpp"
#include "helpers.hpp"
#include "roekit/decomp.hpp"
#include "roekit/error.hpp"
#include "roekit/io.hpp"
#include "roekit/pipeline.hpp"
#include "roekit/roekit.h"

using namespace roekit;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("roekit_test_" + name);
  fs::remove_all(dir);
  return dir;
}

template <class F>
std::pair<ErrorCode, std::string> failure(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return {e.code(), e.what()};
  }
  return {ErrorCode::kInternal, ""};
}

RunConfig small(const std::string& name, const std::string& family = "cyclic:4,8") {
  RunConfig c;
  c.family = family;
  c.out = scratch(name).string();
  c.witness_samples = 200;
  c.lp_restarts = 4;
  return c;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto c = parse_config("# comment\nfamily = sl2:3,5\n\np = 1.5, 4\nseed=9\nthreshold = 0.9\n");
  CHECK(c.family == "sl2:3,5");
  CHECK(c.p_values == std::vector<double>{1.5, 4.0});
  CHECK(c.seed == 9);
  CHECK(c.threshold == 0.9);
  CHECK(c.radius == 1);

  auto [code, what] = failure([] { parse_config("family = cyclic:4\nnonsense\n"); });
  CHECK(code == ErrorCode::kParse);
  CHECK(what.find("line 2, column 1") != std::string::npos);

  std::tie(code, what) = failure([] { parse_config("seed = 1\n  bogus = 3\n"); });
  CHECK(code == ErrorCode::kParse);
  CHECK(what.find("line 2, column 3") != std::string::npos);
  CHECK(what.find("bogus") != std::string::npos);

  std::tie(code, what) = failure([] { parse_config("radius = x\n"); });
  CHECK(code == ErrorCode::kParse);
  CHECK(what.find("line 1, column 10") != std::string::npos);

  RunConfig env;
  setenv(kOutDirEnv, "/tmp/roekit_env_out", 1);
  apply_environment(env);
  CHECK(env.out == "/tmp/roekit_env_out");
  unsetenv(kOutDirEnv);
}

TEST_CASE("file formats round trip") {
  const auto f = generate_family(parse_family_descriptor("cyclic:3,6"), kDefaultBudget);
  const auto space = read_space(write_space(*f.space));
  REQUIRE(space->component_count() == 2);
  CHECK(space->component(1).size() == 6);
  CHECK(space->component(1).edges() == f.space->component(1).edges());

  const auto sys = read_system(write_system(f.system), f.space);
  REQUIRE(sys.size() == f.system.size());
  for (std::size_t i = 0; i < sys.size(); ++i) CHECK(sys[i] == f.system[i]);

  const auto a = markov(f.system);
  const auto op = read_operator(write_operator(a.op()), f.space);
  CHECK(max_abs_difference(op, a.op()) == 0.0);

  std::mt19937_64 rng(4);
  const auto v = random_partial_translation(f.system.e0(), rng);
  const auto v2 = read_partial_translation(write_partial_translation(v), f.space);
  for (std::size_t c = 0; c < 2; ++c) CHECK(v2.pairs(c) == v.pairs(c));

  const auto d = cayley_decompose(v, f);
  const auto d2 = read_decomposition(write_decomposition(d), f.space, f.system.size());
  REQUIRE(d2.chi.size() == d.chi.size());
  for (std::size_t i = 0; i < d.chi.size(); ++i) CHECK(d2.chi[i] == d.chi[i]);

  auto [code, what] = failure([&] { read_space("space v1\ncomponents two\n"); });
  CHECK(code == ErrorCode::kParse);
  CHECK(what.find("line 2") != std::string::npos);
  std::tie(code, what) = failure([&] { read_partial_translation("pt v1\npair 0 99 0\n", f.space); });
  CHECK(code != ErrorCode::kInternal);
  CHECK(failure([] { read_text_file("/nonexistent/roekit/file"); }).first == ErrorCode::kIo);
}

TEST_CASE("generate command") {
  auto c = small("generate");
  const auto r = run_command("generate", c);
  CHECK(r.passed);
  const auto doc = json::parse(r.json);
  CHECK(doc["schema_version"] == "roekit.report/1");
  CHECK(doc["sections"]["space"]["components"].size() == 2);
  CHECK(doc["sections"]["space"]["total_points"] == 12);
  for (const auto& f : r.files) CHECK(fs::exists(f));

  c.family = "sl2:3";
  const auto s = json::parse(run_command("generate", c).json);
  CHECK(s["sections"]["space"]["total_points"] == 24);

  c.family = "cyclic:";
  CHECK(failure([&] { run_command("generate", c); }).first != ErrorCode::kInternal);
  CHECK(failure([&] { run_command("frobnicate", c); }).first == ErrorCode::kInvalidArgument);
}

TEST_CASE("gap command is deterministic") {
  auto c = small("gap");
  const auto a = run_command("gap", c);
  const auto b = run_command("gap", c);
  CHECK(a.passed);
  CHECK(a.hash == b.hash);
  CHECK(a.csv == b.csv);
  CHECK(a.csv.rfind("component_id,size,n,lambda,", 0) == 0);
  CHECK(a.summary.find("UNIFORM") != std::string::npos);

  c.workers = 1;
  CHECK(run_command("gap", c).hash == a.hash);
  c.seed = 2;
  CHECK(run_command("gap", c).hash != a.hash);
}

TEST_CASE("other commands") {
  auto c = small("others");
  c.samples = 50;
  CHECK(run_command("decompose", c).passed);
  c.k_max = 40;
  CHECK(run_command("kazhdan", c).passed);
  c.family = "cyclic:8,16";
  const auto net = run_command("net", c);
  CHECK(net.passed);
  CHECK(fs::exists(fs::path(c.out) / "net_inclusion.txt"));

  c.inputs = {(fs::path(c.out) / "decompose.json").string(), (fs::path(c.out) / "kazhdan.json").string()};
  const auto merged = run_command("report", c);
  CHECK(merged.passed);
  CHECK(json::parse(merged.json)["sections"].is_object());
}

TEST_CASE("c api") {
  CHECK(std::string(rk_version()) == "0.1.0");
  CHECK(std::string(rk_status_name(RK_E_NO_GAP)).size() > 0);

  rk_config* cfg = nullptr;
  REQUIRE(rk_config_new(&cfg) == RK_OK);
  CHECK(rk_config_set(cfg, "family", "cyclic:4,8") == RK_OK);
  CHECK(rk_config_set(cfg, "witness_samples", "100") == RK_OK);
  CHECK(rk_config_set(cfg, "lp_restarts", "4") == RK_OK);
  CHECK(rk_config_set(cfg, "out", scratch("capi").string().c_str()) == RK_OK);
  CHECK(rk_config_set(cfg, "no_such_key", "1") == RK_E_PARSE);
  CHECK(std::string(rk_last_error()).find("no_such_key") != std::string::npos);
  CHECK(rk_config_load_text(cfg, "seed = 3\nradius = -2\n") == RK_E_OUT_OF_RANGE);
  CHECK(rk_config_load_file(cfg, "/nonexistent/roekit.cfg") == RK_E_IO);

  rk_report* rep = nullptr;
  REQUIRE(rk_run("gap", cfg, &rep) == RK_OK);
  CHECK(rk_report_passed(rep) == 1);
  CHECK(std::string(rk_report_hash(rep)).size() == 16);
  CHECK(rk_report_file_count(rep) == 2);
  CHECK(json::parse(rk_report_json(rep))["command"] == "gap");
  rk_report_free(rep);
  CHECK(rk_run("gap", nullptr, &rep) == RK_E_NULL);
  rk_config_free(cfg);

  rk_family* fam = nullptr;
  CHECK(rk_family_generate("sl2:4", 1000, &fam) == RK_E_NOT_PRIME);
  CHECK(rk_family_generate("cyclic:4,6", 1000, &fam) == RK_E_INVALID_FILTRATION);
  CHECK(rk_family_generate("cyclic:4096", 100, &fam) == RK_E_BUDGET_EXCEEDED);
  REQUIRE(rk_family_generate("cyclic:4,8", 1000, &fam) == RK_OK);
  CHECK(rk_family_component_count(fam) == 2);
  int32_t size = 0;
  CHECK(rk_family_component_size(fam, 1, &size) == RK_OK);
  CHECK(size == 8);
  CHECK(rk_family_component_size(fam, 2, &size) == RK_E_OUT_OF_RANGE);
  CHECK(rk_family_system_size(fam) == 3);
  double lambda = 0.0;
  CHECK(rk_family_lambda(fam, 0, 1, &lambda) == RK_OK);
  CHECK(lambda == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  rk_family_free(fam);

  const double re[] = {4.0, -1.0, 0.0}, im[] = {0.0, 0.0, 0.0};
  double ore[3], oim[3];
  CHECK(rk_mazur_map(re, im, 3, 1.0, 2.0, ore, oim) == RK_OK);
  CHECK(ore[0] == doctest::Approx(2.0));
  CHECK(ore[1] == doctest::Approx(-1.0));
  CHECK(ore[2] == 0.0);
  CHECK(rk_mazur_map(re, im, 3, 0.5, 2.0, ore, oim) == RK_E_INVALID_EXPONENT);
}
