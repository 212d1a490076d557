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

#include "roekit/pipeline.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <random>
#include <sstream>

#include "json.hpp"
#include "roekit/decomp.hpp"
#include "roekit/error.hpp"
#include "roekit/io.hpp"
#include "roekit/mazur.hpp"

namespace roekit {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

double parse_double(std::string_view key, const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || !std::isfinite(v)) {
    raise(ErrorCode::kParse, "'" + std::string(key) + "' expects a number, got '" + text + "'");
  }
  return v;
}

long long parse_int(std::string_view key, const std::string& text, long long lo) {
  char* end = nullptr;
  const long long v = std::strtoll(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0') {
    raise(ErrorCode::kParse, "'" + std::string(key) + "' expects an integer, got '" + text + "'");
  }
  if (v < lo) raise(ErrorCode::kOutOfRange, "'" + std::string(key) + "' must be >= " + std::to_string(lo));
  return v;
}

bool parse_bool(std::string_view key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  raise(ErrorCode::kParse, "'" + std::string(key) + "' expects true or false");
}

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Numbers in the emitted document carry 12 significant digits.
json rounded(const json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) return nullptr;
    return std::strtod(fmt(v).c_str(), nullptr);
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& e : j) out.push_back(rounded(e));
    return out;
  }
  if (j.is_object()) {
    json out = json::object();
    for (const auto& [k, v] : j.items()) out[k] = rounded(v);
    return out;
  }
  return j;
}

std::uint64_t hash_json(const json& j, std::uint64_t h) {
  auto feed = [&](const void* p, std::size_t n) {
    h = fnv1a(std::string_view(static_cast<const char*>(p), n), h);
  };
  const auto tag = static_cast<char>(j.type());
  feed(&tag, 1);
  if (j.is_number_float()) {
    const auto bits = std::bit_cast<std::uint64_t>(j.get<double>());
    feed(&bits, sizeof bits);
  } else if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    feed(&v, sizeof v);
  } else if (j.is_boolean()) {
    const char b = j.get<bool>() ? 1 : 0;
    feed(&b, 1);
  } else if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const auto n = static_cast<std::uint64_t>(s.size());
    feed(&n, sizeof n);
    feed(s.data(), s.size());
  } else if (j.is_array()) {
    for (const auto& e : j) h = hash_json(e, h);
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {  // keys iterate sorted
      const auto n = static_cast<std::uint64_t>(k.size());
      feed(&n, sizeof n);
      feed(k.data(), k.size());
      h = hash_json(v, h);
    }
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json config_echo(const RunConfig& c) {
  return {{"family", c.family},         {"radius", c.radius},     {"system", c.system},
          {"p", c.p_values},            {"threshold", c.threshold}, {"kmax", c.k_max},
          {"tol", c.tol},               {"rayleigh_tol", c.rayleigh_tol}, {"oracle_tol", c.oracle_tol},
          {"seed", c.seed},             {"budget", c.budget},     {"kazhdan", c.kazhdan},
          {"lp_restarts", c.lp_restarts}, {"witness_samples", c.witness_samples},
          {"samples", c.samples},       {"net_radius", c.net_radius}, {"pt", c.pt}};
}

struct Checks {
  json list = json::array();
  bool passed = true;

  void add(const std::string& name, std::optional<std::size_t> component, double value, double bound, bool ok) {
    json row = {{"name", name}, {"value", value}, {"bound", bound}, {"pass", ok}};
    if (component) row["component"] = *component;
    list.push_back(std::move(row));
    passed = passed && ok;
  }
};

// Finishes a document: hash over command + sections, provenance excluded.
CommandResult finish(std::string command, const RunConfig& config, json sections, Checks checks,
                     std::string csv, std::string summary) {
  CommandResult r;
  r.command = command;
  r.passed = checks.passed;
  sections["checks"] = std::move(checks.list);
  json hashed = {{"command", command}, {"sections", sections}, {"passed", r.passed}};
  r.hash = hex64(hash_json(hashed, fnv1a(kSchemaVersion)));
  json doc = {{"schema_version", kSchemaVersion},
              {"command", command},
              {"config", config_echo(config)},
              {"sections", std::move(sections)},
              {"passed", r.passed},
              {"determinism_hash", r.hash},
              {"provenance", {{"tool_version", kToolVersion}, {"seed", config.seed}, {"timestamp", utc_timestamp()}}}};
  r.json = rounded(doc).dump(2) + "\n";
  r.csv = std::move(csv);
  r.summary = std::move(summary);
  const fs::path out(config.out);
  write_text_file(out / (command + ".json"), r.json);
  r.files.push_back((out / (command + ".json")).string());
  if (!r.csv.empty()) {
    write_text_file(out / (command + ".csv"), r.csv);
    r.files.push_back((out / (command + ".csv")).string());
  }
  return r;
}

json space_section(const SpaceFamily& space, std::int32_t radius) {
  json comps = json::array();
  for (std::size_t c = 0; c < space.component_count(); ++c) {
    const auto& comp = space.component(c);
    comps.push_back({{"component", c},
                     {"size", comp.size()},
                     {"diameter", comp.diameter()},
                     {"edges", comp.edges().size()},
                     {"max_ball", comp.max_ball(radius)}});
  }
  return {{"components", comps}, {"total_points", space.total_points()}, {"max_ball", space.max_ball(radius)}};
}

json system_section(const FullTranslationSystem& system) {
  const auto check = system.check();
  return {{"size", system.size()},
          {"inverse_closed", system.inverse_closed()},
          {"e0_pairs", system.e0().pair_count()},
          {"bijective", check.bijective},
          {"supported", check.supported},
          {"covering", check.covering}};
}

SpectralOptions spectral_options(const RunConfig& config) {
  SpectralOptions o;
  o.gap.rayleigh_tol = config.rayleigh_tol;
  o.gap.oracle_tol = config.oracle_tol;
  o.lp.restarts = config.lp_restarts;
  o.kazhdan.k_max = config.k_max;
  o.kazhdan.tol = config.tol;
  o.p_values = config.p_values;
  o.run_kazhdan = config.kazhdan;
  o.threshold = config.threshold;
  o.witness_samples_small = config.witness_samples;
  o.witness_samples_large = std::min(config.witness_samples, 100);
  o.seed = config.seed;
  o.workers = config.workers;
  return o;
}

json kazhdan_json(const KazhdanTable& t) {
  json j = {{"lambda", t.lambda},   {"dominated", t.dominated}, {"monotone", t.monotone},
            {"rate", t.rate},       {"stopped_at_tol", t.stopped_at_tol}, {"steps", t.norms.size()},
            {"norms", t.norms}};
  if (t.entrywise_excess) j["entrywise_excess"] = *t.entrywise_excess;
  return j;
}

// Spectral section, the assertion-grade checks on it, CSV and table.
struct SpectralOutput {
  json section;
  std::string csv;
  std::string table;
};

SpectralOutput spectral_output(const SpectralReport& report, const RunConfig& config, Checks& checks) {
  SpectralOutput out;
  json comps = json::array();
  std::ostringstream csv, table;
  csv << "component_id,size,n,lambda";
  for (double p : config.p_values) csv << ",lambda_lo_p" << fmt(p) << ",lambda_hi_p" << fmt(p);
  csv << ",S_bound,c_bound,iters,flag\n";
  table << "component  size      n  lambda          S_bound         c_bound         flag\n";
  for (const auto& r : report.components) {
    json lp = json::array();
    for (const auto& iv : r.lp) {
      lp.push_back({{"p", iv.p}, {"lower", iv.lower}, {"upper", iv.upper}, {"norm1", iv.norm1}, {"norm_inf", iv.norm_inf}});
      checks.add("lp_interval_ordered", r.component, iv.lower, iv.upper, iv.lower <= iv.upper + 1e-12);
    }
    json j = {{"component", r.component},
              {"size", r.size},
              {"n", r.n},
              {"lambda", r.l2.lambda},
              {"iterations", r.l2.iterations},
              {"converged", r.l2.converged},
              {"singular_value_mode", r.l2.singular_value_mode},
              {"lp", lp},
              {"S_bound", r.s_bound},
              {"c_bound", r.c_bound},
              {"lambda_from_c", r.lambda_from_c},
              {"witness_samples", r.witness_samples},
              {"flag", r.flag}};
    if (r.l2.dense_lambda) {
      j["dense_lambda"] = *r.l2.dense_lambda;
      checks.add("dense_oracle", r.component, std::abs(*r.l2.dense_lambda - r.l2.lambda), config.oracle_tol,
                 r.l2.oracle_agrees);
    }
    const double lambda = r.l2.lambda;
    if (lambda < 1.0 - 1e-12) {
      const double s_max = lambda / (1.0 - lambda);
      checks.add("S_bound", r.component, r.s_bound, s_max, r.s_bound <= s_max + 1e-12);
      const double c_min = 1.0 / (1.0 + r.s_bound);
      checks.add("c_bound", r.component, r.c_bound, c_min, r.c_bound >= c_min - 1e-12);
    }
    if (r.witness_min) {
      j["witness_min"] = *r.witness_min;
      checks.add("c_witness", r.component, *r.witness_min, r.c_bound, *r.witness_min >= r.c_bound - 1e-9);
    }
    if (r.kazhdan) {
      j["kazhdan"] = kazhdan_json(*r.kazhdan);
      checks.add("kazhdan_decay", r.component, r.kazhdan->norms.back(), r.kazhdan->lambda, r.kazhdan->dominated);
      if (r.kazhdan->entrywise_excess) {
        checks.add("kazhdan_entrywise", r.component, *r.kazhdan->entrywise_excess, 0.0,
                   *r.kazhdan->entrywise_excess <= 0.0);
      }
    }
    comps.push_back(std::move(j));

    csv << r.component << ',' << r.size << ',' << r.n << ',' << fmt(lambda);
    for (const auto& iv : r.lp) csv << ',' << fmt(iv.lower) << ',' << fmt(iv.upper);
    csv << ',' << fmt(r.s_bound) << ',' << fmt(r.c_bound) << ',' << r.l2.iterations << ',' << r.flag << '\n';
    char line[200];
    std::snprintf(line, sizeof line, "%9zu %5zu %6d  %-14s  %-14s  %-14s  %s\n", r.component, r.size, r.n,
                  fmt(lambda).c_str(), fmt(r.s_bound).c_str(), fmt(r.c_bound).c_str(), r.flag.c_str());
    table << line;
  }
  const auto& v = report.verdict;
  out.section = {{"components", comps},
                 {"min_gap", report.min_gap},
                 {"max_gap", report.max_gap},
                 {"verdict",
                  {{"uniform", v.uniform},
                   {"banner", v.banner()},
                   {"witness_component", v.witness_component},
                   {"witness_lambda", v.witness_lambda},
                   {"threshold", v.threshold}}}};
  table << v.banner() << '\n';
  out.csv = csv.str();
  out.table = table.str();
  return out;
}

GeneratedFamily load_family(const RunConfig& config) {
  if (trim(config.family).empty()) raise(ErrorCode::kInvalidArgument, "empty family descriptor");
  return generate_family(parse_family_descriptor(config.family), config.budget);
}

void check_p_values(const RunConfig& config) {
  for (double p : config.p_values) {
    if (!(p > 1.0)) raise(ErrorCode::kInvalidExponent, "spectral p values must exceed 1, got " + fmt(p));
  }
}

CommandResult cmd_generate(const RunConfig& config) {
  const auto family = load_family(config);
  const fs::path out(config.out);
  write_text_file(out / "space.txt", write_space(*family.space));
  write_text_file(out / "system.txt", write_system(family.system));
  write_text_file(out / "adjacency.txt", write_adjacency(*family.space));
  Checks checks;
  const auto check = family.system.check();
  checks.add("system_valid", std::nullopt, check.ok() ? 1.0 : 0.0, 1.0, check.ok());
  json sections = {{"space", space_section(*family.space, config.radius)}, {"system", system_section(family.system)}};
  std::ostringstream table, csv;
  table << "component  size  diameter  edges\n";
  csv << "component_id,size,diameter,edges\n";
  for (std::size_t c = 0; c < family.space->component_count(); ++c) {
    const auto& comp = family.space->component(c);
    char line[120];
    std::snprintf(line, sizeof line, "%9zu %5d %9d %6zu\n", c, comp.size(), comp.diameter(), comp.edges().size());
    table << line;
    csv << c << ',' << comp.size() << ',' << comp.diameter() << ',' << comp.edges().size() << '\n';
  }
  auto r = finish("generate", config, std::move(sections), std::move(checks), csv.str(), table.str());
  for (const char* f : {"space.txt", "system.txt", "adjacency.txt"}) r.files.push_back((out / f).string());
  return r;
}

CommandResult cmd_gap(const RunConfig& config, const std::string& name, bool force_kazhdan) {
  check_p_values(config);
  const auto family = load_family(config);
  auto system = std::make_shared<const FullTranslationSystem>(analysis_system(family, config));
  MarkovOperator a(system);
  auto options = spectral_options(config);
  if (force_kazhdan) options.run_kazhdan = true;
  const auto report = spectral_report(a, options);
  Checks checks;
  auto out = spectral_output(report, config, checks);
  json sections = {{"space", space_section(*family.space, config.radius)},
                   {"system", system_section(*system)},
                   {"spectral", out.section}};
  std::string csv = out.csv;
  if (name == "kazhdan") {
    std::ostringstream k;
    k << "component_id,k,norm,lambda_pow_k\n";
    for (const auto& r : report.components) {
      if (!r.kazhdan) continue;
      double lk = 1.0;
      for (std::size_t i = 0; i < r.kazhdan->norms.size(); ++i) {
        lk *= r.kazhdan->lambda;
        k << r.component << ',' << i + 1 << ',' << fmt(r.kazhdan->norms[i]) << ',' << fmt(lk) << '\n';
      }
    }
    csv = k.str();
  }
  return finish(name, config, std::move(sections), std::move(checks), csv, out.table);
}

// V (kP) = Phi(V) (kP), entrywise; skipped when kP would be too large.
std::optional<double> averaging_identity_defect(const PartialTranslation& v, const RoeOperator& kp) {
  const auto op = pt_to_operator(v);
  return max_abs_difference(op * kp, phi(op) * kp);
}

CommandResult cmd_decompose(const RunConfig& config) {
  const auto family = load_family(config);
  const auto system = analysis_system(family, config);
  const auto& space = family.space;
  Checks checks;
  std::ostringstream csv, summary;
  json sections = {{"space", space_section(*space, config.radius)}, {"system", system_section(system)}};
  const fs::path out(config.out);
  std::vector<std::string> extra;

  std::size_t dense = 0;
  for (const auto& comp : space->components()) dense += static_cast<std::size_t>(comp.size()) * comp.size();
  std::optional<RoeOperator> kp;
  if (dense <= 2000000) kp = InvariantProjector(space).averaging_matrix();

  csv << "sample,pairs,terms_used,reconstructs,disjoint,mass,averaging_defect,pass\n";
  auto run_one = [&](const PartialTranslation& v, std::size_t index) {
    const auto d = decompose(v, system);
    const auto check = verify_decomposition(v, d, system);
    std::size_t used = 0;
    for (const auto& chi : d.chi) used += chi.sup_norm() > 0.0;
    std::optional<double> avg;
    if (kp) avg = averaging_identity_defect(v, *kp);
    const bool ok = check.ok() && (!avg || *avg <= 1e-14);
    csv << index << ',' << v.size() << ',' << used << ',' << check.reconstructs << ',' << check.disjoint << ','
        << check.mass << ',' << (avg ? fmt(*avg) : "") << ',' << ok << '\n';
    return std::make_tuple(d, check, avg, ok);
  };

  if (!config.pt.empty()) {
    const auto v = read_partial_translation(read_text_file(config.pt), space);
    const auto [d, check, avg, ok] = run_one(v, 0);
    write_text_file(out / "decomp.txt", write_decomposition(d));
    extra.push_back((out / "decomp.txt").string());
    checks.add("decomposition", std::nullopt, ok ? 1.0 : 0.0, 1.0, ok);
    sections["decomposition"] = {{"pairs", v.size()}, {"reconstructs", check.reconstructs},
                                 {"disjoint", check.disjoint}, {"mass", check.mass}};
    if (avg) sections["decomposition"]["averaging_defect"] = *avg;
    summary << "decompose: reconstruction " << (check.reconstructs ? "ok" : "FAIL") << ", disjoint "
            << (check.disjoint ? "ok" : "FAIL") << ", mass " << (check.mass ? "ok" : "FAIL") << " -> "
            << (ok ? "PASS" : "FAIL") << '\n';
  } else {
    std::mt19937_64 rng(component_seed(config.seed, 0, 11));
    int passed = 0;
    double worst_avg = 0.0;
    for (int s = 0; s < config.samples; ++s) {
      const auto v = random_partial_translation(system.e0(), rng);
      const auto [d, check, avg, ok] = run_one(v, static_cast<std::size_t>(s));
      passed += ok;
      if (avg) worst_avg = std::max(worst_avg, *avg);
    }
    checks.add("decomposition_batch", std::nullopt, passed, config.samples, passed == config.samples);
    if (kp) checks.add("averaging_identity", std::nullopt, worst_avg, 1e-14, worst_avg <= 1e-14);
    sections["decomposition"] = {{"samples", config.samples}, {"passed", passed},
                                 {"averaging_checked", kp.has_value()}, {"averaging_defect", worst_avg}};
    summary << "decompose: " << passed << "/" << config.samples << " pass"
            << (kp ? "" : " (averaging identity skipped: components too large)") << '\n';
  }
  auto r = finish("decompose", config, std::move(sections), std::move(checks), csv.str(), summary.str());
  r.files.insert(r.files.end(), extra.begin(), extra.end());
  return r;
}

CommandResult cmd_mazur(const RunConfig& config) {
  const auto suite = mazur_suite(config.p_values, config.seed);
  Checks checks;
  json rows = json::array();
  std::ostringstream csv, summary;
  csv << "experiment,p,q,k,R,defect_p,defect_2,bound,pass\n";
  auto opt = [](const std::optional<double>& v) { return v ? fmt(*v) : std::string(); };
  auto opt_json = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  int failures = 0;
  for (const auto& r : suite.rows) {
    csv << r.experiment << ',' << opt(r.p) << ',' << opt(r.q) << ',' << opt(r.k) << ','
        << (r.radius ? std::to_string(*r.radius) : "") << ',' << opt(r.defect_p) << ',' << opt(r.defect_2) << ','
        << opt(r.bound) << ',' << (r.pass ? "true" : "false") << '\n';
    rows.push_back({{"experiment", r.experiment}, {"p", opt_json(r.p)}, {"q", opt_json(r.q)}, {"k", opt_json(r.k)},
                    {"R", r.radius ? json(*r.radius) : json(nullptr)}, {"defect_p", opt_json(r.defect_p)},
                    {"defect_2", opt_json(r.defect_2)}, {"bound", opt_json(r.bound)}, {"pass", r.pass},
                    {"assertion", r.assertion}});
    if (r.assertion) {
      checks.add("mazur_" + r.experiment, std::nullopt, r.defect_p.value_or(r.defect_2.value_or(0.0)),
                 r.bound.value_or(0.0), r.pass);
    }
    failures += !r.pass;
  }
  summary << "mazur: " << suite.rows.size() << " rows, " << failures << " not passing"
          << (suite.passed() ? "" : " (assertion failure)") << '\n';
  return finish("mazur", config, {{"mazur", rows}}, std::move(checks), csv.str(), summary.str());
}

CommandResult cmd_net(const RunConfig& config) {
  check_p_values(config);
  if (config.net_radius < 1) raise(ErrorCode::kOutOfRange, "net_radius must be >= 1");
  const auto family = load_family(config);
  const auto net = extract_net(*family.space, config.net_radius);
  // adjacent Voronoi cells of a maximal R-separated net meet within 2R - 1
  const auto e0 = r_diagonal(net.net, 2 * config.net_radius - 1);
  const auto cover = entourage_matchings(e0);
  auto system = std::make_shared<const FullTranslationSystem>(full_system_from_matchings(cover, e0));
  MarkovOperator a(system);
  const auto report = spectral_report(a, spectral_options(config));
  Checks checks;
  auto out = spectral_output(report, config, checks);
  std::ostringstream inclusion;
  inclusion << "net v1\n";
  for (std::size_t c = 0; c < net.inclusion.size(); ++c) {
    for (std::size_t i = 0; i < net.inclusion[c].size(); ++i) {
      inclusion << "include " << c << ' ' << i << ' ' << net.inclusion[c][i] << '\n';
    }
  }
  const fs::path dir(config.out);
  write_text_file(dir / "net_inclusion.txt", inclusion.str());
  json sections = {{"net_radius", config.net_radius},
                   {"space", space_section(*net.net, 2 * config.net_radius - 1)},
                   {"system", system_section(*system)},
                   {"spectral", out.section}};
  auto r = finish("net", config, std::move(sections), std::move(checks), out.csv, out.table);
  r.files.push_back((dir / "net_inclusion.txt").string());
  return r;
}

CommandResult cmd_report(const RunConfig& config) {
  if (config.inputs.empty()) raise(ErrorCode::kInvalidArgument, "report needs inputs=<file,...>");
  json merged = json::array();
  Checks checks;
  std::string hashes;
  std::ostringstream summary;
  for (const auto& path : config.inputs) {
    json doc;
    try {
      doc = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
      raise(ErrorCode::kParse, path + ": " + e.what());
    }
    if (!doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion) {
      raise(ErrorCode::kParse, path + ": not a " + std::string(kSchemaVersion) + " document");
    }
    const bool ok = doc.value("passed", false);
    const std::string hash = doc.value("determinism_hash", "");
    checks.add("input_passed", std::nullopt, ok ? 1.0 : 0.0, 1.0, ok);
    hashes += hash;
    summary << doc.value("command", "?") << "  " << hash << "  " << (ok ? "PASS" : "FAIL") << "  " << path << '\n';
    merged.push_back(std::move(doc));
  }
  return finish("report", config, {{"reports", merged}, {"input_hashes", hashes}}, std::move(checks), "",
                summary.str());
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t state) {
  for (unsigned char b : bytes) {
    state ^= b;
    state *= 0x100000001b3ULL;
  }
  return state;
}

void set_config_value(RunConfig& c, std::string_view key_view, std::string_view value_view) {
  const std::string key(key_view), value = trim(value_view);
  if (key == "family") {
    c.family = value;
  } else if (key == "radius") {
    c.radius = static_cast<std::int32_t>(parse_int(key, value, 1));
  } else if (key == "system") {
    if (value != "auto" && value != "generators" && value != "matching") {
      raise(ErrorCode::kParse, "'system' must be auto, generators or matching");
    }
    c.system = value;
  } else if (key == "p") {
    c.p_values.clear();
    for (const auto& part : split(value, ',')) c.p_values.push_back(parse_double(key, part));
    if (c.p_values.empty()) raise(ErrorCode::kParse, "'p' needs at least one value");
  } else if (key == "threshold") {
    c.threshold = parse_double(key, value);
  } else if (key == "kmax") {
    c.k_max = static_cast<int>(parse_int(key, value, 1));
  } else if (key == "tol") {
    c.tol = parse_double(key, value);
  } else if (key == "rayleigh_tol") {
    c.rayleigh_tol = parse_double(key, value);
  } else if (key == "oracle_tol") {
    c.oracle_tol = parse_double(key, value);
  } else if (key == "seed") {
    c.seed = static_cast<std::uint64_t>(parse_int(key, value, 0));
  } else if (key == "budget") {
    c.budget = static_cast<std::size_t>(parse_int(key, value, 1));
  } else if (key == "out") {
    if (value.empty()) raise(ErrorCode::kParse, "'out' must not be empty");
    c.out = value;
  } else if (key == "workers") {
    c.workers = static_cast<std::size_t>(parse_int(key, value, 0));
  } else if (key == "kazhdan") {
    c.kazhdan = parse_bool(key, value);
  } else if (key == "lp_restarts") {
    c.lp_restarts = static_cast<int>(parse_int(key, value, 1));
  } else if (key == "witness_samples") {
    c.witness_samples = static_cast<int>(parse_int(key, value, 0));
  } else if (key == "pt") {
    c.pt = value;
  } else if (key == "samples") {
    c.samples = static_cast<int>(parse_int(key, value, 1));
  } else if (key == "net_radius") {
    c.net_radius = static_cast<std::int32_t>(parse_int(key, value, 1));
  } else if (key == "inputs") {
    c.inputs.clear();
    for (const auto& part : split(value, ',')) {
      if (!part.empty()) c.inputs.push_back(part);
    }
  } else {
    raise(ErrorCode::kParse, "unknown key '" + key + "'");
  }
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    auto where = [&](std::size_t col) {
      return "line " + std::to_string(line_no) + ", column " + std::to_string(col + 1) + ": ";
    };
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) raise(ErrorCode::kParse, where(first) + "expected key = value");
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) raise(ErrorCode::kParse, where(first) + "missing key");
    try {
      set_config_value(base, key, line.substr(eq + 1));
    } catch (const Error& e) {
      std::string message = e.what();
      message = message.substr(message.find(": ") + 2);  // drop the code prefix
      // unknown keys point at the key, bad values at the value
      auto col = line.find_first_not_of(" \t", eq + 1);
      if (col == std::string_view::npos) col = eq + 1;
      if (message.rfind("unknown key", 0) == 0) col = first;
      raise(e.code(), where(col) + message);
    }
    if (end == text.size()) break;
  }
  return base;
}

void apply_environment(RunConfig& config) {
  if (const char* dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') config.out = dir;
}

FullTranslationSystem analysis_system(const GeneratedFamily& family, const RunConfig& config) {
  const bool generators =
      config.system == "generators" || (config.system == "auto" && config.radius == 1);
  if (generators) {
    if (config.radius != 1) raise(ErrorCode::kInvalidArgument, "system=generators requires radius 1");
    return family.system;
  }
  const auto e0 = r_diagonal(family.space, config.radius);
  return full_system_from_matchings(entourage_matchings(e0), e0);
}

CommandResult run_command(std::string_view command, const RunConfig& config) {
  if (command == "generate") return cmd_generate(config);
  if (command == "gap") return cmd_gap(config, "gap", false);
  if (command == "kazhdan") return cmd_gap(config, "kazhdan", true);
  if (command == "decompose") return cmd_decompose(config);
  if (command == "mazur") return cmd_mazur(config);
  if (command == "net") return cmd_net(config);
  if (command == "report") return cmd_report(config);
  raise(ErrorCode::kInvalidArgument, "unknown command '" + std::string(command) + "'");
}

}  // namespace roekit
