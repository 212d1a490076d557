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

#include "roekit/roekit.h"

#include <memory>
#include <string>
#include <vector>

#include "roekit/error.hpp"
#include "roekit/io.hpp"
#include "roekit/mazur.hpp"
#include "roekit/pipeline.hpp"
#include "roekit/spectral.hpp"

struct rk_config {
  roekit::RunConfig config;
};

struct rk_report {
  roekit::CommandResult result;
};

struct rk_family {
  roekit::GeneratedFamily family;
  std::unique_ptr<roekit::MarkovOperator> markov;
};

namespace {

thread_local std::string last_error;

template <class Fn>
rk_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return RK_OK;
  } catch (const roekit::Error& e) {
    last_error = e.what();
    return static_cast<rk_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return RK_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RK_E_UNKNOWN;
  }
}

rk_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return RK_E_NULL;
}

}  // namespace

extern "C" {

const char* rk_version(void) { return roekit::kToolVersion.data(); }

const char* rk_last_error(void) { return last_error.c_str(); }

const char* rk_status_name(rk_status status) {
  if (status == RK_OK) return "Ok";
  if (status == RK_E_NULL) return "NullArgument";
  if (status >= RK_E_INVALID_ARGUMENT && status <= RK_E_INTERNAL) {
    return roekit::error_code_name(static_cast<roekit::ErrorCode>(status)).data();
  }
  return "Unknown";
}

rk_status rk_config_new(rk_config** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new rk_config(); });
}

void rk_config_free(rk_config* config) { delete config; }

rk_status rk_config_set(rk_config* config, const char* key, const char* value) {
  if (!config || !key || !value) return null_argument("config, key or value");
  return guarded([&] { roekit::set_config_value(config->config, key, value); });
}

rk_status rk_config_load_text(rk_config* config, const char* text) {
  if (!config || !text) return null_argument("config or text");
  return guarded([&] { config->config = roekit::parse_config(text, config->config); });
}

rk_status rk_config_load_file(rk_config* config, const char* path) {
  if (!config || !path) return null_argument("config or path");
  return guarded([&] {
    const auto text = roekit::read_text_file(path);
    try {
      config->config = roekit::parse_config(text, config->config);
    } catch (const roekit::Error& e) {
      throw roekit::Error(e.code(), std::string(path) + ": " + e.what());
    }
  });
}

rk_status rk_config_apply_env(rk_config* config) {
  if (!config) return null_argument("config");
  return guarded([&] { roekit::apply_environment(config->config); });
}

const char* rk_config_out_dir(const rk_config* config) { return config ? config->config.out.c_str() : ""; }

rk_status rk_run(const char* command, const rk_config* config, rk_report** out) {
  if (!command || !config || !out) return null_argument("command, config or out");
  *out = nullptr;
  return guarded([&] { *out = new rk_report{roekit::run_command(command, config->config)}; });
}

const char* rk_report_json(const rk_report* r) { return r ? r->result.json.c_str() : ""; }
const char* rk_report_csv(const rk_report* r) { return r ? r->result.csv.c_str() : ""; }
const char* rk_report_summary(const rk_report* r) { return r ? r->result.summary.c_str() : ""; }
const char* rk_report_hash(const rk_report* r) { return r ? r->result.hash.c_str() : ""; }
int rk_report_passed(const rk_report* r) { return r && r->result.passed ? 1 : 0; }
size_t rk_report_file_count(const rk_report* r) { return r ? r->result.files.size() : 0; }
const char* rk_report_file(const rk_report* r, size_t index) {
  return r && index < r->result.files.size() ? r->result.files[index].c_str() : nullptr;
}
void rk_report_free(rk_report* report) { delete report; }

rk_status rk_family_generate(const char* descriptor, size_t budget, rk_family** out) {
  if (!descriptor || !out) return null_argument("descriptor or out");
  *out = nullptr;
  return guarded([&] {
    auto family = roekit::generate_family(roekit::parse_family_descriptor(descriptor), budget);
    auto handle = std::make_unique<rk_family>(rk_family{std::move(family), nullptr});
    handle->markov = std::make_unique<roekit::MarkovOperator>(
        std::make_shared<const roekit::FullTranslationSystem>(handle->family.system));
    *out = handle.release();
  });
}

void rk_family_free(rk_family* family) { delete family; }

size_t rk_family_component_count(const rk_family* f) { return f ? f->family.space->component_count() : 0; }

rk_status rk_family_component_size(const rk_family* f, size_t component, int32_t* out) {
  if (!f || !out) return null_argument("family or out");
  return guarded([&] {
    if (component >= f->family.space->component_count()) {
      roekit::raise(roekit::ErrorCode::kOutOfRange, "component index out of range");
    }
    *out = f->family.space->component(component).size();
  });
}

size_t rk_family_system_size(const rk_family* f) { return f ? f->family.system.size() : 0; }

rk_status rk_family_lambda(const rk_family* f, size_t component, uint64_t seed, double* out) {
  if (!f || !out) return null_argument("family or out");
  return guarded([&] {
    if (component >= f->family.space->component_count()) {
      roekit::raise(roekit::ErrorCode::kOutOfRange, "component index out of range");
    }
    roekit::GapOptions options;
    options.seed = seed;
    options.dense_oracle_limit = 0;
    *out = roekit::restricted_gap_l2(*f->markov, component, options).lambda;
  });
}

rk_status rk_mazur_map(const double* re, const double* im, size_t n, double p, double q, double* out_re,
                       double* out_im) {
  if (n > 0 && (!re || !im || !out_re || !out_im)) return null_argument("vector");
  return guarded([&] {
    std::vector<roekit::Complex> f(n);
    for (size_t i = 0; i < n; ++i) f[i] = {re[i], im[i]};
    const auto g = roekit::mazur_map(f, p, q);
    for (size_t i = 0; i < n; ++i) {
      out_re[i] = g[i].real();
      out_im[i] = g[i].imag();
    }
  });
}

}  // extern "C"
