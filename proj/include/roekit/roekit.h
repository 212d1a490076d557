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

#ifndef ROEKIT_ROEKIT_H
#define ROEKIT_ROEKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RK_API __declspec(dllexport)
#else
#define RK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Nonzero values mirror the library's error categories. */
typedef enum rk_status {
  RK_OK = 0,
  RK_E_INVALID_ARGUMENT = 1,
  RK_E_DISCONNECTED_COMPONENT = 2,
  RK_E_EMPTY_COMPONENT = 3,
  RK_E_SPACE_MISMATCH = 4,
  RK_E_NOT_GENERATING = 5,
  RK_E_NON_SYMMETRIC_GENERATORS = 6,
  RK_E_INVALID_FILTRATION = 7,
  RK_E_BUDGET_EXCEEDED = 8,
  RK_E_NOT_PRIME = 9,
  RK_E_SUPPORT_NOT_COVERED = 10,
  RK_E_DIMENSION_MISMATCH = 11,
  RK_E_EMPTY_SYSTEM = 12,
  RK_E_NO_CONVERGENCE = 13,
  RK_E_NO_GAP = 14,
  RK_E_OUT_OF_RANGE = 15,
  RK_E_INVALID_EXPONENT = 16,
  RK_E_PARSE = 17,
  RK_E_IO = 18,
  RK_E_INTERNAL = 19,
  RK_E_NULL = 98,
  RK_E_UNKNOWN = 99
} rk_status;

typedef struct rk_config rk_config;
typedef struct rk_report rk_report;
typedef struct rk_family rk_family;

RK_API const char* rk_version(void);
/* Message of the last failure on the calling thread; never NULL. */
RK_API const char* rk_last_error(void);
RK_API const char* rk_status_name(rk_status status);

/* Run configuration. */
RK_API rk_status rk_config_new(rk_config** out);
RK_API void rk_config_free(rk_config* config);
RK_API rk_status rk_config_set(rk_config* config, const char* key, const char* value);
RK_API rk_status rk_config_load_text(rk_config* config, const char* text);
RK_API rk_status rk_config_load_file(rk_config* config, const char* path);
/* Applies the output-directory environment override. */
RK_API rk_status rk_config_apply_env(rk_config* config);
RK_API const char* rk_config_out_dir(const rk_config* config);

/* Commands: generate, gap, decompose, kazhdan, mazur, net, report. */
RK_API rk_status rk_run(const char* command, const rk_config* config, rk_report** out);
RK_API const char* rk_report_json(const rk_report* report);
RK_API const char* rk_report_csv(const rk_report* report);
RK_API const char* rk_report_summary(const rk_report* report);
RK_API const char* rk_report_hash(const rk_report* report);
/* 1 when every assertion-grade check passed. */
RK_API int rk_report_passed(const rk_report* report);
RK_API size_t rk_report_file_count(const rk_report* report);
RK_API const char* rk_report_file(const rk_report* report, size_t index);
RK_API void rk_report_free(rk_report* report);

/* Generated families with their generator systems. */
RK_API rk_status rk_family_generate(const char* descriptor, size_t budget, rk_family** out);
RK_API void rk_family_free(rk_family* family);
RK_API size_t rk_family_component_count(const rk_family* family);
RK_API rk_status rk_family_component_size(const rk_family* family, size_t component, int32_t* out);
RK_API size_t rk_family_system_size(const rk_family* family);
/* ||A - P||_2 on one component of the generator system's Markov operator. */
RK_API rk_status rk_family_lambda(const rk_family* family, size_t component, uint64_t seed, double* out);

/* M_{p,q} on a complex vector given as separate real and imaginary arrays. */
RK_API rk_status rk_mazur_map(const double* re, const double* im, size_t n, double p, double q, double* out_re,
                              double* out_im);

#ifdef __cplusplus
}
#endif

#endif /* ROEKIT_ROEKIT_H */
