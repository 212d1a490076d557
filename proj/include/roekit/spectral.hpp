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

#ifndef ROEKIT_SPECTRAL_HPP
#define ROEKIT_SPECTRAL_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "roekit/roe.hpp"
#include "roekit/translation.hpp"

namespace roekit {

/// Real compressed-row block for the iterative kernels.
struct RealBlock {
  std::vector<std::int64_t> offsets;
  std::vector<PointId> cols;
  std::vector<double> values;

  std::size_t size() const noexcept { return offsets.empty() ? 0 : offsets.size() - 1; }
  void apply(std::span<const double> x, std::span<double> y) const;
  RealBlock transpose() const;
};

/// Delta = 1 - (1/n) sum_i A_i over the whole system (identity included
/// when the system contains it). Throws kEmptySystem.
RoeOperator laplacian(const FullTranslationSystem& system);

/// A = 1 - Delta/2 = (1/n) sum_i (1 + A_i)/2.
class MarkovOperator {
 public:
  explicit MarkovOperator(std::shared_ptr<const FullTranslationSystem> system);

  const RoeOperator& op() const noexcept { return op_; }
  const FullTranslationSystem& system() const noexcept { return *system_; }
  const SpacePtr& space() const noexcept { return system_->space(); }
  /// Number of translations averaged.
  int n() const noexcept { return n_; }
  bool symmetric() const noexcept { return symmetric_; }
  const RealBlock& block(std::size_t c) const { return blocks_.at(c); }
  const RealBlock& transpose_block(std::size_t c) const { return transposed_.at(c); }

 private:
  std::shared_ptr<const FullTranslationSystem> system_;
  RoeOperator op_;
  int n_ = 0;
  bool symmetric_ = false;
  std::vector<RealBlock> blocks_;
  std::vector<RealBlock> transposed_;
};

MarkovOperator markov(const FullTranslationSystem& system);

/// Per-component averaging projector P (all entries 1/k on a k-point
/// component): onto constants along the mean-zero complement.
class InvariantProjector {
 public:
  explicit InvariantProjector(SpacePtr space) : space_(std::move(space)) {}

  const SpacePtr& space() const noexcept { return space_; }
  /// x <- x - P x.
  static void remove_mean(std::span<double> x);
  static double mean(std::span<const double> x);
  /// P materialized as a Roe operator (dense blocks; small spaces only).
  RoeOperator as_operator() const;
  /// The un-normalized averaging matrix k P.
  RoeOperator averaging_matrix() const;

 private:
  SpacePtr space_;
};

struct GapOptions {
  double rayleigh_tol = 1e-10;   // bound on the estimated Rayleigh-quotient error
  int max_iterations = 100000;
  std::uint64_t seed = 1;
  std::int32_t dense_oracle_limit = 512;
  double oracle_tol = 1e-9;
};

struct L2Gap {
  double lambda = 0.0;
  int iterations = 0;
  bool converged = true;
  bool singular_value_mode = false;
  std::optional<double> dense_lambda;
  bool oracle_agrees = true;
  std::vector<double> top_vector;  // unit mean-zero near-maximizer
};

/// Added to a Rayleigh-quotient lambda before it is used as an upper bound.
inline constexpr double kLambdaMargin = 1e-9;

/// lambda = ||A - P||_2 on component c: power iteration on (A-P)^T (A-P)
/// from a seeded start, cross-checked densely on small components.
L2Gap restricted_gap_l2(const MarkovOperator& a, std::size_t c, const GapOptions& options);

/// Dense ||A - P||_2 of one component (eigenvalues when symmetric,
/// singular values otherwise).
double dense_restricted_norm(const MarkovOperator& a, std::size_t c);

struct LpOptions {
  int restarts = 32;
  int max_iterations = 300;
  std::uint64_t seed = 1;
};

struct LpInterval {
  double p = 2.0;
  double lower = 0.0;
  double upper = 0.0;
  double norm1 = 0.0;     // max column absolute sum of A - P
  double norm_inf = 0.0;  // max row absolute sum of A - P

  double width() const noexcept { return upper - lower; }
};

/// Max column / row absolute sums of A - P on component c.
std::pair<double, double> restricted_norms_1_inf(const MarkovOperator& a, std::size_t c);

/// Interpolation upper bound for ||A - P||_p given an upper bound for the
/// l^2 norm. Conjugate exponents share one evaluation path, so symmetric
/// operators get bitwise equal bounds at p and p'.
double lp_upper_bound(double p, double norm1, double norm_inf, double lambda2_upper, bool symmetric);

/// Bracket for ||A - P||_p: best ratio found by duality-map ascent from
/// seeded restarts below, interpolation through lambda2 above.
/// `warm_start`, when sized to the component, is tried as an extra start.
LpInterval restricted_gap_lp(const MarkovOperator& a, std::size_t c, double p, double lambda2,
                             const LpOptions& options, std::span<const double> warm_start = {});

struct KazhdanTable {
  std::vector<double> norms;  // norms[k - 1] = ||A^k - P||_2
  double lambda = 0.0;        // refined ||A - P||_2 used for domination
  bool dominated = true;      // norms[k-1] <= lambda^k (1 + 1e-9)
  bool monotone = true;
  double rate = 0.0;          // geometric-mean ratio
  bool stopped_at_tol = false;
  /// max over x, y, k of |(A^k)_{xy} - 1/m| - lambda^k; absent when the
  /// component is too large to materialize.
  std::optional<double> entrywise_excess;
};

struct KazhdanOptions {
  int k_max = 200;
  double tol = 1e-12;
  std::int32_t dense_limit = 64;
  std::uint64_t seed = 1;
};

/// ||A^k - P||_2 for k = 1.. until it drops below tol or k reaches k_max,
/// using (A - P)^k = A^k - P. Throws kNoGap when lambda >= 1 - 1e-12.
KazhdanTable kazhdan_iterate(const MarkovOperator& a, std::size_t c, double lambda,
                             const KazhdanOptions& options);

/// Convexity modulus of l^p: exact for p >= 2, (p - 1) eps^2 / 8 below.
double modulus_lp(double p, double eps);

struct ModulusFunction {
  double p = 2.0;
  double operator()(double eps) const { return modulus_lp(p, eps); }
};

enum class ParameterKind { kLambda, kS, kC };

struct ParameterBounds {
  double lambda_upper = 0.0;
  double s_upper = 0.0;
  double c_lower = 0.0;
};

/// Derives the other two of (lambda, S, c) from one of them:
///   S <= lambda / (1 - lambda),  c >= 1 / (1 + S),  lambda <= 1 - delta(c) / n.
ParameterBounds relate_parameters(ParameterKind given, double value, int n,
                                  const ModulusFunction& modulus);

struct ComponentReport {
  std::size_t component = 0;
  std::size_t size = 0;
  int n = 0;
  L2Gap l2;
  std::vector<LpInterval> lp;
  double s_bound = 0.0;
  double c_bound = 0.0;
  double lambda_from_c = 0.0;
  /// smallest max_i ||A_i xi - xi||_2 over sampled unit mean-zero xi
  std::optional<double> witness_min;
  int witness_samples = 0;
  std::optional<KazhdanTable> kazhdan;
  std::string flag = "ok";
};

struct Verdict {
  bool uniform = false;
  std::size_t witness_component = 0;
  double witness_lambda = 0.0;
  double threshold = 0.0;

  std::string banner() const;
};

struct SpectralReport {
  std::vector<ComponentReport> components;
  double min_gap = 0.0;  // min over components of 1 - lambda
  double max_gap = 0.0;
  Verdict verdict;
};

struct SpectralOptions {
  GapOptions gap;
  LpOptions lp;
  KazhdanOptions kazhdan;
  std::vector<double> p_values;
  bool run_kazhdan = true;
  double threshold = 0.999;
  int witness_samples_small = 10000;  // components of at most 64 points
  int witness_samples_large = 100;
  std::uint64_t seed = 1;
  std::size_t workers = 0;
};

/// UNIFORM iff the largest component lambda is <= threshold.
Verdict uniform_gap_verdict(const SpectralReport& report, double threshold);

/// Full per-component analysis, run in parallel and merged by component index.
SpectralReport spectral_report(const MarkovOperator& a, const SpectralOptions& options);

/// Smallest max_i ||A_i xi - xi||_2 over `samples` random unit mean-zero xi.
double sample_translation_defect(const FullTranslationSystem& system, std::size_t c, int samples,
                                 std::uint64_t seed);

struct AmplifiedCheck {
  std::size_t dimension = 0;   // invariant-space dimension on X x N
  std::size_t expected = 0;    // component count
  bool diagonal_constants = false;  // every invariant vector is (xi, ..., xi), xi constant
  bool pass() const noexcept { return dimension == expected && diagonal_constants; }
};

/// Builds the block system on X x N (each A_i on every copy plus the cyclic
/// block shift) and measures the invariant space by a dense null-space
/// computation. Intended for small instances.
AmplifiedCheck amplified_invariants_check(const MarkovOperator& a, std::int32_t copies);

/// Per-component random stream, reproducible regardless of scheduling.
std::uint64_t component_seed(std::uint64_t seed, std::size_t component, std::uint64_t stream);

}  // namespace roekit

#endif  // ROEKIT_SPECTRAL_HPP
