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

#include "roekit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "roekit/error.hpp"
#include "roekit/parallel.hpp"

namespace roekit {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double pnorm(std::span<const double> a, double p) {
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double v : a) s += std::pow(std::abs(v) / scale, p);
  return scale * std::pow(s, 1.0 / p);
}

void scale_by(std::span<double> a, double s) {
  for (double& v : a) v *= s;
}

std::vector<double> gaussian_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> v(n);
  for (double& x : v) x = normal(rng);
  return v;
}

// M = A - P applied to x: A x with the mean removed.
void apply_shifted(const RealBlock& b, std::span<const double> x, std::span<double> y) {
  b.apply(x, y);
  InvariantProjector::remove_mean(y);
}

struct PowerResult {
  double theta = 0.0;  // ||M^k x||^2 for the final unit x
  int iterations = 0;
  bool converged = false;
  std::vector<double> vector;
};

// Power iteration on (M^k)^T M^k restricted to mean-zero vectors. Stops when
// the geometric-tail estimate of the remaining Rayleigh-quotient increase
// drops below tol (absolute, or relative to theta when `relative`).
PowerResult power_gram(const RealBlock& a, const RealBlock& at, int power, std::vector<double> x,
                       double tol, int max_iterations, bool relative) {
  const std::size_t n = a.size();
  PowerResult result;
  InvariantProjector::remove_mean(x);
  double nx = norm2(x);
  if (nx == 0.0) {
    result.converged = true;
    result.vector = std::move(x);
    return result;
  }
  scale_by(x, 1.0 / nx);
  std::vector<double> y(n), z(n), tmp(n);

  auto forward = [&](std::span<const double> in, std::vector<double>& out) {
    std::copy(in.begin(), in.end(), out.begin());
    for (int j = 0; j < power; ++j) {
      apply_shifted(a, out, tmp);
      out.swap(tmp);
    }
  };
  auto backward = [&](std::vector<double>& v) {
    for (int j = 0; j < power; ++j) {
      apply_shifted(at, v, tmp);
      v.swap(tmp);
    }
  };

  double prev = -1.0, prev_delta = 0.0;
  for (int it = 1; it <= max_iterations; ++it) {
    forward(x, y);
    const double theta = dot(y, y);
    result.iterations = it;
    z = y;
    backward(z);
    InvariantProjector::remove_mean(z);
    const double nz = norm2(z);
    if (nz == 0.0 || theta == 0.0) {
      result.theta = 0.0;
      result.converged = true;
      break;
    }
    scale_by(z, 1.0 / nz);
    x.swap(z);
    if (it >= 2) {
      const double delta = theta - prev;
      const double threshold = relative ? tol * theta : tol;
      if (delta <= 4.0 * std::numeric_limits<double>::epsilon() * theta) {
        // Rayleigh quotients of a PSD operator do not decrease: rounding floor
        result.converged = true;
      } else if (it >= 3 && prev_delta > 0.0 && delta < prev_delta) {
        const double rho = delta / prev_delta;
        // clustered modes make the observed ratio run low; keep a 10x margin
        result.converged = 10.0 * delta * rho / (1.0 - rho) <= threshold;
      }
      prev_delta = delta;
    }
    prev = theta;
    if (result.converged) break;
  }
  forward(x, y);
  result.theta = std::max(dot(y, y), prev);
  result.vector = std::move(x);
  return result;
}

// Duality map of l^p: sign(v) |v|^(p-1), then scaled to unit l^{p'} norm.
void duality_map(std::span<const double> v, double p, std::span<double> out) {
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) {
    std::fill(out.begin(), out.end(), 0.0);
    return;
  }
  if (p == 2.0) {
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / scale;
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = std::copysign(std::pow(std::abs(v[i]) / scale, p - 1.0), v[i]);
  }
}

// Boyd-style ascent for ||B||_p where B = A - P (forward block `a`,
// transpose block `at`). Returns the best ratio observed.
double lp_ascent(const RealBlock& a, const RealBlock& at, double p, int restarts, int max_iterations,
                 std::uint64_t seed, std::size_t component, std::span<const double> warm_start) {
  const std::size_t n = a.size();
  const double q = p / (p - 1.0);
  std::vector<double> x(n), y(n), w(n), z(n);
  double best = 0.0;
  for (int r = 0; r <= restarts; ++r) {
    if (r == 0) {
      if (warm_start.size() != n) continue;
      std::copy(warm_start.begin(), warm_start.end(), x.begin());
    } else {
      std::mt19937_64 rng(component_seed(seed, component, 1000 + static_cast<std::uint64_t>(r)));
      x = gaussian_vector(n, rng);
    }
    double nx = pnorm(x, p);
    if (nx == 0.0) continue;
    scale_by(x, 1.0 / nx);
    double prev = 0.0;
    for (int it = 0; it < max_iterations; ++it) {
      apply_shifted(a, x, y);
      const double value = pnorm(y, p);
      best = std::max(best, value);
      if (value == 0.0) break;
      if (it > 0 && value - prev <= 1e-12 * value) break;
      prev = value;
      duality_map(y, p, w);
      apply_shifted(at, w, z);
      duality_map(z, q, x);
      nx = pnorm(x, p);
      if (nx == 0.0) break;
      scale_by(x, 1.0 / nx);
    }
  }
  return best;
}

}  // namespace

std::uint64_t component_seed(std::uint64_t seed, std::size_t component, std::uint64_t stream) {
  // splitmix64 over the three inputs
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ static_cast<std::uint64_t>(component)) ^ stream);
}

void RealBlock::apply(std::span<const double> x, std::span<double> y) const {
  const std::size_t n = size();
  for (std::size_t r = 0; r < n; ++r) {
    double s = 0.0;
    for (auto k = offsets[r]; k < offsets[r + 1]; ++k) s += values[k] * x[cols[k]];
    y[r] = s;
  }
}

RealBlock RealBlock::transpose() const {
  const std::size_t n = size();
  RealBlock t;
  t.offsets.assign(n + 1, 0);
  for (PointId c : cols) ++t.offsets[c + 1];
  for (std::size_t r = 0; r < n; ++r) t.offsets[r + 1] += t.offsets[r];
  t.cols.resize(cols.size());
  t.values.resize(values.size());
  std::vector<std::int64_t> cursor(t.offsets.begin(), t.offsets.end() - 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (auto k = offsets[r]; k < offsets[r + 1]; ++k) {
      const auto slot = cursor[cols[k]]++;
      t.cols[slot] = static_cast<PointId>(r);
      t.values[slot] = values[k];
    }
  }
  return t;
}

RoeOperator laplacian(const FullTranslationSystem& system) {
  const auto n = static_cast<double>(system.size());
  const auto& space = system.space();
  std::vector<std::vector<Triplet>> entries(space->component_count());
  for (std::size_t c = 0; c < entries.size(); ++c) {
    const PointId m = space->component(c).size();
    for (PointId y = 0; y < m; ++y) entries[c].push_back({y, y, n});
    for (const auto& t : system.translations()) {
      for (PointId y = 0; y < m; ++y) entries[c].push_back({t(c, y), y, -1.0});
    }
  }
  // integer numerators first, one division per entry
  RoeOperator numerators(space, entries);
  return (1.0 / n) * numerators;
}

MarkovOperator::MarkovOperator(std::shared_ptr<const FullTranslationSystem> system)
    : system_(std::move(system)), op_(RoeOperator::zero(system_->space())) {
  n_ = static_cast<int>(system_->size());
  const auto& space = system_->space();
  std::vector<std::vector<Triplet>> entries(space->component_count());
  for (std::size_t c = 0; c < entries.size(); ++c) {
    const PointId m = space->component(c).size();
    for (PointId y = 0; y < m; ++y) entries[c].push_back({y, y, static_cast<double>(n_)});
    for (const auto& t : system_->translations()) {
      for (PointId y = 0; y < m; ++y) entries[c].push_back({t(c, y), y, 1.0});
    }
  }
  RoeOperator numerators(space, entries);
  // Exact double stochasticity: integer numerators sum to 2n along rows and columns.
  const double two_n = 2.0 * n_;
  for (std::size_t c = 0; c < numerators.component_count(); ++c) {
    const auto& b = numerators.block(c);
    std::vector<double> col_sums(b.rows(), 0.0);
    for (std::size_t x = 0; x < b.rows(); ++x) {
      double row = 0.0;
      for (auto k = b.offsets[x]; k < b.offsets[x + 1]; ++k) {
        row += b.values[k].real();
        col_sums[b.cols[k]] += b.values[k].real();
      }
      if (row != two_n) raise(ErrorCode::kInternal, "Markov numerators miss the row sum 2n");
    }
    for (double s : col_sums) {
      if (s != two_n) raise(ErrorCode::kInternal, "Markov numerators miss the column sum 2n");
    }
  }
  op_ = (1.0 / two_n) * numerators;
  symmetric_ = max_abs_difference(op_, adjoint(op_)) == 0.0;
  for (std::size_t c = 0; c < op_.component_count(); ++c) {
    const auto& b = op_.block(c);
    RealBlock rb;
    rb.offsets = b.offsets;
    rb.cols = b.cols;
    rb.values.reserve(b.values.size());
    for (const auto& v : b.values) rb.values.push_back(v.real());
    transposed_.push_back(rb.transpose());
    blocks_.push_back(std::move(rb));
  }
}

MarkovOperator markov(const FullTranslationSystem& system) {
  return MarkovOperator(std::make_shared<const FullTranslationSystem>(system));
}

void InvariantProjector::remove_mean(std::span<double> x) {
  const double m = mean(x);
  for (double& v : x) v -= m;
}

double InvariantProjector::mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

RoeOperator InvariantProjector::as_operator() const {
  std::vector<std::vector<Triplet>> entries(space_->component_count());
  for (std::size_t c = 0; c < entries.size(); ++c) {
    const PointId m = space_->component(c).size();
    const double v = 1.0 / m;
    for (PointId x = 0; x < m; ++x) {
      for (PointId y = 0; y < m; ++y) entries[c].push_back({x, y, v});
    }
  }
  return RoeOperator(space_, entries);
}

RoeOperator InvariantProjector::averaging_matrix() const {
  std::vector<std::vector<Triplet>> entries(space_->component_count());
  for (std::size_t c = 0; c < entries.size(); ++c) {
    const PointId m = space_->component(c).size();
    for (PointId x = 0; x < m; ++x) {
      for (PointId y = 0; y < m; ++y) entries[c].push_back({x, y, 1.0});
    }
  }
  return RoeOperator(space_, entries);
}

L2Gap restricted_gap_l2(const MarkovOperator& a, std::size_t c, const GapOptions& options) {
  L2Gap gap;
  gap.singular_value_mode = !a.symmetric();
  const auto& block = a.block(c);
  const std::size_t n = block.size();
  if (n <= 1) {
    gap.lambda = 0.0;
    gap.top_vector.assign(n, 0.0);
  } else {
    std::mt19937_64 rng(component_seed(options.seed, c, 1));
    auto start = gaussian_vector(n, rng);
    auto result = power_gram(block, a.transpose_block(c), 1, std::move(start), options.rayleigh_tol,
                             options.max_iterations, false);
    gap.lambda = std::sqrt(std::max(result.theta, 0.0));
    gap.iterations = result.iterations;
    gap.converged = result.converged;
    gap.top_vector = std::move(result.vector);
  }
  if (static_cast<std::int64_t>(n) <= options.dense_oracle_limit) {
    gap.dense_lambda = dense_restricted_norm(a, c);
    gap.oracle_agrees = std::abs(*gap.dense_lambda - gap.lambda) <= options.oracle_tol;
  }
  return gap;
}

std::pair<double, double> restricted_norms_1_inf(const MarkovOperator& a, std::size_t c) {
  auto abs_sums = [](const RealBlock& b) {
    const std::size_t m = b.size();
    const double avg = 1.0 / static_cast<double>(m);
    double best = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      double s = static_cast<double>(static_cast<std::int64_t>(m) - (b.offsets[r + 1] - b.offsets[r])) * avg;
      for (auto k = b.offsets[r]; k < b.offsets[r + 1]; ++k) s += std::abs(b.values[k] - avg);
      best = std::max(best, s);
    }
    return best;
  };
  return {abs_sums(a.transpose_block(c)), abs_sums(a.block(c))};
}

double lp_upper_bound(double p, double norm1, double norm_inf, double lambda2_upper, bool symmetric) {
  if (!(p > 1.0) || !std::isfinite(p)) raise(ErrorCode::kInvalidExponent, "p must lie in (1, inf)");
  const double inv = 1.0 / p;
  // 1/p and 1/p' meet on a 2^-40 grid so conjugate exponents evaluate identically
  constexpr double kGrid = 1099511627776.0;
  const double key = std::round(std::min(inv, 1.0 - inv) * kGrid) / kGrid;
  if (symmetric) norm1 = norm_inf = std::max(norm1, norm_inf);
  const double t = 2.0 * key;  // weight on the l^2 endpoint
  const double through_l2 = inv >= 0.5 ? std::pow(norm1, 1.0 - t) * std::pow(lambda2_upper, t)
                                       : std::pow(lambda2_upper, t) * std::pow(norm_inf, 1.0 - t);
  const double through_ends = symmetric ? norm1 : std::pow(norm1, inv) * std::pow(norm_inf, 1.0 - inv);
  return std::min(through_l2, through_ends);
}

LpInterval restricted_gap_lp(const MarkovOperator& a, std::size_t c, double p, double lambda2,
                             const LpOptions& options, std::span<const double> warm_start) {
  if (!(p > 1.0) || !std::isfinite(p)) raise(ErrorCode::kInvalidExponent, "p must lie in (1, inf)");
  LpInterval interval;
  interval.p = p;
  const auto [n1, ninf] = restricted_norms_1_inf(a, c);
  interval.norm1 = n1;
  interval.norm_inf = ninf;
  if (a.block(c).size() <= 1) return interval;  // M = 0

  // lambda2 comes from a Rayleigh quotient, which approaches from below
  const double lambda_hi = lambda2 + kLambdaMargin;
  interval.upper = lp_upper_bound(p, n1, ninf, lambda_hi, a.symmetric());

  // ||B||_p = ||B^T||_{p'}: run the ascent on both sides
  const double q = p / (p - 1.0);
  const double direct = lp_ascent(a.block(c), a.transpose_block(c), p, options.restarts,
                                  options.max_iterations, options.seed, c, warm_start);
  const double dual = lp_ascent(a.transpose_block(c), a.block(c), q, options.restarts,
                                options.max_iterations, options.seed, c, warm_start);
  interval.lower = std::max(direct, dual);
  return interval;
}

KazhdanTable kazhdan_iterate(const MarkovOperator& a, std::size_t c, double lambda,
                             const KazhdanOptions& options) {
  if (lambda >= 1.0 - 1e-12) {
    raise(ErrorCode::kNoGap, "component " + std::to_string(c) + " has lambda = " + std::to_string(lambda));
  }
  KazhdanTable table;
  const auto& block = a.block(c);
  const auto& tblock = a.transpose_block(c);
  const std::size_t m = block.size();
  if (m <= 1) {
    table.lambda = 0.0;
    table.norms.push_back(0.0);
    table.stopped_at_tol = true;
    table.entrywise_excess = 0.0;
    return table;
  }

  std::mt19937_64 rng(component_seed(options.seed, c, 4));
  auto first = power_gram(block, tblock, 1, gaussian_vector(m, rng), 1e-15, 1000000, true);
  table.lambda = std::max(lambda, std::sqrt(first.theta));
  std::vector<double> warm = std::move(first.vector);
  double lambda_k = 1.0;
  for (int k = 1; k <= options.k_max; ++k) {
    lambda_k *= table.lambda;
    double norm_k;
    if (k == 1) {
      norm_k = std::sqrt(first.theta);
    } else {
      auto r = power_gram(block, tblock, k, warm, 1e-14, 500, true);
      norm_k = std::sqrt(std::max(r.theta, 0.0));
      warm = std::move(r.vector);
    }
    if (!table.norms.empty() && norm_k > table.norms.back() * (1.0 + 1e-9)) table.monotone = false;
    if (norm_k > lambda_k * (1.0 + 1e-9)) table.dominated = false;
    table.norms.push_back(norm_k);
    if (options.tol > 0.0 && norm_k < options.tol) {
      table.stopped_at_tol = true;
      break;
    }
  }
  const auto k_stop = table.norms.size();
  if (k_stop >= 2 && table.norms.front() > 0.0 && table.norms.back() > 0.0) {
    table.rate = std::pow(table.norms.back() / table.norms.front(), 1.0 / static_cast<double>(k_stop - 1));
  } else {
    table.rate = table.norms.front();
  }

  if (static_cast<std::int64_t>(m) <= options.dense_limit) {
    // D_k = (A - P)^k densely; its entries are (A^k)_{xy} - 1/m
    const double avg = 1.0 / static_cast<double>(m);
    std::vector<double> shifted(m * m, -avg);
    for (std::size_t x = 0; x < m; ++x) {
      for (auto k = block.offsets[x]; k < block.offsets[x + 1]; ++k) shifted[x * m + block.cols[k]] += block.values[k];
    }
    std::vector<double> power = shifted, next(m * m);
    double excess = -std::numeric_limits<double>::infinity();
    double lk = 1.0;
    for (std::size_t k = 1; k <= k_stop; ++k) {
      lk *= table.lambda;
      if (k > 1) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t x = 0; x < m; ++x) {
          for (std::size_t z = 0; z < m; ++z) {
            const double pxz = power[x * m + z];
            if (pxz == 0.0) continue;
            for (std::size_t y = 0; y < m; ++y) next[x * m + y] += pxz * shifted[z * m + y];
          }
        }
        power.swap(next);
      }
      for (double v : power) excess = std::max(excess, std::abs(v) - lk * (1.0 + 1e-9));
    }
    table.entrywise_excess = excess;
  }
  return table;
}

double modulus_lp(double p, double eps) {
  if (!(p > 1.0) || !std::isfinite(p)) raise(ErrorCode::kOutOfRange, "modulus needs p in (1, inf)");
  if (!(eps >= 0.0 && eps <= 2.0)) raise(ErrorCode::kOutOfRange, "modulus needs eps in [0, 2]");
  if (p >= 2.0) return 1.0 - std::pow(1.0 - std::pow(eps / 2.0, p), 1.0 / p);
  return (p - 1.0) * eps * eps / 8.0;
}

ParameterBounds relate_parameters(ParameterKind given, double value, int n, const ModulusFunction& modulus) {
  if (n < 1) raise(ErrorCode::kOutOfRange, "n must be positive");
  ParameterBounds b;
  auto from_lambda = [&](double lambda) {
    b.lambda_upper = lambda;
    b.s_upper = lambda / (1.0 - lambda);
  };
  auto lambda_from_c = [&](double c) { return 1.0 - modulus(std::min(c, 2.0)) / n; };
  switch (given) {
    case ParameterKind::kLambda:
      if (!(value >= 0.0 && value < 1.0)) raise(ErrorCode::kOutOfRange, "lambda must lie in [0, 1)");
      from_lambda(value);
      b.c_lower = 1.0 / (1.0 + b.s_upper);
      break;
    case ParameterKind::kS:
      if (!(value >= 0.0) || !std::isfinite(value)) raise(ErrorCode::kOutOfRange, "S must be finite and >= 0");
      b.s_upper = value;
      b.c_lower = 1.0 / (1.0 + value);
      b.lambda_upper = lambda_from_c(b.c_lower);
      break;
    case ParameterKind::kC:
      if (!(value > 0.0 && value <= 2.0)) raise(ErrorCode::kOutOfRange, "c must lie in (0, 2]");
      b.c_lower = value;
      from_lambda(lambda_from_c(value));
      break;
  }
  return b;
}

std::string Verdict::banner() const {
  std::ostringstream out;
  out.precision(12);
  out << (uniform ? "UNIFORM" : "NON-UNIFORM") << " (natural-representation evidence): max lambda "
      << witness_lambda << " on component " << witness_component << (uniform ? " <= " : " > ")
      << "threshold " << threshold;
  return out.str();
}

Verdict uniform_gap_verdict(const SpectralReport& report, double threshold) {
  if (report.components.empty()) raise(ErrorCode::kInvalidArgument, "verdict needs at least one component");
  Verdict v;
  v.threshold = threshold;
  v.witness_lambda = -1.0;
  for (const auto& comp : report.components) {
    if (comp.l2.lambda > v.witness_lambda) {
      v.witness_lambda = comp.l2.lambda;
      v.witness_component = comp.component;
    }
  }
  v.uniform = v.witness_lambda <= threshold;
  return v;
}

double sample_translation_defect(const FullTranslationSystem& system, std::size_t c, int samples,
                                 std::uint64_t seed) {
  const auto m = static_cast<std::size_t>(system.space()->component(c).size());
  if (m <= 1) return std::numeric_limits<double>::infinity();  // no unit mean-zero vectors
  std::mt19937_64 rng(component_seed(seed, c, 3));
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    auto xi = gaussian_vector(m, rng);
    InvariantProjector::remove_mean(xi);
    const double nx = norm2(xi);
    if (nx == 0.0) continue;
    scale_by(xi, 1.0 / nx);
    double worst = 0.0;
    for (const auto& t : system.translations()) {
      // ||A xi - xi||^2 = sum_y |xi(y) - xi(A(y))|^2
      double d = 0.0;
      for (std::size_t y = 0; y < m; ++y) {
        const double diff = xi[y] - xi[t(c, static_cast<PointId>(y))];
        d += diff * diff;
      }
      worst = std::max(worst, std::sqrt(d));
    }
    best = std::min(best, worst);
  }
  return best;
}

SpectralReport spectral_report(const MarkovOperator& a, const SpectralOptions& options) {
  const auto& space = *a.space();
  SpectralReport report;
  report.components.resize(space.component_count());
  parallel_for(space.component_count(), options.workers, [&](std::size_t c) {
    ComponentReport& r = report.components[c];
    r.component = c;
    r.size = static_cast<std::size_t>(space.component(c).size());
    r.n = a.n();
    GapOptions gap = options.gap;
    gap.seed = options.seed;
    r.l2 = restricted_gap_l2(a, c, gap);
    const double lambda = r.l2.lambda;

    LpOptions lp = options.lp;
    lp.seed = options.seed;
    for (double p : options.p_values) {
      r.lp.push_back(restricted_gap_lp(a, c, p, lambda, lp, r.l2.top_vector));
    }

    std::vector<std::string> flags;
    if (!r.l2.converged) flags.emplace_back("no-convergence");
    if (!r.l2.oracle_agrees) flags.emplace_back("oracle-mismatch");
    if (r.l2.singular_value_mode) flags.emplace_back("singular-value-mode");

    if (lambda >= 1.0 - 1e-12) {
      flags.emplace_back("no-gap");
      r.s_bound = std::numeric_limits<double>::infinity();
      r.c_bound = 0.0;
      r.lambda_from_c = 1.0;
    } else {
      double s = lambda / (1.0 - lambda);
      if (options.run_kazhdan) {
        KazhdanOptions kz = options.kazhdan;
        kz.seed = options.seed;
        r.kazhdan = kazhdan_iterate(a, c, lambda, kz);
        // measured head, geometric tail; each term capped by lambda^k
        double head = 0.0, lk = 1.0;
        for (double norm : r.kazhdan->norms) {
          lk *= lambda;
          head += std::min(norm, lk);
        }
        s = std::min(s, head + lk * lambda / (1.0 - lambda));
        if (!r.kazhdan->dominated) flags.emplace_back("decay-violation");
      }
      r.s_bound = s;
      r.c_bound = 1.0 / (1.0 + s);
      r.lambda_from_c = relate_parameters(ParameterKind::kC, r.c_bound, a.n(), ModulusFunction{2.0}).lambda_upper;
    }
    r.witness_samples = r.size <= 64 ? options.witness_samples_small : options.witness_samples_large;
    if (r.size > 1 && r.witness_samples > 0) {
      r.witness_min = sample_translation_defect(a.system(), c, r.witness_samples, options.seed);
    }
    if (flags.empty()) flags.emplace_back("ok");
    r.flag.clear();
    for (std::size_t i = 0; i < flags.size(); ++i) r.flag += (i ? "|" : "") + flags[i];
  });
  report.min_gap = std::numeric_limits<double>::infinity();
  report.max_gap = -std::numeric_limits<double>::infinity();
  for (const auto& r : report.components) {
    report.min_gap = std::min(report.min_gap, 1.0 - r.l2.lambda);
    report.max_gap = std::max(report.max_gap, 1.0 - r.l2.lambda);
  }
  report.verdict = uniform_gap_verdict(report, options.threshold);
  return report;
}

}  // namespace roekit
