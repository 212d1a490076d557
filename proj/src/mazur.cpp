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

#include "roekit/mazur.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "roekit/error.hpp"
#include "roekit/spectral.hpp"

namespace roekit {
namespace {

void check_exponent(double p, const char* name) {
  if (!std::isfinite(p) || p < 1.0) raise(ErrorCode::kInvalidExponent, std::string(name) + " must be finite and >= 1");
}

std::vector<Complex> random_complex(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> v(n);
  for (auto& z : v) z = {normal(rng), normal(rng)};
  return v;
}

double l2_distance(std::span<const Complex> a, std::span<const Complex> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

SpacePtr cycle_space(PointId n) {
  std::vector<Edge> edges;
  for (PointId i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  const std::vector<PointId> counts{n};
  const std::vector<std::vector<Edge>> all{edges};
  return build_space_from_edges(counts, all);
}

SpacePtr path_space(PointId n) {
  std::vector<Edge> edges;
  for (PointId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  const std::vector<PointId> counts{n};
  const std::vector<std::vector<Edge>> all{edges};
  return build_space_from_edges(counts, all);
}

SignedPermutationIsometry rotation(PointId n, std::vector<Complex> h) {
  SignedPermutationIsometry v;
  v.sigma.emplace_back(n);
  for (PointId i = 0; i < n; ++i) v.sigma[0][i] = (i + 1) % n;
  v.h.push_back(std::move(h));
  return v;
}

}  // namespace

std::vector<Complex> mazur_map(std::span<const Complex> f, double p, double q) {
  check_exponent(p, "p");
  check_exponent(q, "q");
  std::vector<Complex> out(f.size());
  if (p == q) {
    std::copy(f.begin(), f.end(), out.begin());
    return out;
  }
  const double e = p / q;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double r = std::abs(f[i]);
    if (!std::isfinite(r)) raise(ErrorCode::kInvalidArgument, "mazur_map needs finite entries");
    if (r == 0.0) continue;
    out[i] = (f[i] / r) * std::pow(r, e);
  }
  return out;
}

double lp_norm(std::span<const Complex> f, double p) {
  double scale = 0.0;
  for (const auto& z : f) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (const auto& z : f) s += std::pow(std::abs(z) / scale, p);
  return scale * std::pow(s, 1.0 / p);
}

SignedPermutationIsometry SignedPermutationIsometry::identity(const SpaceFamily& space) {
  SignedPermutationIsometry v;
  for (const auto& comp : space.components()) {
    std::vector<PointId> s(comp.size());
    for (PointId i = 0; i < comp.size(); ++i) s[i] = i;
    v.sigma.push_back(std::move(s));
    v.h.emplace_back(comp.size(), Complex(1.0));
  }
  return v;
}

void SignedPermutationIsometry::validate() const {
  if (sigma.size() != h.size()) raise(ErrorCode::kInvalidArgument, "sigma and h differ in component count");
  for (std::size_t c = 0; c < sigma.size(); ++c) {
    const auto n = sigma[c].size();
    if (h[c].size() != n) raise(ErrorCode::kInvalidArgument, "h has the wrong length");
    std::vector<char> seen(n, 0);
    for (PointId s : sigma[c]) {
      if (s < 0 || static_cast<std::size_t>(s) >= n || seen[s]) {
        raise(ErrorCode::kInvalidArgument, "sigma is not a permutation");
      }
      seen[s] = 1;
    }
    for (const auto& z : h[c]) {
      if (std::abs(std::abs(z) - 1.0) > 1e-12) raise(ErrorCode::kInvalidArgument, "h is not unimodular");
    }
  }
}

std::vector<Complex> SignedPermutationIsometry::apply(std::span<const Complex> f, std::size_t c) const {
  const auto& s = sigma.at(c);
  if (f.size() != s.size()) raise(ErrorCode::kDimensionMismatch, "vector length differs from component size");
  std::vector<Complex> out(f.size());
  for (std::size_t y = 0; y < f.size(); ++y) out[s[y]] = h[c][s[y]] * f[y];
  return out;
}

Conjugation conjugate_isometry(const SignedPermutationIsometry& v, double p, int samples, std::uint64_t seed) {
  if (!(p > 1.0) || !std::isfinite(p)) raise(ErrorCode::kInvalidExponent, "p must lie in (1, inf)");
  v.validate();
  auto w = [&](std::span<const Complex> xi, std::size_t c) {
    const auto up = mazur_map(xi, 2.0, p);
    return mazur_map(v.apply(up, c), p, 2.0);
  };
  Conjugation result;
  result.samples = samples;
  result.op = v;
  for (std::size_t c = 0; c < v.sigma.size(); ++c) {
    const std::size_t n = v.sigma[c].size();
    // basis vectors reveal sigma and h
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<Complex> delta(n);
      delta[y] = 1.0;
      const auto image = w(delta, c);
      for (std::size_t x = 0; x < n; ++x) {
        if (image[x] != Complex(0.0)) {
          result.op.sigma[c][y] = static_cast<PointId>(x);
          result.op.h[c][x] = image[x];
        }
      }
    }
    std::mt19937_64 rng(component_seed(seed, c, 7));
    std::normal_distribution<double> normal;
    for (int s = 0; s < samples; ++s) {
      const auto xi = random_complex(n, rng);
      const auto eta = random_complex(n, rng);
      const Complex alpha{normal(rng), normal(rng)}, beta{normal(rng), normal(rng)};
      std::vector<Complex> mix(n);
      for (std::size_t i = 0; i < n; ++i) mix[i] = alpha * xi[i] + beta * eta[i];
      const auto wm = w(mix, c), wx = w(xi, c), we = w(eta, c);
      std::vector<Complex> lin(n);
      for (std::size_t i = 0; i < n; ++i) lin[i] = alpha * wx[i] + beta * we[i];
      result.linearity_defect = std::max(result.linearity_defect, l2_distance(wm, lin));
      result.action_defect = std::max(result.action_defect, l2_distance(wx, v.apply(xi, c)));
    }
  }
  return result;
}

std::vector<double> decay_vector(const SpaceFamily& space, std::size_t c, PointId x0, double k) {
  if (!(k > 0.0)) raise(ErrorCode::kOutOfRange, "k must be positive");
  const auto& comp = space.component(c);
  if (x0 < 0 || x0 >= comp.size()) raise(ErrorCode::kOutOfRange, "base point outside the component");
  std::vector<double> f(comp.size());
  for (PointId x = 0; x < comp.size(); ++x) f[x] = 1.0 / (k + comp.distance(x, x0));
  return f;
}

double translation_defect(const PartialTranslation& v, std::size_t c, std::span<const double> f) {
  // (V f)(x) = f(y) and Phi(V)(x) = 1 on the range; both vanish elsewhere
  double worst = 0.0;
  for (const auto& [x, y] : v.pairs(c)) worst = std::max(worst, std::abs(f[y] - f[x]));
  return worst;
}

C0Result almost_invariant_c0(const SpaceFamily& space, std::size_t c, PointId x0, double k,
                             std::int32_t radius, std::size_t samples, std::uint64_t seed) {
  if (radius < 0) raise(ErrorCode::kOutOfRange, "radius must be >= 0");
  const auto f = decay_vector(space, c, x0, k);
  const auto& comp = space.component(c);
  C0Result r;
  r.k = k;
  r.radius = radius;
  r.bound = radius / (k * k);
  const double d = comp.diameter();
  r.quotient_lower = d / (2.0 * k * (k + d));
  std::size_t pairs = 0;
  for (PointId x = 0; x < comp.size(); ++x) pairs += comp.ball_size(x, radius);
  auto visit = [&](PointId x, PointId y) {
    r.max_defect = std::max(r.max_defect, std::abs(f[y] - f[x]));
    ++r.pairs_checked;
  };
  if (pairs <= 10000) {
    r.exhaustive = true;
    for (PointId x = 0; x < comp.size(); ++x) {
      for (PointId y = 0; y < comp.size(); ++y) {
        if (comp.distance(x, y) <= radius) visit(x, y);
      }
    }
  } else {
    std::mt19937_64 rng(component_seed(seed, c, 8));
    std::uniform_int_distribution<PointId> pick(0, comp.size() - 1);
    while (r.pairs_checked < samples) {
      const PointId x = pick(rng), y = pick(rng);
      if (comp.distance(x, y) <= radius) visit(x, y);
    }
  }
  return r;
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) raise(ErrorCode::kInvalidArgument, "slope needs two or more points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0 && y[i] > 0.0)) raise(ErrorCode::kOutOfRange, "log-log fit needs positive data");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

std::pair<double, double> transfer_defect(std::span<const Complex> xi, const SignedPermutationIsometry& v,
                                          std::size_t c, double p) {
  const double norm = lp_norm(xi, p);
  if (norm == 0.0) raise(ErrorCode::kInvalidArgument, "transfer_defect needs a nonzero vector");
  std::vector<Complex> unit(xi.begin(), xi.end());
  for (auto& z : unit) z /= norm;
  const auto moved = v.apply(unit, c);
  std::vector<Complex> diff(unit.size());
  for (std::size_t i = 0; i < unit.size(); ++i) diff[i] = moved[i] - unit[i];
  const double dp = lp_norm(diff, p);
  const double d2 = l2_distance(mazur_map(moved, p, 2.0), mazur_map(unit, p, 2.0));
  return {dp, d2};
}

bool MazurSuite::passed() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const MazurRow& r) { return !r.assertion || r.pass; });
}

MazurSuite mazur_suite(std::span<const double> p_values, std::uint64_t seed) {
  MazurSuite suite;
  std::mt19937_64 rng(component_seed(seed, 0, 9));
  constexpr std::size_t kLen = 64;

  for (double p : p_values) {
    for (double q : p_values) {
      const auto f = random_complex(kLen, rng);
      const auto back = mazur_map(mazur_map(f, p, q), q, p);
      double defect = 0.0;
      for (std::size_t i = 0; i < kLen; ++i) defect = std::max(defect, std::abs(back[i] - f[i]));
      MazurRow row{"round_trip", p, q, {}, {}, defect, {}, 1e-12};
      row.pass = defect < 1e-12;
      suite.rows.push_back(row);
    }
  }

  for (double p : p_values) {
    auto xi = random_complex(kLen, rng);
    const double norm = lp_norm(xi, p);
    for (auto& z : xi) z /= norm;
    const double n2 = lp_norm(mazur_map(xi, p, 2.0), 2.0);
    MazurRow row{"sphere", p, 2.0, {}, {}, {}, std::abs(n2 - 1.0), 1e-12};
    row.pass = std::abs(n2 - 1.0) <= 1e-12;
    suite.rows.push_back(row);
  }

  for (double p : p_values) {
    if (p <= 1.0) continue;
    std::vector<Complex> h(kLen);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));
    for (auto& z : h) z = std::polar(1.0, angle(rng));
    const auto v = rotation(static_cast<PointId>(kLen), h);
    const auto conj = conjugate_isometry(v, p, 100, seed);
    MazurRow row{"conjugation", p, 2.0, {}, {}, conj.linearity_defect, conj.action_defect, 1e-12};
    double h_gap = 0.0;
    for (std::size_t i = 0; i < kLen; ++i) h_gap = std::max(h_gap, std::abs(conj.op.h[0][i] - h[i]));
    row.pass = conj.op.sigma == v.sigma && h_gap <= 1e-12 && conj.linearity_defect < 1e-12 && conj.action_defect < 1e-12;
    suite.rows.push_back(row);
  }

  // C0 sweep on the 64-cycle with R = 1, plus the diameter-10 path at k = 5
  const auto cycle = cycle_space(64);
  std::vector<double> ks{4, 8, 16, 32, 64}, defects;
  for (double k : ks) {
    const auto r = almost_invariant_c0(*cycle, 0, 0, k, 1, 10000, seed);
    MazurRow row{"c0", {}, {}, k, 1, r.max_defect, {}, r.bound};
    row.pass = r.pass() && r.exhaustive;
    suite.rows.push_back(row);
    defects.push_back(r.max_defect);
  }
  {
    const double slope = log_log_slope(ks, defects);
    MazurRow row{"c0_slope", {}, {}, {}, 1, slope, {}, -2.0};
    row.pass = std::abs(slope + 2.0) <= 0.1;
    suite.rows.push_back(row);
  }
  {
    const auto path = path_space(11);
    const auto r = almost_invariant_c0(*path, 0, 0, 5.0, 1, 10000, seed);
    MazurRow row{"c0_path", {}, {}, 5.0, 1, r.max_defect, {}, r.bound};
    row.pass = r.pass();
    suite.rows.push_back(row);
  }

  // transfer: d_2 should shrink with d_p; reported, never fatal
  const auto rot = rotation(64, std::vector<Complex>(64, Complex(1.0)));
  for (double p : p_values) {
    if (p <= 1.0) continue;
    double prev_p = INFINITY, prev_2 = INFINITY;
    for (double k : {8.0, 16.0, 32.0}) {
      const auto f = decay_vector(*cycle, 0, 0, k);
      std::vector<Complex> xi(f.begin(), f.end());
      const auto [dp, d2] = transfer_defect(xi, rot, 0, p);
      MazurRow row{"transfer", p, 2.0, k, 1, dp, d2, {}};
      row.assertion = false;
      row.pass = !(dp <= prev_p) || d2 <= prev_2;
      suite.rows.push_back(row);
      prev_p = dp;
      prev_2 = d2;
    }
  }
  return suite;
}

}  // namespace roekit
