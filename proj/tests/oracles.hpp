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

// Reference computations for the tests. Nothing here calls into the library
// beyond plain data types, so agreement is a genuine cross-check.
#ifndef ROEKIT_TESTS_ORACLES_HPP
#define ROEKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

/// lambda of the lazy walk (1/3) sum over {I, +1, -1} of (I + A)/2 on Z/n.
inline double cycle_lambda(int n) { return (2.0 + std::cos(2.0 * kPi / n)) / 3.0; }

using Dense = std::vector<double>;  // row-major n x n

/// Permutations as image lists: perm[y] = A(y).
using Perm = std::vector<int>;

inline Dense markov_dense(const std::vector<Perm>& perms) {
  const auto n = perms.front().size();
  const double w = 1.0 / (2.0 * static_cast<double>(perms.size()));
  Dense a(n * n, 0.0);
  for (const auto& p : perms) {
    for (std::size_t y = 0; y < n; ++y) {
      a[y * n + y] += w;
      a[static_cast<std::size_t>(p[y]) * n + y] += w;
    }
  }
  return a;
}

inline Dense minus_average(Dense a) {
  const auto n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(a.size()))));
  for (double& v : a) v -= 1.0 / static_cast<double>(n);
  return a;
}

/// Cyclic Jacobi eigenvalues of a symmetric matrix.
inline std::vector<double> jacobi_eigenvalues(Dense a) {
  const auto n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(a.size()))));
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i * n + i];
  return ev;
}

inline double spectral_radius_symmetric(const Dense& a) {
  double r = 0.0;
  for (double e : jacobi_eigenvalues(a)) r = std::max(r, std::abs(e));
  return r;
}

/// Rotation systems on Z/n: identity, +1, -1.
inline std::vector<Perm> cycle_perms(int n) {
  Perm id(n), up(n), down(n);
  for (int i = 0; i < n; ++i) {
    id[i] = i;
    up[i] = (i + 1) % n;
    down[i] = (i + n - 1) % n;
  }
  return {id, up, down};
}

/// Right-multiplication Cayley permutations of SL_2(Z/p) by
/// [[1, +-1], [0, 1]] and [[1, 0], [+-1, 1]], plus the identity.
inline std::vector<Perm> sl2_perms(int p) {
  using M = std::array<int, 4>;
  std::vector<M> elements;
  std::map<M, int> index;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p == 1) {
            index[{a, b, c, d}] = static_cast<int>(elements.size());
            elements.push_back({a, b, c, d});
          }
  auto mul = [p](const M& x, const M& y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
             (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
  };
  const std::vector<M> gens{{1, 0, 0, 1}, {1, 1, 0, 1}, {1, p - 1, 0, 1}, {1, 0, 1, 1}, {1, 0, p - 1, 1}};
  std::vector<Perm> perms;
  for (const auto& g : gens) {
    Perm perm(elements.size());
    for (std::size_t y = 0; y < elements.size(); ++y) perm[y] = index.at(mul(elements[y], g));
    perms.push_back(std::move(perm));
  }
  return perms;
}

inline double lp_norm(const std::vector<double>& x, double p) {
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

/// max ||M x||_p / ||x||_p over a grid on [-1, 1]^n (n small), then a
/// shrinking coordinate search from the best grid point.
inline double grid_lp_norm(const Dense& m, double p, int steps = 40) {
  const auto n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(m.size()))));
  auto ratio = [&](const std::vector<double>& x) {
    const double d = lp_norm(x, p);
    if (d == 0.0) return 0.0;
    std::vector<double> y(n, 0.0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) y[r] += m[r * n + c] * x[c];
    return lp_norm(y, p) / d;
  };
  std::vector<double> x(n), best_x(n);
  double best = 0.0;
  std::vector<int> idx(n, 0);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) x[i] = -1.0 + 2.0 * idx[i] / steps;
    const double r = ratio(x);
    if (r > best) {
      best = r;
      best_x = x;
    }
    std::size_t k = 0;
    while (k < n && ++idx[k] > steps) idx[k++] = 0;
    if (k == n) break;
  }
  for (double h = 1.0 / steps; h > 1e-12; h /= 2.0) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t i = 0; i < n; ++i) {
        for (double dir : {h, -h}) {
          auto trial = best_x;
          trial[i] += dir;
          const double r = ratio(trial);
          if (r > best) {
            best = r;
            best_x = trial;
            improved = true;
          }
        }
      }
    }
  }
  return best;
}

}  // namespace oracle

#endif  // ROEKIT_TESTS_ORACLES_HPP
