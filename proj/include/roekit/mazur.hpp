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

#ifndef ROEKIT_MAZUR_HPP
#define ROEKIT_MAZUR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "roekit/roe.hpp"
#include "roekit/space.hpp"

namespace roekit {

/// M_{p,q}(f) = sign(f) |f|^{p/q} pointwise, sign(0) = 0. Throws
/// kInvalidExponent unless p, q are finite and >= 1.
std::vector<Complex> mazur_map(std::span<const Complex> f, double p, double q);

double lp_norm(std::span<const Complex> f, double p);

/// (V f)(x) = h(x) f(sigma^{-1}(x)) per component, |h| = 1.
struct SignedPermutationIsometry {
  std::vector<std::vector<PointId>> sigma;
  std::vector<std::vector<Complex>> h;

  static SignedPermutationIsometry identity(const SpaceFamily& space);
  /// Throws kInvalidArgument unless sigma permutes and |h| = 1 within 1e-12.
  void validate() const;
  std::vector<Complex> apply(std::span<const Complex> f, std::size_t c) const;
  bool operator==(const SignedPermutationIsometry&) const = default;
};

struct Conjugation {
  SignedPermutationIsometry op;  // read back from M_{p,2} V M_{2,p}
  double linearity_defect = 0.0;
  double action_defect = 0.0;    // max ||W xi - V xi||_2 over samples
  int samples = 0;
};

/// W = M_{p,2} ∘ V ∘ M_{2,p}, recovered on basis vectors and probed for
/// linearity on `samples` seeded random (xi, eta, alpha, beta).
Conjugation conjugate_isometry(const SignedPermutationIsometry& v, double p, int samples,
                               std::uint64_t seed);

/// f_k(x) = 1 / (k + d(x, x0)) on component c.
std::vector<double> decay_vector(const SpaceFamily& space, std::size_t c, PointId x0, double k);

/// sup_x |(V f)(x) - Phi(V)(x) f(x)| for a partial translation on component c.
double translation_defect(const PartialTranslation& v, std::size_t c, std::span<const double> f);

struct C0Result {
  double k = 0.0;
  std::int32_t radius = 0;
  double max_defect = 0.0;
  double bound = 0.0;           // R / k^2
  double quotient_lower = 0.0;  // D / (2k (k + D))
  bool exhaustive = false;
  std::size_t pairs_checked = 0;
  bool pass() const noexcept { return max_defect <= bound + 1e-12; }
};

/// The supremum over all V supported in Δ_R is attained on single pairs, so
/// the enumeration runs over pairs of Δ_R; above 1e4 pairs it samples.
C0Result almost_invariant_c0(const SpaceFamily& space, std::size_t c, PointId x0, double k,
                             std::int32_t radius, std::size_t samples, std::uint64_t seed);

/// Least-squares slope of log y against log x.
double log_log_slope(std::span<const double> x, std::span<const double> y);

/// (||V xi - xi||_p, ||M_{p,2}(V xi) - M_{p,2}(xi)||_2) after normalizing xi in l^p.
std::pair<double, double> transfer_defect(std::span<const Complex> xi, const SignedPermutationIsometry& v,
                                          std::size_t c, double p);

struct MazurRow {
  std::string experiment;
  std::optional<double> p, q, k;
  std::optional<std::int32_t> radius;
  std::optional<double> defect_p, defect_2, bound;
  bool pass = true;
  bool assertion = true;  // false for findings that never fail a run
};

struct MazurSuite {
  std::vector<MazurRow> rows;
  bool passed() const noexcept;
};

/// Round trip, sphere, conjugation, C0 sweep and transfer experiments.
MazurSuite mazur_suite(std::span<const double> p_values, std::uint64_t seed);

}  // namespace roekit

#endif  // ROEKIT_MAZUR_HPP
