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

#ifndef ROEKIT_ROE_HPP
#define ROEKIT_ROE_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "roekit/space.hpp"
#include "roekit/translation.hpp"

namespace roekit {

using Complex = std::complex<double>;

/// Entries at or below this magnitude are dropped after arithmetic, so the
/// stored pattern is the support.
inline constexpr double kDropThreshold = 1e-15;

struct Triplet {
  PointId row = 0;
  PointId col = 0;
  Complex value;
};

/// f in l^inf(X), acting as the diagonal operator T_f.
class DiagonalFunction {
 public:
  DiagonalFunction(SpacePtr space, std::vector<std::vector<Complex>> values);
  static DiagonalFunction constant(SpacePtr space, Complex value);

  const SpacePtr& space() const noexcept { return space_; }
  const std::vector<Complex>& values(std::size_t c) const { return values_.at(c); }
  Complex operator()(std::size_t c, PointId x) const { return values_[c][x]; }
  double sup_norm() const noexcept;
  bool is_indicator() const noexcept;

  DiagonalFunction& operator+=(const DiagonalFunction& other);
  DiagonalFunction operator*(Complex s) const;
  bool operator==(const DiagonalFunction& other) const = default;

 private:
  SpacePtr space_;
  std::vector<std::vector<Complex>> values_;
};

/// Compressed sparse rows of one component block.
struct OperatorBlock {
  std::vector<std::int64_t> offsets;
  std::vector<PointId> cols;
  std::vector<Complex> values;

  std::size_t rows() const noexcept { return offsets.empty() ? 0 : offsets.size() - 1; }
};

/// Finite-propagation operator over a SpaceFamily, block diagonal in
/// components. Immutable; arithmetic returns new operators.
class RoeOperator {
 public:
  /// Duplicate coordinates are summed; tiny results are dropped.
  RoeOperator(SpacePtr space, const std::vector<std::vector<Triplet>>& entries);

  static RoeOperator zero(SpacePtr space);
  static RoeOperator identity(SpacePtr space);
  static RoeOperator from_translation(SpacePtr space, const FullTranslation& t);
  static RoeOperator diagonal(const DiagonalFunction& f);

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t component_count() const noexcept { return blocks_.size(); }
  const OperatorBlock& block(std::size_t c) const { return blocks_.at(c); }
  Complex entry(std::size_t c, PointId x, PointId y) const;
  std::vector<Triplet> triplets(std::size_t c) const;
  std::size_t nnz() const noexcept;

  /// max d(x, y) over the support; 0 for the zero operator.
  std::int32_t propagation() const noexcept { return propagation_; }
  double sup_entry() const noexcept;
  bool is_real() const noexcept;
  bool is_self_adjoint(double tol = 0.0) const;

 private:
  RoeOperator(SpacePtr space, std::vector<OperatorBlock> blocks);
  void finish();

  SpacePtr space_;
  std::vector<OperatorBlock> blocks_;
  std::int32_t propagation_ = 0;

  friend RoeOperator combine(const RoeOperator&, const RoeOperator&, Complex, Complex);
  friend RoeOperator multiply(const RoeOperator&, const RoeOperator&);
  friend RoeOperator adjoint(const RoeOperator&);
};

/// a * t + b * s.
RoeOperator combine(const RoeOperator& t, const RoeOperator& s, Complex a, Complex b);
RoeOperator multiply(const RoeOperator& t, const RoeOperator& s);
/// T*(x, y) = conj(T(y, x)).
RoeOperator adjoint(const RoeOperator& t);

inline RoeOperator operator+(const RoeOperator& t, const RoeOperator& s) { return combine(t, s, 1.0, 1.0); }
inline RoeOperator operator-(const RoeOperator& t, const RoeOperator& s) { return combine(t, s, 1.0, -1.0); }
inline RoeOperator operator*(Complex a, const RoeOperator& t) { return combine(t, t, a, 0.0); }
inline RoeOperator operator*(const RoeOperator& t, const RoeOperator& s) { return multiply(t, s); }
RoeOperator operator*(const DiagonalFunction& f, const RoeOperator& t);
RoeOperator operator*(const RoeOperator& t, const DiagonalFunction& f);

/// Largest entrywise |t - s|.
double max_abs_difference(const RoeOperator& t, const RoeOperator& s);

/// Row sums: Phi(T)(x) = sum_y T(x, y).
DiagonalFunction phi(const RoeOperator& t);

/// y = T v on component c.
std::vector<Complex> apply(const RoeOperator& t, std::span<const Complex> v, std::size_t c);

/// A partial injection t per component, stored as pairs (x, y) meaning
/// t(y) = x, i.e. V(x, y) = 1.
class PartialTranslation {
 public:
  /// Throws kInvalidArgument if some x or y repeats within a component.
  PartialTranslation(SpacePtr space, std::vector<std::vector<Edge>> pairs);

  const SpacePtr& space() const noexcept { return space_; }
  const std::vector<Edge>& pairs(std::size_t c) const { return pairs_.at(c); }
  std::size_t size() const noexcept;
  std::vector<PointId> range(std::size_t c) const;
  std::vector<PointId> domain(std::size_t c) const;

  /// First (component, pair) of the graph outside e, if any.
  std::optional<std::pair<std::size_t, Edge>> first_outside(const Entourage& e) const;

 private:
  SpacePtr space_;
  std::vector<std::vector<Edge>> pairs_;
};

RoeOperator pt_to_operator(const PartialTranslation& v);
/// nullopt unless every entry is exactly 1 and the pattern is a partial injection.
std::optional<PartialTranslation> operator_to_pt(const RoeOperator& t);

/// Upper bound for the l^1-norm: route every entry (x, y) to the lowest A_i
/// with A_i(y) = x, giving T = sum f_i A_i, and return sum_i ||f_i||_inf.
/// Throws kSupportNotCovered naming the first unroutable entry.
double l1_norm_upper(const RoeOperator& t, const FullTranslationSystem& system);

}  // namespace roekit

#endif  // ROEKIT_ROE_HPP
