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

#include "roekit/roe.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "roekit/error.hpp"

namespace roekit {
namespace {

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a != b) raise(ErrorCode::kSpaceMismatch, "operands live on different spaces");
}

// Accumulates one sparse row at a time; entries are emitted sorted.
class RowAccumulator {
 public:
  explicit RowAccumulator(std::size_t n) : values_(n), seen_(n, 0) {}

  void add(PointId col, Complex v) {
    if (!seen_[col]) {
      seen_[col] = 1;
      touched_.push_back(col);
      values_[col] = v;
    } else {
      values_[col] += v;
    }
  }

  void flush(OperatorBlock& block) {
    std::sort(touched_.begin(), touched_.end());
    for (PointId col : touched_) {
      if (std::abs(values_[col]) > kDropThreshold) {
        block.cols.push_back(col);
        block.values.push_back(values_[col]);
      }
      seen_[col] = 0;
    }
    touched_.clear();
    block.offsets.push_back(static_cast<std::int64_t>(block.cols.size()));
  }

 private:
  std::vector<Complex> values_;
  std::vector<char> seen_;
  std::vector<PointId> touched_;
};

}  // namespace

DiagonalFunction::DiagonalFunction(SpacePtr space, std::vector<std::vector<Complex>> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_->component_count()) {
    raise(ErrorCode::kDimensionMismatch, "one value vector per component required");
  }
  for (std::size_t c = 0; c < values_.size(); ++c) {
    if (values_[c].size() != static_cast<std::size_t>(space_->component(c).size())) {
      raise(ErrorCode::kDimensionMismatch, "value vector size differs on component " + std::to_string(c));
    }
  }
}

DiagonalFunction DiagonalFunction::constant(SpacePtr space, Complex value) {
  std::vector<std::vector<Complex>> values;
  for (const auto& comp : space->components()) {
    values.emplace_back(static_cast<std::size_t>(comp.size()), value);
  }
  return DiagonalFunction(std::move(space), std::move(values));
}

double DiagonalFunction::sup_norm() const noexcept {
  double best = 0.0;
  for (const auto& v : values_) {
    for (const auto& z : v) best = std::max(best, std::abs(z));
  }
  return best;
}

bool DiagonalFunction::is_indicator() const noexcept {
  for (const auto& v : values_) {
    for (const auto& z : v) {
      if (z != Complex(0.0) && z != Complex(1.0)) return false;
    }
  }
  return true;
}

DiagonalFunction& DiagonalFunction::operator+=(const DiagonalFunction& other) {
  require_same_space(space_, other.space_);
  for (std::size_t c = 0; c < values_.size(); ++c) {
    for (std::size_t x = 0; x < values_[c].size(); ++x) values_[c][x] += other.values_[c][x];
  }
  return *this;
}

DiagonalFunction DiagonalFunction::operator*(Complex s) const {
  DiagonalFunction out = *this;
  for (auto& v : out.values_) {
    for (auto& z : v) z *= s;
  }
  return out;
}

RoeOperator::RoeOperator(SpacePtr space, std::vector<OperatorBlock> blocks)
    : space_(std::move(space)), blocks_(std::move(blocks)) {
  finish();
}

RoeOperator::RoeOperator(SpacePtr space, const std::vector<std::vector<Triplet>>& entries)
    : space_(std::move(space)) {
  if (entries.size() != space_->component_count()) {
    raise(ErrorCode::kDimensionMismatch, "one triplet list per component required");
  }
  for (std::size_t c = 0; c < entries.size(); ++c) {
    const PointId n = space_->component(c).size();
    std::vector<std::vector<std::pair<PointId, Complex>>> rows(static_cast<std::size_t>(n));
    for (const auto& t : entries[c]) {
      if (t.row < 0 || t.col < 0 || t.row >= n || t.col >= n) {
        raise(ErrorCode::kInvalidArgument,
              "entry (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                  ") outside component " + std::to_string(c));
      }
      if (!std::isfinite(t.value.real()) || !std::isfinite(t.value.imag())) {
        raise(ErrorCode::kInvalidArgument, "operator entries must be finite");
      }
      rows[t.row].emplace_back(t.col, t.value);
    }
    OperatorBlock block;
    block.offsets.push_back(0);
    RowAccumulator acc(static_cast<std::size_t>(n));
    for (const auto& row : rows) {
      for (const auto& [col, v] : row) acc.add(col, v);
      acc.flush(block);
    }
    blocks_.push_back(std::move(block));
  }
  finish();
}

void RoeOperator::finish() {
  propagation_ = 0;
  for (std::size_t c = 0; c < blocks_.size(); ++c) {
    const auto& comp = space_->component(c);
    const auto& b = blocks_[c];
    for (std::size_t x = 0; x < b.rows(); ++x) {
      for (auto k = b.offsets[x]; k < b.offsets[x + 1]; ++k) {
        propagation_ = std::max(propagation_, comp.distance(static_cast<PointId>(x), b.cols[k]));
      }
    }
  }
}

RoeOperator RoeOperator::zero(SpacePtr space) {
  std::vector<std::vector<Triplet>> entries(space->component_count());
  return RoeOperator(std::move(space), entries);
}

RoeOperator RoeOperator::identity(SpacePtr space) {
  return diagonal(DiagonalFunction::constant(std::move(space), 1.0));
}

RoeOperator RoeOperator::from_translation(SpacePtr space, const FullTranslation& t) {
  std::vector<std::vector<Triplet>> entries(space->component_count());
  for (std::size_t c = 0; c < entries.size(); ++c) {
    const auto& image = t.images.at(c);
    for (std::size_t y = 0; y < image.size(); ++y) {
      entries[c].push_back({image[y], static_cast<PointId>(y), 1.0});
    }
  }
  return RoeOperator(std::move(space), entries);
}

RoeOperator RoeOperator::diagonal(const DiagonalFunction& f) {
  const auto& space = f.space();
  std::vector<std::vector<Triplet>> entries(space->component_count());
  for (std::size_t c = 0; c < entries.size(); ++c) {
    const auto& v = f.values(c);
    for (std::size_t x = 0; x < v.size(); ++x) {
      entries[c].push_back({static_cast<PointId>(x), static_cast<PointId>(x), v[x]});
    }
  }
  return RoeOperator(space, entries);
}

Complex RoeOperator::entry(std::size_t c, PointId x, PointId y) const {
  const auto& b = blocks_.at(c);
  auto first = b.cols.begin() + b.offsets[x];
  auto last = b.cols.begin() + b.offsets[x + 1];
  auto it = std::lower_bound(first, last, y);
  if (it == last || *it != y) return 0.0;
  return b.values[static_cast<std::size_t>(it - b.cols.begin())];
}

std::vector<Triplet> RoeOperator::triplets(std::size_t c) const {
  const auto& b = blocks_.at(c);
  std::vector<Triplet> out;
  out.reserve(b.cols.size());
  for (std::size_t x = 0; x < b.rows(); ++x) {
    for (auto k = b.offsets[x]; k < b.offsets[x + 1]; ++k) {
      out.push_back({static_cast<PointId>(x), b.cols[k], b.values[k]});
    }
  }
  return out;
}

std::size_t RoeOperator::nnz() const noexcept {
  std::size_t total = 0;
  for (const auto& b : blocks_) total += b.cols.size();
  return total;
}

double RoeOperator::sup_entry() const noexcept {
  double best = 0.0;
  for (const auto& b : blocks_) {
    for (const auto& v : b.values) best = std::max(best, std::abs(v));
  }
  return best;
}

bool RoeOperator::is_real() const noexcept {
  for (const auto& b : blocks_) {
    for (const auto& v : b.values) {
      if (v.imag() != 0.0) return false;
    }
  }
  return true;
}

bool RoeOperator::is_self_adjoint(double tol) const {
  return max_abs_difference(*this, adjoint(*this)) <= tol;
}

RoeOperator combine(const RoeOperator& t, const RoeOperator& s, Complex a, Complex b) {
  require_same_space(t.space_, s.space_);
  std::vector<OperatorBlock> blocks;
  for (std::size_t c = 0; c < t.blocks_.size(); ++c) {
    const auto& tb = t.blocks_[c];
    const auto& sb = s.blocks_[c];
    OperatorBlock out;
    out.offsets.push_back(0);
    RowAccumulator acc(tb.rows());
    for (std::size_t x = 0; x < tb.rows(); ++x) {
      if (a != Complex(0.0)) {
        for (auto k = tb.offsets[x]; k < tb.offsets[x + 1]; ++k) acc.add(tb.cols[k], a * tb.values[k]);
      }
      if (b != Complex(0.0)) {
        for (auto k = sb.offsets[x]; k < sb.offsets[x + 1]; ++k) acc.add(sb.cols[k], b * sb.values[k]);
      }
      acc.flush(out);
    }
    blocks.push_back(std::move(out));
  }
  RoeOperator result(t.space_, std::move(blocks));
  if (result.propagation_ > std::max(t.propagation_, s.propagation_)) {
    raise(ErrorCode::kInternal, "propagation of a sum exceeds its summands");
  }
  return result;
}

RoeOperator multiply(const RoeOperator& t, const RoeOperator& s) {
  require_same_space(t.space_, s.space_);
  std::vector<OperatorBlock> blocks;
  for (std::size_t c = 0; c < t.blocks_.size(); ++c) {
    const auto& tb = t.blocks_[c];
    const auto& sb = s.blocks_[c];
    OperatorBlock out;
    out.offsets.push_back(0);
    RowAccumulator acc(tb.rows());
    for (std::size_t x = 0; x < tb.rows(); ++x) {
      for (auto k = tb.offsets[x]; k < tb.offsets[x + 1]; ++k) {
        const PointId z = tb.cols[k];
        for (auto j = sb.offsets[z]; j < sb.offsets[z + 1]; ++j) {
          acc.add(sb.cols[j], tb.values[k] * sb.values[j]);
        }
      }
      acc.flush(out);
    }
    blocks.push_back(std::move(out));
  }
  RoeOperator result(t.space_, std::move(blocks));
  if (result.propagation_ > t.propagation_ + s.propagation_) {
    raise(ErrorCode::kInternal, "propagation of a product exceeds prop(T) + prop(S)");
  }
  return result;
}

RoeOperator adjoint(const RoeOperator& t) {
  std::vector<std::vector<Triplet>> entries(t.component_count());
  for (std::size_t c = 0; c < entries.size(); ++c) {
    for (const auto& e : t.triplets(c)) entries[c].push_back({e.col, e.row, std::conj(e.value)});
  }
  return RoeOperator(t.space_, entries);
}

RoeOperator operator*(const DiagonalFunction& f, const RoeOperator& t) {
  return multiply(RoeOperator::diagonal(f), t);
}

RoeOperator operator*(const RoeOperator& t, const DiagonalFunction& f) {
  return multiply(t, RoeOperator::diagonal(f));
}

double max_abs_difference(const RoeOperator& t, const RoeOperator& s) {
  const auto diff = combine(t, s, 1.0, -1.0);
  return diff.sup_entry();
}

DiagonalFunction phi(const RoeOperator& t) {
  std::vector<std::vector<Complex>> values;
  for (std::size_t c = 0; c < t.component_count(); ++c) {
    const auto& b = t.block(c);
    std::vector<Complex> sums(b.rows());
    for (std::size_t x = 0; x < b.rows(); ++x) {
      for (auto k = b.offsets[x]; k < b.offsets[x + 1]; ++k) sums[x] += b.values[k];
    }
    values.push_back(std::move(sums));
  }
  return DiagonalFunction(t.space(), std::move(values));
}

std::vector<Complex> apply(const RoeOperator& t, std::span<const Complex> v, std::size_t c) {
  if (c >= t.component_count()) raise(ErrorCode::kOutOfRange, "no component " + std::to_string(c));
  const auto& b = t.block(c);
  if (v.size() != b.rows()) {
    raise(ErrorCode::kDimensionMismatch,
          "vector of length " + std::to_string(v.size()) + " for a component of " +
              std::to_string(b.rows()) + " points");
  }
  std::vector<Complex> out(b.rows());
  for (std::size_t x = 0; x < b.rows(); ++x) {
    Complex sum = 0.0;
    for (auto k = b.offsets[x]; k < b.offsets[x + 1]; ++k) sum += b.values[k] * v[b.cols[k]];
    out[x] = sum;
  }
  return out;
}

PartialTranslation::PartialTranslation(SpacePtr space, std::vector<std::vector<Edge>> pairs)
    : space_(std::move(space)), pairs_(std::move(pairs)) {
  if (pairs_.size() != space_->component_count()) {
    raise(ErrorCode::kDimensionMismatch, "one pair list per component required");
  }
  for (std::size_t c = 0; c < pairs_.size(); ++c) {
    const PointId n = space_->component(c).size();
    std::vector<char> used_x(static_cast<std::size_t>(n), 0), used_y(static_cast<std::size_t>(n), 0);
    for (auto [x, y] : pairs_[c]) {
      if (x < 0 || y < 0 || x >= n || y >= n) {
        raise(ErrorCode::kInvalidArgument, "pair leaves component " + std::to_string(c));
      }
      if (used_x[x] || used_y[y]) {
        raise(ErrorCode::kInvalidArgument,
              "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                  ") breaks injectivity on component " + std::to_string(c));
      }
      used_x[x] = used_y[y] = 1;
    }
    std::sort(pairs_[c].begin(), pairs_[c].end(),
              [](const Edge& a, const Edge& b) { return a.second < b.second; });
  }
}

std::size_t PartialTranslation::size() const noexcept {
  std::size_t total = 0;
  for (const auto& p : pairs_) total += p.size();
  return total;
}

std::vector<PointId> PartialTranslation::range(std::size_t c) const {
  std::vector<PointId> out;
  for (auto [x, y] : pairs_.at(c)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointId> PartialTranslation::domain(std::size_t c) const {
  std::vector<PointId> out;
  for (auto [x, y] : pairs_.at(c)) out.push_back(y);
  return out;
}

std::optional<std::pair<std::size_t, Edge>> PartialTranslation::first_outside(
    const Entourage& e) const {
  require_same_space(space_, e.space());
  for (std::size_t c = 0; c < pairs_.size(); ++c) {
    for (const auto& pair : pairs_[c]) {
      if (!e.contains(c, pair.first, pair.second)) return std::make_pair(c, pair);
    }
  }
  return std::nullopt;
}

RoeOperator pt_to_operator(const PartialTranslation& v) {
  std::vector<std::vector<Triplet>> entries(v.space()->component_count());
  for (std::size_t c = 0; c < entries.size(); ++c) {
    for (auto [x, y] : v.pairs(c)) entries[c].push_back({x, y, 1.0});
  }
  return RoeOperator(v.space(), entries);
}

std::optional<PartialTranslation> operator_to_pt(const RoeOperator& t) {
  std::vector<std::vector<Edge>> pairs(t.component_count());
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const PointId n = t.space()->component(c).size();
    std::vector<char> used_y(static_cast<std::size_t>(n), 0);
    for (const auto& e : t.triplets(c)) {
      if (e.value != Complex(1.0)) return std::nullopt;
      if (used_y[e.col]) return std::nullopt;
      used_y[e.col] = 1;
      pairs[c].emplace_back(e.row, e.col);
    }
    // rows are unique per entry list only if each row holds one entry
    for (std::size_t k = 1; k < pairs[c].size(); ++k) {
      if (pairs[c][k].first == pairs[c][k - 1].first) return std::nullopt;
    }
  }
  return PartialTranslation(t.space(), std::move(pairs));
}

double l1_norm_upper(const RoeOperator& t, const FullTranslationSystem& system) {
  require_same_space(t.space(), system.space());
  std::vector<double> sup(system.size(), 0.0);
  for (std::size_t c = 0; c < t.component_count(); ++c) {
    for (const auto& e : t.triplets(c)) {
      auto i = system.route(c, e.row, e.col);
      if (!i) {
        raise(ErrorCode::kSupportNotCovered,
              "entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                  ") of component " + std::to_string(c) + " lies in no A_i");
      }
      sup[*i] = std::max(sup[*i], std::abs(e.value));
    }
  }
  double total = 0.0;
  for (double s : sup) total += s;
  return total;
}

}  // namespace roekit
