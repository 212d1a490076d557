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

#include "roekit/space.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <string>

#include "roekit/error.hpp"

namespace roekit {
namespace {

constexpr std::int32_t kUnreached = -1;

PairRows rows_from_lists(std::vector<std::vector<PointId>> lists) {
  PairRows out;
  out.offsets.assign(lists.size() + 1, 0);
  for (std::size_t x = 0; x < lists.size(); ++x) {
    auto& row = lists[x];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    out.offsets[x + 1] = out.offsets[x] + static_cast<std::int64_t>(row.size());
  }
  out.cols.reserve(static_cast<std::size_t>(out.offsets.back()));
  for (const auto& row : lists) out.cols.insert(out.cols.end(), row.begin(), row.end());
  return out;
}

}  // namespace

Component Component::from_edges(PointId point_count, std::span<const Edge> edges) {
  if (point_count <= 0) raise(ErrorCode::kEmptyComponent, "component has no points");
  Component c;
  c.size_ = point_count;
  std::vector<std::vector<PointId>> adjacency(point_count);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= point_count || v >= point_count) {
      raise(ErrorCode::kInvalidArgument,
            "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                ") outside component of " + std::to_string(point_count) + " points");
    }
    if (u == v) continue;
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
    c.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(c.edges_.begin(), c.edges_.end());
  c.edges_.erase(std::unique(c.edges_.begin(), c.edges_.end()), c.edges_.end());

  const auto n = static_cast<std::size_t>(point_count);
  c.distances_.assign(n * n, kUnreached);
  std::vector<PointId> queue(n);
  for (PointId s = 0; s < point_count; ++s) {
    std::int32_t* dist = c.distances_.data() + static_cast<std::size_t>(s) * n;
    std::size_t head = 0, tail = 0;
    dist[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      const PointId u = queue[head++];
      for (PointId v : adjacency[u]) {
        if (dist[v] == kUnreached) {
          dist[v] = dist[u] + 1;
          queue[tail++] = v;
        }
      }
    }
    if (tail != n) {
      raise(ErrorCode::kDisconnectedComponent,
            "point " + std::to_string(s) + " reaches only " + std::to_string(tail) +
                " of " + std::to_string(n) + " points");
    }
  }
  c.finish();
  return c;
}

Component Component::from_distances(PointId point_count,
                                    std::vector<std::int32_t> distances) {
  if (point_count <= 0) raise(ErrorCode::kEmptyComponent, "component has no points");
  const auto n = static_cast<std::size_t>(point_count);
  if (distances.size() != n * n) {
    raise(ErrorCode::kDimensionMismatch, "distance table must be point_count^2");
  }
  Component c;
  c.size_ = point_count;
  c.distances_ = std::move(distances);
  for (PointId x = 0; x < point_count; ++x) {
    for (PointId y = 0; y < point_count; ++y) {
      const auto d = c.distance(x, y);
      if (d < 0 || d != c.distance(y, x) || (d == 0) != (x == y)) {
        raise(ErrorCode::kInvalidArgument, "distance table is not a metric");
      }
      if (x < y && d == 1) c.edges_.emplace_back(x, y);
    }
  }
  c.finish();
  return c;
}

void Component::finish() {
  const auto n = static_cast<std::size_t>(size_);
  diameter_ = *std::max_element(distances_.begin(), distances_.end());
  profile_.assign(static_cast<std::size_t>(diameter_) + 1, 0);
  std::vector<PointId> histogram(profile_.size());
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(histogram.begin(), histogram.end(), 0);
    for (std::size_t y = 0; y < n; ++y) ++histogram[distances_[x * n + y]];
    PointId running = 0;
    for (std::size_t r = 0; r < histogram.size(); ++r) {
      running += histogram[r];
      profile_[r] = std::max(profile_[r], running);
    }
  }
}

PointId Component::max_ball(std::int32_t radius) const noexcept {
  if (radius < 0) return 0;
  if (radius >= diameter_) return size_;
  return profile_[static_cast<std::size_t>(radius)];
}

PointId Component::ball_size(PointId x, std::int32_t radius) const {
  PointId count = 0;
  for (PointId y = 0; y < size_; ++y) count += distance(x, y) <= radius ? 1 : 0;
  return count;
}

SpaceFamily::SpaceFamily(std::vector<Component> components)
    : components_(std::move(components)) {
  offsets_.reserve(components_.size());
  for (const auto& c : components_) {
    offsets_.push_back(total_points_);
    total_points_ += static_cast<std::size_t>(c.size());
  }
}

PointId SpaceFamily::max_ball(std::int32_t radius) const noexcept {
  PointId best = 0;
  for (const auto& c : components_) best = std::max(best, c.max_ball(radius));
  return best;
}

SpacePtr build_space_from_edges(std::span<const PointId> point_counts,
                                std::span<const std::vector<Edge>> edges) {
  if (point_counts.size() != edges.size()) {
    raise(ErrorCode::kDimensionMismatch, "one edge list per component required");
  }
  std::vector<Component> comps;
  comps.reserve(point_counts.size());
  for (std::size_t c = 0; c < point_counts.size(); ++c) {
    try {
      comps.push_back(Component::from_edges(point_counts[c], edges[c]));
    } catch (const Error& e) {
      raise(e.code(), "component " + std::to_string(c) + ": " + e.what());
    }
  }
  return std::make_shared<const SpaceFamily>(std::move(comps));
}

bool PairRows::contains(PointId x, PointId y) const {
  auto r = row(x);
  return std::binary_search(r.begin(), r.end(), y);
}

Entourage::Entourage(SpacePtr space, std::vector<PairRows> rows,
                     std::optional<std::int32_t> radius)
    : space_(std::move(space)), rows_(std::move(rows)), radius_(radius) {
  compute_symmetry();
}

void Entourage::compute_symmetry() {
  symmetric_ = true;
  for (const auto& rows : rows_) {
    const auto n = static_cast<PointId>(rows.offsets.size() - 1);
    for (PointId x = 0; x < n && symmetric_; ++x) {
      for (PointId y : rows.row(x)) {
        if (!rows.contains(y, x)) {
          symmetric_ = false;
          break;
        }
      }
    }
    if (!symmetric_) return;
  }
}

Entourage Entourage::radius(SpacePtr space, std::int32_t r) {
  if (r < 0) raise(ErrorCode::kOutOfRange, "radius must be nonnegative");
  std::vector<PairRows> all;
  all.reserve(space->component_count());
  for (const auto& comp : space->components()) {
    PairRows rows;
    const PointId n = comp.size();
    rows.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (PointId x = 0; x < n; ++x) {
      for (PointId y = 0; y < n; ++y) {
        if (comp.distance(x, y) <= r) rows.cols.push_back(y);
      }
      rows.offsets[x + 1] = static_cast<std::int64_t>(rows.cols.size());
    }
    all.push_back(std::move(rows));
  }
  return Entourage(std::move(space), std::move(all), r);
}

Entourage Entourage::from_pairs(SpacePtr space,
                                const std::vector<std::vector<Edge>>& pairs) {
  if (pairs.size() != space->component_count()) {
    raise(ErrorCode::kDimensionMismatch, "one pair list per component required");
  }
  std::vector<PairRows> all;
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const PointId n = space->component(c).size();
    std::vector<std::vector<PointId>> lists(n);
    for (auto [x, y] : pairs[c]) {
      if (x < 0 || y < 0 || x >= n || y >= n) {
        raise(ErrorCode::kInvalidArgument,
              "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                  ") leaves component " + std::to_string(c));
      }
      lists[x].push_back(y);
    }
    all.push_back(rows_from_lists(std::move(lists)));
  }
  return Entourage(std::move(space), std::move(all), std::nullopt);
}

bool Entourage::contains_diagonal() const noexcept {
  for (const auto& rows : rows_) {
    const auto n = static_cast<PointId>(rows.offsets.size() - 1);
    for (PointId x = 0; x < n; ++x) {
      if (!rows.contains(x, x)) return false;
    }
  }
  return true;
}

std::size_t Entourage::pair_count() const noexcept {
  std::size_t total = 0;
  for (const auto& rows : rows_) total += rows.pair_count();
  return total;
}

std::size_t Entourage::max_offdiagonal_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& rows : rows_) {
    const auto n = static_cast<PointId>(rows.offsets.size() - 1);
    for (PointId x = 0; x < n; ++x) {
      std::size_t deg = 0;
      for (PointId y : rows.row(x)) deg += y != x ? 1 : 0;
      best = std::max(best, deg);
    }
  }
  return best;
}

std::int32_t Entourage::max_distance() const noexcept {
  std::int32_t best = 0;
  for (std::size_t c = 0; c < rows_.size(); ++c) {
    const auto& comp = space_->component(c);
    for (PointId x = 0; x < comp.size(); ++x) {
      for (PointId y : rows_[c].row(x)) best = std::max(best, comp.distance(x, y));
    }
  }
  return best;
}

bool Entourage::subset_of(const Entourage& other) const {
  if (space_ != other.space_) raise(ErrorCode::kSpaceMismatch, "entourages over different spaces");
  for (std::size_t c = 0; c < rows_.size(); ++c) {
    const auto n = static_cast<PointId>(rows_[c].offsets.size() - 1);
    for (PointId x = 0; x < n; ++x) {
      auto mine = rows_[c].row(x);
      auto theirs = other.rows_[c].row(x);
      if (!std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end())) return false;
    }
  }
  return true;
}

bool Entourage::operator==(const Entourage& other) const {
  if (space_ != other.space_) return false;
  for (std::size_t c = 0; c < rows_.size(); ++c) {
    if (rows_[c].offsets != other.rows_[c].offsets || rows_[c].cols != other.rows_[c].cols) {
      return false;
    }
  }
  return true;
}

Entourage r_diagonal(const SpacePtr& space, std::int32_t r) {
  return Entourage::radius(space, r);
}

Entourage compose_entourages(const Entourage& e, const Entourage& f) {
  if (e.space() != f.space()) raise(ErrorCode::kSpaceMismatch, "cannot compose entourages over different spaces");
  const auto& space = *e.space();
  std::vector<PairRows> all;
  all.reserve(space.component_count());
  for (std::size_t c = 0; c < space.component_count(); ++c) {
    const PointId n = space.component(c).size();
    std::vector<PointId> stamp(static_cast<std::size_t>(n), -1);
    PairRows out;
    out.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    std::vector<PointId> row;
    for (PointId x = 0; x < n; ++x) {
      row.clear();
      for (PointId z : e.rows(c).row(x)) {
        for (PointId y : f.rows(c).row(z)) {
          if (stamp[y] != x) {
            stamp[y] = x;
            row.push_back(y);
          }
        }
      }
      std::sort(row.begin(), row.end());
      out.cols.insert(out.cols.end(), row.begin(), row.end());
      out.offsets[x + 1] = static_cast<std::int64_t>(out.cols.size());
    }
    all.push_back(std::move(out));
  }
  return Entourage(e.space(), std::move(all), std::nullopt);
}

std::optional<int> check_monogenic(const Entourage& e0, const Entourage& f, int n_max) {
  if (n_max < 1) return std::nullopt;
  Entourage power = e0;
  for (int n = 1; n <= n_max; ++n) {
    if (f.subset_of(power)) return n;
    Entourage next = compose_entourages(power, e0);
    if (next == power) return std::nullopt;  // powers have stabilized
    power = std::move(next);
  }
  return std::nullopt;
}

NetResult extract_net(const SpaceFamily& space, std::int32_t r) {
  if (r < 1) raise(ErrorCode::kOutOfRange, "net radius must be at least 1");
  NetResult result;
  std::vector<Component> comps;
  for (const auto& comp : space.components()) {
    std::vector<PointId> chosen;
    for (PointId x = 0; x < comp.size(); ++x) {
      bool separated = std::all_of(chosen.begin(), chosen.end(),
                                   [&](PointId y) { return comp.distance(x, y) >= r; });
      if (separated) chosen.push_back(x);
    }
    const auto m = chosen.size();
    std::vector<std::int32_t> restricted(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        restricted[i * m + j] = comp.distance(chosen[i], chosen[j]);
      }
    }
    comps.push_back(Component::from_distances(static_cast<PointId>(m), std::move(restricted)));
    result.inclusion.push_back(std::move(chosen));
  }
  result.net = std::make_shared<const SpaceFamily>(std::move(comps));
  return result;
}

SpacePtr amplify(const SpaceFamily& space, std::int32_t copies) {
  if (copies < 1) raise(ErrorCode::kOutOfRange, "amplification needs N >= 1");
  std::vector<Component> comps;
  for (const auto& comp : space.components()) {
    const auto m = static_cast<std::size_t>(comp.size());
    const auto total = m * static_cast<std::size_t>(copies);
    std::vector<std::int32_t> dist(total * total);
    for (std::size_t a = 0; a < total; ++a) {
      const auto ia = static_cast<std::int32_t>(a / m);
      const auto xa = static_cast<PointId>(a % m);
      for (std::size_t b = 0; b < total; ++b) {
        const auto ib = static_cast<std::int32_t>(b / m);
        const auto xb = static_cast<PointId>(b % m);
        dist[a * total + b] = comp.distance(xa, xb) + std::abs(ia - ib);
      }
    }
    comps.push_back(Component::from_distances(static_cast<PointId>(total), std::move(dist)));
  }
  return std::make_shared<const SpaceFamily>(std::move(comps));
}

}  // namespace roekit
