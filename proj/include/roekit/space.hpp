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

#ifndef ROEKIT_SPACE_HPP
#define ROEKIT_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace roekit {

using PointId = std::int32_t;
using Edge = std::pair<PointId, PointId>;

/// One finite metric piece of a separated disjoint union.
///
/// The metric is an integer shortest-path metric. Components built from
/// edges get it by breadth-first search; nets carry the restriction of the
/// ambient metric, in which case `edges()` lists the pairs at distance one
/// (possibly none).
class Component {
 public:
  static Component from_edges(PointId point_count, std::span<const Edge> edges);
  static Component from_distances(PointId point_count,
                                  std::vector<std::int32_t> distances);

  PointId size() const noexcept { return size_; }
  std::int32_t distance(PointId x, PointId y) const noexcept {
    return distances_[static_cast<std::size_t>(x) * size_ + y];
  }
  std::int32_t diameter() const noexcept { return diameter_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Largest #B(x, R) over all points. Equals size() once R >= diameter().
  PointId max_ball(std::int32_t radius) const noexcept;
  PointId ball_size(PointId x, std::int32_t radius) const;

  /// Cached bounded-geometry profile, entry R = max_ball(R) for R in 0..diam.
  const std::vector<PointId>& ball_profile() const noexcept { return profile_; }

 private:
  Component() = default;
  void finish();

  PointId size_ = 0;
  std::int32_t diameter_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> distances_;
  std::vector<PointId> profile_;
};

/// Separated disjoint union of finite components. Points are addressed as
/// (component, local id); distinct components are at infinite distance.
class SpaceFamily {
 public:
  explicit SpaceFamily(std::vector<Component> components);

  std::size_t component_count() const noexcept { return components_.size(); }
  const Component& component(std::size_t c) const { return components_.at(c); }
  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t total_points() const noexcept { return total_points_; }
  /// Offset of component c in the flattened point numbering.
  std::size_t offset(std::size_t c) const { return offsets_.at(c); }
  PointId max_ball(std::int32_t radius) const noexcept;

 private:
  std::vector<Component> components_;
  std::vector<std::size_t> offsets_;
  std::size_t total_points_ = 0;
};

using SpacePtr = std::shared_ptr<const SpaceFamily>;

/// Builds a family from per-component point counts and unit edges.
SpacePtr build_space_from_edges(std::span<const PointId> point_counts,
                                std::span<const std::vector<Edge>> edges);

/// Sorted adjacency rows of a relation on one component.
struct PairRows {
  std::vector<std::int64_t> offsets;  // size n + 1
  std::vector<PointId> cols;

  std::span<const PointId> row(PointId x) const {
    return {cols.data() + offsets[x],
            static_cast<std::size_t>(offsets[x + 1] - offsets[x])};
  }
  bool contains(PointId x, PointId y) const;
  std::size_t pair_count() const noexcept { return cols.size(); }
};

/// A controlled set of pairs, always materialized. Radius-built entourages
/// remember their radius so that Δ_R can be reported as such.
class Entourage {
 public:
  static Entourage radius(SpacePtr space, std::int32_t r);
  /// Pairs per component; duplicates are merged. Throws if a pair names a
  /// point outside its component.
  static Entourage from_pairs(SpacePtr space,
                              const std::vector<std::vector<Edge>>& pairs);
  static Entourage diagonal(SpacePtr space) { return radius(std::move(space), 0); }

  const SpacePtr& space() const noexcept { return space_; }
  std::optional<std::int32_t> radius_form() const noexcept { return radius_; }
  bool symmetric() const noexcept { return symmetric_; }
  bool contains_diagonal() const noexcept;
  bool contains(std::size_t c, PointId x, PointId y) const {
    return rows_[c].contains(x, y);
  }
  const PairRows& rows(std::size_t c) const { return rows_.at(c); }
  std::size_t pair_count() const noexcept;
  /// Largest in-component degree, diagonal excluded.
  std::size_t max_offdiagonal_degree() const noexcept;
  std::int32_t max_distance() const noexcept;

  bool subset_of(const Entourage& other) const;
  bool operator==(const Entourage& other) const;

 private:
  Entourage(SpacePtr space, std::vector<PairRows> rows,
            std::optional<std::int32_t> radius);
  void compute_symmetry();

  SpacePtr space_;
  std::vector<PairRows> rows_;
  std::optional<std::int32_t> radius_;
  bool symmetric_ = true;

  friend Entourage compose_entourages(const Entourage&, const Entourage&);
};

/// Δ_R = {(x, y) : d(x, y) <= R} per component.
Entourage r_diagonal(const SpacePtr& space, std::int32_t r);

/// E∘F = {(x, y) : exists z with (x, z) in E and (z, y) in F}.
Entourage compose_entourages(const Entourage& e, const Entourage& f);

/// Smallest n <= n_max with F ⊆ E0^{∘n}; nullopt if none.
std::optional<int> check_monogenic(const Entourage& e0, const Entourage& f,
                                   int n_max);

struct NetResult {
  SpacePtr net;
  /// inclusion[c][i] is the ambient id of net point i in component c.
  std::vector<std::vector<PointId>> inclusion;
};

/// Greedy maximal R-separated subset per component, scanning ids upward.
NetResult extract_net(const SpaceFamily& space, std::int32_t r);

/// X × {1..N} with d((x,i),(y,j)) = d(x,y) + |i - j|. Point (x, i) gets
/// local id (i - 1) * m + x where m is the component size.
SpacePtr amplify(const SpaceFamily& space, std::int32_t copies);

}  // namespace roekit

#endif  // ROEKIT_SPACE_HPP
