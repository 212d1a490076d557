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

#ifndef ROEKIT_TESTS_HELPERS_HPP
#define ROEKIT_TESTS_HELPERS_HPP

#include <vector>

#include "roekit/space.hpp"

namespace testing {

inline roekit::SpacePtr graph_space(const std::vector<std::pair<roekit::PointId, std::vector<roekit::Edge>>>& parts) {
  std::vector<roekit::PointId> counts;
  std::vector<std::vector<roekit::Edge>> edges;
  for (const auto& [n, e] : parts) {
    counts.push_back(n);
    edges.push_back(e);
  }
  return roekit::build_space_from_edges(counts, edges);
}

inline std::vector<roekit::Edge> path_edges(roekit::PointId n) {
  std::vector<roekit::Edge> e;
  for (roekit::PointId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

inline std::vector<roekit::Edge> cycle_edges(roekit::PointId n) {
  std::vector<roekit::Edge> e;
  for (roekit::PointId i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return e;
}

inline roekit::SpacePtr path(roekit::PointId n) { return graph_space({{n, path_edges(n)}}); }
inline roekit::SpacePtr cycle(roekit::PointId n) { return graph_space({{n, cycle_edges(n)}}); }

}  // namespace testing

#endif  // ROEKIT_TESTS_HELPERS_HPP
