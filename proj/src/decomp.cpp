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

#include "roekit/decomp.hpp"

#include <algorithm>
#include <string>

#include "roekit/error.hpp"

namespace roekit {
namespace {

[[noreturn]] void not_covered(std::size_t c, PointId x, PointId y) {
  raise(ErrorCode::kSupportNotCovered, "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                                           ") of component " + std::to_string(c) +
                                           " is outside the system's entourage");
}

// Indicator functions from (term, point) routing lists.
Decomposition build(const SpacePtr& space, std::size_t terms,
                    const std::vector<std::vector<std::pair<std::size_t, PointId>>>& routed) {
  std::vector<std::vector<std::vector<Complex>>> values(terms);
  for (auto& v : values) {
    for (const auto& comp : space->components()) v.emplace_back(static_cast<std::size_t>(comp.size()), 0.0);
  }
  for (std::size_t c = 0; c < routed.size(); ++c) {
    for (auto [i, x] : routed[c]) values[i][c][x] = 1.0;
  }
  Decomposition d;
  for (auto& v : values) d.chi.emplace_back(space, std::move(v));
  return d;
}

}  // namespace

MatchingCover entourage_matchings(const Entourage& e0) {
  if (!e0.symmetric()) raise(ErrorCode::kInvalidArgument, "matching cover needs a symmetric entourage");
  const auto& space = *e0.space();
  MatchingCover cover;
  cover.space = e0.space();
  cover.max_degree = e0.max_offdiagonal_degree();
  for (std::size_t c = 0; c < space.component_count(); ++c) {
    const PointId n = space.component(c).size();
    std::vector<std::vector<char>> used(static_cast<std::size_t>(n));
    for (PointId u = 0; u < n; ++u) {
      for (PointId v : e0.rows(c).row(u)) {
        if (v <= u) continue;
        std::size_t color = 0;
        auto busy = [&](PointId w) { return color < used[w].size() && used[w][color]; };
        while (busy(u) || busy(v)) ++color;
        for (PointId w : {u, v}) {
          if (used[w].size() <= color) used[w].resize(color + 1, 0);
          used[w][color] = 1;
        }
        while (cover.matchings.size() <= color) {
          cover.matchings.emplace_back(space.component_count());
        }
        cover.matchings[color][c].emplace_back(u, v);
      }
    }
  }
  return cover;
}

FullTranslationSystem full_system_from_matchings(const MatchingCover& cover, const Entourage& e0) {
  if (cover.space != e0.space()) raise(ErrorCode::kSpaceMismatch, "cover and entourage differ in space");
  if (!e0.contains_diagonal()) {
    raise(ErrorCode::kInvalidArgument, "involution systems need the diagonal inside E0");
  }
  const auto& space = *e0.space();
  std::vector<FullTranslation> translations{FullTranslation::identity(space)};
  for (const auto& matching : cover.matchings) {
    auto t = FullTranslation::identity(space);
    for (std::size_t c = 0; c < matching.size(); ++c) {
      for (auto [u, v] : matching[c]) {
        t.images[c][u] = v;
        t.images[c][v] = u;
      }
    }
    translations.push_back(std::move(t));
  }
  return FullTranslationSystem(e0, std::move(translations));
}

Decomposition decompose(const PartialTranslation& v, const FullTranslationSystem& system) {
  if (v.space() != system.space()) raise(ErrorCode::kSpaceMismatch, "translation and system differ in space");
  std::vector<std::vector<std::pair<std::size_t, PointId>>> routed(v.space()->component_count());
  for (std::size_t c = 0; c < routed.size(); ++c) {
    for (auto [x, y] : v.pairs(c)) {
      auto i = system.route(c, x, y);
      if (!i) not_covered(c, x, y);
      routed[c].emplace_back(*i, x);
    }
  }
  return build(v.space(), system.size(), routed);
}

Decomposition cayley_decompose(const PartialTranslation& v, const GeneratedFamily& family) {
  if (v.space() != family.space) raise(ErrorCode::kSpaceMismatch, "translation and family differ in space");
  const std::size_t first = family.spec.include_identity ? 0 : 1;
  std::vector<std::vector<std::pair<std::size_t, PointId>>> routed(v.space()->component_count());
  for (std::size_t c = 0; c < routed.size(); ++c) {
    const auto& graph = family.cayley[c];
    const auto& group = graph.group;
    for (auto [x, y] : v.pairs(c)) {
      // x = y * s  <=>  s = y^{-1} x
      const auto s = group.multiply(group.inverse(graph.elements[y]), graph.elements[x]);
      std::size_t label = 0;
      if (s != group.identity) {
        auto it = std::find(graph.generators.begin(), graph.generators.end(), s);
        if (it == graph.generators.end()) not_covered(c, x, y);
        label = static_cast<std::size_t>(it - graph.generators.begin()) + 1;
      } else if (first == 1) {
        // no identity term: the lowest generator acting trivially
        auto it = std::find(graph.generators.begin(), graph.generators.end(), group.identity);
        if (it == graph.generators.end()) not_covered(c, x, y);
        label = static_cast<std::size_t>(it - graph.generators.begin()) + 1;
      }
      routed[c].emplace_back(label - first, x);
    }
  }
  return build(v.space(), family.system.size(), routed);
}

RoeOperator reconstruct(const Decomposition& d, const FullTranslationSystem& system) {
  if (d.chi.size() != system.size()) raise(ErrorCode::kDimensionMismatch, "one chi per system element required");
  const auto& space = system.space();
  auto sum = RoeOperator::zero(space);
  for (std::size_t i = 0; i < d.chi.size(); ++i) {
    sum = sum + d.chi[i] * RoeOperator::from_translation(space, system[i]);
  }
  return sum;
}

DecompositionCheck verify_decomposition(const PartialTranslation& v, const Decomposition& d,
                                        const FullTranslationSystem& system) {
  DecompositionCheck check;
  check.reconstructs = max_abs_difference(reconstruct(d, system), pt_to_operator(v)) == 0.0;

  const auto& space = *v.space();
  check.disjoint = true;
  auto total = DiagonalFunction::constant(v.space(), 0.0);
  for (const auto& chi : d.chi) {
    if (!chi.is_indicator()) check.disjoint = false;
    total += chi;
  }
  for (std::size_t c = 0; c < space.component_count(); ++c) {
    for (const auto& value : total.values(c)) {
      if (value.real() > 1.0) check.disjoint = false;
    }
  }
  check.mass = total == phi(pt_to_operator(v));
  return check;
}

PartialTranslation random_partial_translation(const Entourage& e0, std::mt19937_64& rng) {
  const auto& space = *e0.space();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<Edge>> pairs(space.component_count());
  for (std::size_t c = 0; c < space.component_count(); ++c) {
    const PointId n = space.component(c).size();
    const double keep = unit(rng);
    std::vector<Edge> candidates;
    for (PointId x = 0; x < n; ++x) {
      for (PointId y : e0.rows(c).row(x)) {
        if (unit(rng) < keep) candidates.emplace_back(x, y);
      }
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::vector<char> used_x(static_cast<std::size_t>(n), 0), used_y(static_cast<std::size_t>(n), 0);
    for (auto [x, y] : candidates) {
      if (used_x[x] || used_y[y]) continue;
      used_x[x] = used_y[y] = 1;
      pairs[c].emplace_back(x, y);
    }
  }
  return PartialTranslation(e0.space(), std::move(pairs));
}

}  // namespace roekit
