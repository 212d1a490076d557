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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "roekit/error.hpp"
#include "roekit/space.hpp"

using namespace roekit;
using testing::cycle;
using testing::path;

namespace {

// brute-force composition over all triples
bool composed_contains(const Entourage& e, const Entourage& f, std::size_t c, PointId x, PointId y) {
  const PointId n = e.space()->component(c).size();
  for (PointId z = 0; z < n; ++z) {
    if (e.contains(c, x, z) && f.contains(c, z, y)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("components validate their input") {
  const std::vector<Edge> none;
  CHECK_THROWS_AS(Component::from_edges(0, none), Error);
  const std::vector<Edge> split{{0, 1}, {2, 3}};
  try {
    Component::from_edges(4, split);
    FAIL("expected a disconnected-component error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDisconnectedComponent);
  }
  const std::vector<Edge> bad{{0, 5}};
  CHECK_THROWS_AS(Component::from_edges(2, bad), Error);
}

TEST_CASE("BFS metric on paths and cycles") {
  const auto p = path(6);
  CHECK(p->component(0).distance(0, 5) == 5);
  CHECK(p->component(0).diameter() == 5);
  const auto c = cycle(8);
  CHECK(c->component(0).distance(0, 5) == 3);
  CHECK(c->component(0).diameter() == 4);
  CHECK(c->component(0).max_ball(1) == 3);
  CHECK(c->component(0).max_ball(100) == 8);
}

TEST_CASE("distance tables are metrics") {
  const auto space = testing::graph_space({{12, testing::cycle_edges(12)}, {7, testing::path_edges(7)}, {1, {}}});
  for (const auto& comp : space->components()) {
    const PointId n = comp.size();
    for (PointId x = 0; x < n; ++x) {
      CHECK(comp.distance(x, x) == 0);
      for (PointId y = 0; y < n; ++y) {
        CHECK(comp.distance(x, y) == comp.distance(y, x));
        if (x != y) CHECK(comp.distance(x, y) > 0);
        for (PointId z = 0; z < n; ++z) CHECK(comp.distance(x, y) <= comp.distance(x, z) + comp.distance(z, y));
      }
    }
  }
}

TEST_CASE("radius entourages nest and compose") {
  const auto p = path(7);
  const auto d1 = r_diagonal(p, 1), d2 = r_diagonal(p, 2), d3 = r_diagonal(p, 3);
  CHECK(d1.subset_of(d2));
  CHECK(d2.subset_of(d3));
  CHECK_FALSE(d3.subset_of(d2));
  CHECK(compose_entourages(d1, d1) == d2);
  const auto diag = Entourage::diagonal(p);
  CHECK(compose_entourages(d2, diag) == d2);
  CHECK(r_diagonal(p, 2).subset_of(compose_entourages(d1, d2)));
  CHECK(d1.symmetric());
  CHECK(d1.contains_diagonal());
}

TEST_CASE("composition matches pairwise enumeration and is associative") {
  const auto space = testing::graph_space({{10, testing::cycle_edges(10)}, {6, testing::path_edges(6)}});
  std::mt19937_64 rng(3);
  std::bernoulli_distribution keep(0.25);
  auto random_entourage = [&] {
    std::vector<std::vector<Edge>> pairs(space->component_count());
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      const PointId n = space->component(c).size();
      for (PointId x = 0; x < n; ++x)
        for (PointId y = 0; y < n; ++y)
          if (keep(rng)) pairs[c].emplace_back(x, y);
    }
    return Entourage::from_pairs(space, pairs);
  };
  for (int trial = 0; trial < 5; ++trial) {
    const auto e = random_entourage(), f = random_entourage(), g = random_entourage();
    const auto ef = compose_entourages(e, f);
    for (std::size_t c = 0; c < space->component_count(); ++c) {
      const PointId n = space->component(c).size();
      for (PointId x = 0; x < n; ++x)
        for (PointId y = 0; y < n; ++y) CHECK(ef.contains(c, x, y) == composed_contains(e, f, c, x, y));
    }
    CHECK(compose_entourages(ef, g) == compose_entourages(e, compose_entourages(f, g)));
  }
}

TEST_CASE("composition rejects mismatched spaces") {
  const auto a = path(3), b = path(3);
  try {
    compose_entourages(r_diagonal(a, 1), r_diagonal(b, 1));
    FAIL("expected SpaceMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSpaceMismatch);
  }
}

TEST_CASE("monogenic check") {
  const auto p = path(9);
  const auto e0 = r_diagonal(p, 1);
  CHECK(check_monogenic(e0, e0, 5) == 1);
  CHECK(check_monogenic(e0, r_diagonal(p, 3), 10) == 3);
  CHECK_FALSE(check_monogenic(Entourage::diagonal(p), r_diagonal(p, 2), 20).has_value());
  const auto c = cycle(11);
  for (int r = 1; r <= c->component(0).diameter(); ++r) {
    CHECK(check_monogenic(r_diagonal(c, 1), r_diagonal(c, r), 20) == r);
  }
}

TEST_CASE("greedy nets") {
  const auto c8 = cycle(8);
  const auto net = extract_net(*c8, 2);
  CHECK(net.inclusion[0] == std::vector<PointId>{0, 2, 4, 6});
  for (PointId i = 0; i < 4; ++i)
    for (PointId j = 0; j < 4; ++j)
      if (i != j) CHECK(net.net->component(0).distance(i, j) >= 2);
  CHECK(net.net->component(0).distance(0, 1) == 2);

  const auto whole = extract_net(*c8, 1);
  CHECK(whole.net->component(0).size() == 8);

  const auto single = testing::graph_space({{1, {}}});
  CHECK(extract_net(*single, 3).net->component(0).size() == 1);

  // separation and maximality on a larger space
  const auto space = testing::graph_space({{30, testing::cycle_edges(30)}, {13, testing::path_edges(13)}});
  for (int r = 1; r <= 5; ++r) {
    const auto n = extract_net(*space, r);
    for (std::size_t c = 0; c < space->component_count(); ++c) {
      const auto& comp = space->component(c);
      const auto& inc = n.inclusion[c];
      for (std::size_t i = 0; i < inc.size(); ++i)
        for (std::size_t j = i + 1; j < inc.size(); ++j) CHECK(comp.distance(inc[i], inc[j]) >= r);
      for (PointId x = 0; x < comp.size(); ++x) {
        bool near = false;
        for (PointId s : inc) near = near || comp.distance(x, s) < r;
        CHECK(near);  // x cannot be added without breaking separation
      }
    }
  }
}

TEST_CASE("amplification metric") {
  const auto c4 = cycle(4);
  const auto a = amplify(*c4, 2);
  CHECK(a->component(0).size() == 8);
  CHECK(a->component(0).distance(0, 4) == 1);   // (0,1) to (0,2)
  CHECK(a->component(0).distance(1, 7) == 3);   // d(1,3) + 1
  const auto same = amplify(*c4, 1);
  for (PointId x = 0; x < 4; ++x)
    for (PointId y = 0; y < 4; ++y) CHECK(same->component(0).distance(x, y) == c4->component(0).distance(x, y));
  const auto single = testing::graph_space({{1, {}}});
  const auto line = amplify(*single, 3);
  CHECK(line->component(0).size() == 3);
  CHECK(line->component(0).diameter() == 2);
}

TEST_CASE("family-level ball profile") {
  const auto space = testing::graph_space({{5, testing::path_edges(5)}, {9, testing::cycle_edges(9)}});
  CHECK(space->total_points() == 14);
  CHECK(space->offset(1) == 5);
  CHECK(space->max_ball(1) == 3);
  CHECK(space->max_ball(2) == 5);
}
