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

#include <set>

#include "roekit/error.hpp"
#include "roekit/group.hpp"

using namespace roekit;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("Z/4 with +-1 gives a 4-cycle and three permutations") {
  const auto f = generate_family(parse_family_descriptor("cyclic:4"), kDefaultBudget);
  REQUIRE(f.space->component_count() == 1);
  CHECK(f.space->component(0).size() == 4);
  CHECK(f.space->component(0).diameter() == 2);
  CHECK(f.system.size() == 3);
  CHECK(f.system[0].is_identity());
  CHECK(f.system.inverse_closed());
  CHECK(f.system.check().ok());
}

TEST_CASE("trivial group") {
  const auto g = cayley_component(cyclic_group(1), {});
  CHECK(g.component.size() == 1);
  CHECK(g.translations.size() == 1);
}

TEST_CASE("SL2(Z/p) orders and degree") {
  for (auto [p, order] : std::vector<std::pair<int, int>>{{3, 24}, {5, 120}, {7, 336}, {13, 2184}}) {
    const auto f = sl2_family({p}, kDefaultBudget);
    CHECK(f.space->component(0).size() == order);
    CHECK(f.system.size() == 5);
    CHECK(f.space->component(0).max_ball(1) <= 5);
  }
  CHECK(code_of([] { sl2_family({4}, kDefaultBudget); }) == ErrorCode::kNotPrime);
  CHECK(code_of([] { sl2_family({2}, kDefaultBudget); }) == ErrorCode::kNotPrime);
  CHECK(code_of([] { sl2_family({11, 13}, 1000); }) == ErrorCode::kBudgetExceeded);
}

TEST_CASE("box spaces") {
  const auto f = generate_family(parse_family_descriptor("cyclic:2,4,8"), kDefaultBudget);
  REQUIRE(f.space->component_count() == 3);
  CHECK(f.space->component(0).size() == 2);
  CHECK(f.space->component(1).size() == 4);
  CHECK(f.space->component(2).size() == 8);

  const auto t = generate_family(parse_family_descriptor("torus:d=2:2,4,8"), kDefaultBudget);
  CHECK(t.space->component(2).size() == 64);
  CHECK(t.system.size() == 5);
  CHECK(t.space->component(2).diameter() == 8);

  const auto one = generate_family(parse_family_descriptor("cyclic:1"), kDefaultBudget);
  CHECK(one.space->component(0).size() == 1);

  CHECK(code_of([] { generate_family(parse_family_descriptor("cyclic:4,6"), kDefaultBudget); }) ==
        ErrorCode::kInvalidFiltration);
  CHECK(code_of([] { generate_family(parse_family_descriptor("cyclic:8,4"), kDefaultBudget); }) ==
        ErrorCode::kInvalidFiltration);
}

TEST_CASE("family invariants") {
  for (const char* d : {"cyclic:4,8,16,32", "torus:d=2:3,6,12", "sl2:3,5,7", "dihedral:3,4,5", "symmetric:n=3,4"}) {
    CAPTURE(d);
    const auto f = generate_family(parse_family_descriptor(d), kDefaultBudget);
    const auto check = f.system.check();
    CHECK(check.bijective);
    CHECK(check.supported);
    CHECK(check.covering);
    // diameters grow along nested box spaces
    if (f.spec.kind == GroupKind::kCyclic || f.spec.kind == GroupKind::kTorus) {
      for (std::size_t c = 1; c < f.space->component_count(); ++c) {
        CHECK(f.space->component(c).diameter() >= f.space->component(c - 1).diameter());
      }
    }
    // left invariance d(gx, gy) = d(x, y), exhaustive on small components
    for (std::size_t c = 0; c < f.cayley.size(); ++c) {
      const auto& g = f.cayley[c];
      const PointId n = g.component.size();
      if (n > 64) continue;
      for (PointId a = 0; a < n; ++a) {
        for (PointId x = 0; x < n; ++x) {
          const PointId gx = g.index_of(g.group.multiply(g.elements[a], g.elements[x]));
          for (PointId y = 0; y < n; ++y) {
            const PointId gy = g.index_of(g.group.multiply(g.elements[a], g.elements[y]));
            CHECK(g.component.distance(gx, gy) == g.component.distance(x, y));
          }
        }
      }
    }
  }
}

TEST_CASE("degree equals the generator count on large enough quotients") {
  const auto f = generate_family(parse_family_descriptor("cyclic:4,8,16"), kDefaultBudget);
  for (const auto& comp : f.space->components()) CHECK(comp.max_ball(1) - 1 == 2);
  const auto s = sl2_family({5, 7}, kDefaultBudget);
  for (const auto& comp : s.space->components()) CHECK(comp.max_ball(1) - 1 == 4);
}

TEST_CASE("generator validation") {
  const auto z5 = cyclic_group(5);
  CHECK(code_of([&] { cayley_component(z5, {{1}}); }) == ErrorCode::kNonSymmetricGenerators);
  CHECK(code_of([&] { cayley_component(cyclic_group(6), {{2}, {4}}); }) == ErrorCode::kNotGenerating);
}

TEST_CASE("descriptor parsing") {
  const auto t = parse_family_descriptor("torus:d=3:2,4");
  CHECK(t.kind == GroupKind::kTorus);
  CHECK(t.dimension == 3);
  CHECK(t.sizes == std::vector<std::int32_t>{2, 4});
  CHECK(parse_family_descriptor("torus:4,8").dimension == 2);
  CHECK(parse_family_descriptor("symmetric:n=4,5").sizes == std::vector<std::int32_t>{4, 5});
  for (const char* d : {"cyclic:2,4,8", "torus:d=2:4,8,16", "sl2:3,5,7", "dihedral:3,4", "symmetric:n=4,5"}) {
    CHECK(format_family_descriptor(parse_family_descriptor(d)) == d);
  }
  for (const char* bad : {"", "cyclic:", "cyclic:4,,8", "blob:3", "torus:d=x:4", "sl2:3;5"}) {
    CAPTURE(bad);
    CHECK(code_of([&] { parse_family_descriptor(bad); }) == ErrorCode::kParse);
  }
}
