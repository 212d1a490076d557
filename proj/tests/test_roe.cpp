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
#include "roekit/roe.hpp"
#include "roekit/translation.hpp"

using namespace roekit;

namespace {

using Entries = std::vector<std::vector<Triplet>>;

FullTranslation rotation(PointId n, PointId step) {
  FullTranslation t;
  t.images.emplace_back(n);
  for (PointId y = 0; y < n; ++y) t.images[0][y] = ((y + step) % n + n) % n;
  return t;
}

using DenseC = std::vector<std::vector<Complex>>;

DenseC dense(const RoeOperator& t, std::size_t c) {
  const PointId n = t.space()->component(c).size();
  DenseC d(n, std::vector<Complex>(n));
  for (const auto& e : t.triplets(c)) d[e.row][e.col] = e.value;
  return d;
}

DenseC dense_mul(const DenseC& a, const DenseC& b) {
  const auto n = a.size();
  DenseC r(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

RoeOperator random_operator(const SpacePtr& space, std::int32_t radius, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::bernoulli_distribution keep(0.4);
  std::vector<std::vector<Triplet>> entries(space->component_count());
  for (std::size_t c = 0; c < entries.size(); ++c) {
    const auto& comp = space->component(c);
    for (PointId x = 0; x < comp.size(); ++x)
      for (PointId y = 0; y < comp.size(); ++y)
        if (comp.distance(x, y) <= radius && keep(rng)) entries[c].push_back({x, y, {normal(rng), normal(rng)}});
  }
  return RoeOperator(space, entries);
}

}  // namespace

TEST_CASE("products") {
  const auto c4 = testing::cycle(4);
  const auto v = RoeOperator::from_translation(c4, rotation(4, 1));
  CHECK(max_abs_difference(v * RoeOperator::identity(c4), v) == 0.0);
  const auto v2 = v * v;
  CHECK(max_abs_difference(v2, RoeOperator::from_translation(c4, rotation(4, 2))) == 0.0);
  CHECK(v2.propagation() == 2);

  // chi_B V keeps the rows in B
  const DiagonalFunction chi(c4, {{1.0, 0.0, 1.0, 0.0}});
  const auto restricted = chi * v;
  for (const auto& e : restricted.triplets(0)) CHECK((e.row == 0 || e.row == 2));
  CHECK(restricted.nnz() == 2);
}

TEST_CASE("random products agree with dense multiplication") {
  const auto space = testing::graph_space({{9, testing::cycle_edges(9)}, {7, testing::path_edges(7)}});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = random_operator(space, 1, rng), s = random_operator(space, 2, rng);
    const auto ts = t * s;
    CHECK(ts.propagation() <= t.propagation() + s.propagation());
    CHECK((t + s).propagation() <= std::max(t.propagation(), s.propagation()));
    for (std::size_t c = 0; c < space->component_count(); ++c) {
      const auto ref = dense_mul(dense(t, c), dense(s, c));
      const auto got = dense(ts, c);
      for (std::size_t i = 0; i < ref.size(); ++i)
        for (std::size_t j = 0; j < ref.size(); ++j) CHECK(std::abs(ref[i][j] - got[i][j]) <= 1e-12);
    }
    // (TS)* = S* T*
    CHECK(max_abs_difference(adjoint(ts), adjoint(s) * adjoint(t)) <= 1e-12);
    CHECK(max_abs_difference(adjoint(adjoint(t)), t) == 0.0);
    // Phi is linear
    const Complex a{0.5, -1.0}, b{2.0, 0.25};
    const auto lhs = phi(combine(t, s, a, b));
    const auto rhs = phi(t) * a;
    auto expected = rhs;
    expected += phi(s) * b;
    for (std::size_t c = 0; c < space->component_count(); ++c)
      for (std::size_t x = 0; x < lhs.values(c).size(); ++x)
        CHECK(std::abs(lhs(c, static_cast<PointId>(x)) - expected(c, static_cast<PointId>(x))) <= 1e-12);
  }
}

TEST_CASE("adjoints") {
  const auto c5 = testing::cycle(5);
  const auto a = RoeOperator::from_translation(c5, rotation(5, 1));
  const auto id = RoeOperator::identity(c5);
  CHECK(max_abs_difference(adjoint(a), RoeOperator::from_translation(c5, rotation(5, -1))) == 0.0);
  CHECK(max_abs_difference(adjoint(a) * a, id) == 0.0);
  CHECK(max_abs_difference(a * adjoint(a), id) == 0.0);
  const auto sym = a + adjoint(a);
  CHECK(sym.is_self_adjoint());
  const auto di = RoeOperator::diagonal(DiagonalFunction::constant(c5, Complex(0.0, 1.0)));
  CHECK(max_abs_difference(adjoint(di), RoeOperator::diagonal(DiagonalFunction::constant(c5, Complex(0.0, -1.0)))) == 0.0);
}

TEST_CASE("phi") {
  const auto c4 = testing::cycle(4);
  const auto one = phi(RoeOperator::from_translation(c4, rotation(4, 1)));
  for (PointId x = 0; x < 4; ++x) CHECK(one(0, x) == Complex(1.0));
  const auto zero = phi(RoeOperator::zero(c4));
  CHECK(zero.sup_norm() == 0.0);
  const auto p2 = testing::path(2);
  const RoeOperator t(p2, Entries{{{0, 0, 1.0}, {0, 1, 2.0}, {1, 1, 0.5}}});
  const auto rows = phi(t);
  CHECK(rows(0, 0) == Complex(3.0));
  CHECK(rows(0, 1) == Complex(0.5));
}

TEST_CASE("partial translations and operators") {
  const auto p5 = testing::path(5);
  std::vector<std::vector<Edge>> shift{{{1, 0}, {2, 1}, {3, 2}, {4, 3}}};
  const PartialTranslation v(p5, shift);
  const auto op = pt_to_operator(v);
  CHECK(op.nnz() == 4);
  for (const auto& e : op.triplets(0)) CHECK(e.row == e.col + 1);
  const auto back = operator_to_pt(op);
  REQUIRE(back.has_value());
  CHECK(back->pairs(0) == v.pairs(0));
  // Phi(V) is the indicator of the range
  const auto f = phi(op);
  CHECK(f.is_indicator());
  for (PointId x = 0; x < 5; ++x) CHECK(f(0, x) == Complex(x == 0 ? 0.0 : 1.0));

  const PartialTranslation id(p5, {{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}}});
  CHECK(max_abs_difference(pt_to_operator(id), RoeOperator::identity(p5)) == 0.0);
  const RoeOperator two(p5, Entries{{{0, 0, 2.0}}});
  CHECK_FALSE(operator_to_pt(two).has_value());
  CHECK_THROWS_AS(PartialTranslation(p5, {{{0, 1}, {0, 2}}}), Error);
}

TEST_CASE("l1 upper bound by routing") {
  const auto c4 = testing::cycle(4);
  std::vector<FullTranslation> ts{FullTranslation::identity(*c4), rotation(4, 1), rotation(4, -1)};
  const FullTranslationSystem system(r_diagonal(c4, 1), ts);
  CHECK(l1_norm_upper(RoeOperator::from_translation(c4, ts[1]), system) == doctest::Approx(1.0));
  CHECK(l1_norm_upper(2.0 * RoeOperator::identity(c4), system) == doctest::Approx(2.0));
  const auto sum = RoeOperator::from_translation(c4, ts[1]) + RoeOperator::from_translation(c4, ts[2]);
  CHECK(l1_norm_upper(sum, system) == doctest::Approx(2.0));
  const auto far = RoeOperator::from_translation(c4, rotation(4, 2));
  try {
    l1_norm_upper(far, system);
    FAIL("expected SupportNotCovered");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSupportNotCovered);
  }
  // submultiplicativity of the routing bound is a diagnostic only
  const auto raised = raise_system(system, 2);
  std::mt19937_64 rng(2);
  int violations = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = random_operator(c4, 1, rng), s = random_operator(c4, 1, rng);
    if (l1_norm_upper(t * s, raised) > l1_norm_upper(t, raised) * l1_norm_upper(s, raised) + 1e-12) ++violations;
  }
  MESSAGE("routing-bound submultiplicativity violations: " << violations << "/20");
}

TEST_CASE("apply") {
  const auto c6 = testing::cycle(6);
  std::vector<Complex> v{1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
  CHECK(apply(RoeOperator::identity(c6), v, 0) == v);
  std::vector<std::vector<Triplet>> ones(1);
  for (PointId x = 0; x < 6; ++x)
    for (PointId y = 0; y < 6; ++y) ones[0].push_back({x, y, 1.0});
  const auto sums = apply(RoeOperator(c6, ones), v, 0);
  for (const auto& s : sums) CHECK(s == Complex(21.0));
  std::vector<Complex> delta(6);
  delta[2] = 1.0;
  const auto moved = apply(RoeOperator::from_translation(c6, rotation(6, 1)), delta, 0);
  CHECK(moved[3] == Complex(1.0));
  CHECK_THROWS_AS(apply(RoeOperator::identity(c6), std::vector<Complex>(5), 0), Error);
}

TEST_CASE("tiny entries are dropped") {
  const auto p2 = testing::path(2);
  const RoeOperator t(p2, Entries{{{0, 0, 1.0}, {0, 0, -1.0 + 1e-17}, {1, 0, 1.0}}});
  CHECK(t.nnz() == 1);
  CHECK(t.propagation() == 1);
}
