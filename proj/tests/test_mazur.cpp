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

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "roekit/error.hpp"
#include "roekit/mazur.hpp"

using namespace roekit;

namespace {

std::vector<Complex> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> v(n);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

SignedPermutationIsometry rotation(PointId n, PointId shift) {
  SignedPermutationIsometry v;
  v.sigma.resize(1);
  v.h.assign(1, std::vector<Complex>(static_cast<std::size_t>(n), 1.0));
  for (PointId x = 0; x < n; ++x) v.sigma[0].push_back((x + shift) % n);
  return v;
}

}  // namespace

TEST_CASE("mazur map") {
  std::mt19937_64 rng(3);
  const auto f = random_vector(9, rng);
  CHECK(max_diff(mazur_map(f, 2.5, 2.5), f) <= 1e-15);

  const std::vector<Complex> delta{0.0, 1.0, 0.0};
  CHECK(mazur_map(delta, 1.5, 4.0) == delta);

  // sign(0) = 0 and phases survive
  const std::vector<Complex> z{0.0, Complex(0.0, -4.0)};
  const auto mz = mazur_map(z, 1.0, 2.0);
  CHECK(mz[0] == Complex(0.0));
  CHECK(std::abs(mz[1] - Complex(0.0, -2.0)) <= 1e-15);

  for (double p : {1.5, 3.0, 4.0}) {
    const double s = std::pow(2.0, -1.0 / p);
    const auto m = mazur_map(std::vector<Complex>{s, s}, p, 2.0);
    CHECK(m[0].real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(m[1].real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  }

  const double ps[] = {1.5, 2.0, 3.0, 4.0};
  for (double p : ps) {
    for (double q : ps) {
      for (int t = 0; t < 20; ++t) {
        const auto v = random_vector(16, rng);
        CHECK(max_diff(mazur_map(mazur_map(v, p, q), q, p), v) <= 1e-12);
        // ||M_{p,q} f||_q = ||f||_p^{p/q}
        CHECK(lp_norm(mazur_map(v, p, q), q) == doctest::Approx(std::pow(lp_norm(v, p), p / q)).epsilon(1e-12));
      }
    }
  }

  CHECK_THROWS_AS(mazur_map(f, 0.5, 2.0), Error);
  CHECK_THROWS_AS(mazur_map(f, 2.0, INFINITY), Error);
  try {
    mazur_map(f, 2.0, 0.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidExponent);
  }
}

TEST_CASE("signed permutations") {
  const auto space = testing::cycle(4);
  const auto id = SignedPermutationIsometry::identity(*space);
  const std::vector<Complex> f{1.0, 2.0, 3.0, 4.0};
  CHECK(id.apply(f, 0) == f);

  const auto r = rotation(4, 1);
  // (V f)(x) = f(x - 1)
  CHECK(r.apply(f, 0) == std::vector<Complex>{4.0, 1.0, 2.0, 3.0});

  auto bad = r;
  bad.h[0][2] = 0.5;
  CHECK_THROWS_AS(bad.validate(), Error);
  auto dup = r;
  dup.sigma[0][0] = dup.sigma[0][1];
  CHECK_THROWS_AS(dup.validate(), Error);
}

TEST_CASE("conjugation returns the same isometry") {
  const auto space = testing::cycle(4);
  const auto id = conjugate_isometry(SignedPermutationIsometry::identity(*space), 2.0, 100, 1);
  CHECK(id.op == SignedPermutationIsometry::identity(*space));
  CHECK(id.linearity_defect == 0.0);

  const auto shift = rotation(4, 1);
  const auto c = conjugate_isometry(shift, 3.0, 100, 2);
  CHECK(c.op.sigma == shift.sigma);
  CHECK(max_diff(c.op.h[0], shift.h[0]) <= 1e-12);
  CHECK(c.linearity_defect < 1e-12);
  CHECK(c.action_defect < 1e-12);
  CHECK(c.samples >= 100);

  auto flip = SignedPermutationIsometry::identity(*space);
  flip.h[0][1] = -1.0;
  const auto cf = conjugate_isometry(flip, 1.5, 100, 3);
  CHECK(cf.op.sigma == flip.sigma);
  CHECK(max_diff(cf.op.h[0], flip.h[0]) <= 1e-12);
  CHECK(cf.linearity_defect < 1e-12);

  // complex phases
  auto phased = rotation(4, 3);
  for (std::size_t x = 0; x < 4; ++x) phased.h[0][x] = std::polar(1.0, 0.7 * static_cast<double>(x));
  const auto cp = conjugate_isometry(phased, 4.0, 100, 4);
  CHECK(max_diff(cp.op.h[0], phased.h[0]) <= 1e-12);
  CHECK(cp.linearity_defect < 1e-12);
}

TEST_CASE("decay vector and translation defect") {
  const auto p = testing::path(11);
  const auto f = decay_vector(*p, 0, 0, 5.0);
  REQUIRE(f.size() == 11);
  CHECK(f[0] == doctest::Approx(0.2));
  CHECK(f[10] == doctest::Approx(1.0 / 15.0));
  for (double v : f) CHECK((v > 0.0 && v <= 0.2));

  // V moves x to x + 1: defect |f(x) - f(x + 1)|, largest next to x0
  std::vector<Edge> pairs;
  for (PointId x = 0; x + 1 < 11; ++x) pairs.emplace_back(x + 1, x);
  const PartialTranslation v(p, {pairs});
  CHECK(translation_defect(v, 0, f) == doctest::Approx(1.0 / 5.0 - 1.0 / 6.0));
  const PartialTranslation none(p, {{}});
  CHECK(translation_defect(none, 0, f) == 0.0);
}

TEST_CASE("c0 almost invariant vectors") {
  const auto p = testing::path(11);  // diameter 10
  const auto r = almost_invariant_c0(*p, 0, 0, 5.0, 1, 1000, 1);
  CHECK(r.exhaustive);
  CHECK(r.pass());
  CHECK(r.max_defect <= 1.0 / 25.0);
  CHECK(r.max_defect == doctest::Approx(1.0 / 30.0));
  CHECK(r.quotient_lower == doctest::Approx(10.0 / (2.0 * 5.0 * 15.0)));

  const auto r0 = almost_invariant_c0(*p, 0, 0, 5.0, 0, 1000, 1);
  CHECK(r0.max_defect == 0.0);

  const auto cyc = testing::cycle(64);
  std::vector<double> ks, ds;
  for (double k : {4.0, 8.0, 16.0, 32.0, 64.0}) {
    const auto c = almost_invariant_c0(*cyc, 0, 0, k, 1, 1000, 1);
    CHECK(c.exhaustive);
    CHECK(c.pass());
    ks.push_back(k);
    ds.push_back(c.max_defect);
  }
  CHECK(std::abs(log_log_slope(ks, ds) + 2.0) <= 0.1);

  for (int radius = 2; radius <= 4; ++radius) CHECK(almost_invariant_c0(*cyc, 0, 5, 7.0, radius, 1000, 1).pass());

  const std::vector<double> x{1, 2, 4}, y{1, 0.25, 0.0625};
  CHECK(log_log_slope(x, y) == doctest::Approx(-2.0));
}

TEST_CASE("transfer defect") {
  const auto space = testing::cycle(64);
  const auto id = SignedPermutationIsometry::identity(*space);
  std::mt19937_64 rng(5);
  const auto xi = random_vector(64, rng);
  const auto [dp0, d20] = transfer_defect(xi, id, 0, 3.0);
  CHECK(dp0 == 0.0);
  CHECK(d20 == 0.0);

  const auto rot = rotation(64, 1);
  const std::vector<Complex> flat(64, 1.0);
  const auto [dpf, d2f] = transfer_defect(flat, rot, 0, 1.5);
  CHECK(dpf == 0.0);
  CHECK(d2f == 0.0);

  double prev = INFINITY;
  for (double k : {8.0, 16.0, 32.0}) {
    const auto f = decay_vector(*space, 0, 0, k);
    const std::vector<Complex> fc(f.begin(), f.end());
    const auto [dp, d2] = transfer_defect(fc, rot, 0, 3.0);
    CHECK(dp > 0.0);
    CHECK(d2 < prev);
    prev = d2;
  }
}

TEST_CASE("suite") {
  const std::vector<double> ps{1.5, 2.0, 3.0};
  const auto s = mazur_suite(ps, 1);
  CHECK(s.passed());
  bool seen_slope = false;
  for (const auto& row : s.rows) {
    if (row.assertion) CHECK_MESSAGE(row.pass, row.experiment);
    seen_slope |= row.experiment == "c0_slope";
  }
  CHECK(seen_slope);
  const auto again = mazur_suite(ps, 1);
  REQUIRE(again.rows.size() == s.rows.size());
  for (std::size_t i = 0; i < s.rows.size(); ++i) CHECK(again.rows[i].defect_p == s.rows[i].defect_p);
}
