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

// Dense Eigen oracles kept apart from the sparse kernels.
#include <Eigen/Dense>

#include <cmath>

#include "roekit/error.hpp"
#include "roekit/spectral.hpp"

namespace roekit {
namespace {

Eigen::MatrixXd dense_shifted(const MarkovOperator& a, std::size_t c) {
  const auto& b = a.block(c);
  const auto m = static_cast<Eigen::Index>(b.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(m, m, -1.0 / static_cast<double>(m));
  for (Eigen::Index x = 0; x < m; ++x) {
    for (auto k = b.offsets[x]; k < b.offsets[x + 1]; ++k) d(x, b.cols[k]) += b.values[k];
  }
  return d;
}

}  // namespace

double dense_restricted_norm(const MarkovOperator& a, std::size_t c) {
  if (a.block(c).size() <= 1) return 0.0;
  const Eigen::MatrixXd d = dense_shifted(a, c);
  if (a.symmetric()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(d);
  return svd.singularValues()(0);
}

AmplifiedCheck amplified_invariants_check(const MarkovOperator& a, std::int32_t copies) {
  if (copies < 1) raise(ErrorCode::kOutOfRange, "copies must be positive");
  const auto& space = *a.space();
  const auto& system = a.system();
  AmplifiedCheck check;
  check.expected = space.component_count();
  check.diagonal_constants = true;
  for (std::size_t c = 0; c < space.component_count(); ++c) {
    const Eigen::Index m = space.component(c).size();
    const Eigen::Index dim = m * copies;
    // sum over generators G of (I - G)^T (I - G); its kernel is the common
    // fixed space of the block translations and the copy shift
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(dim, dim);
    auto add = [&](auto&& image) {
      Eigen::MatrixXd g = Eigen::MatrixXd::Identity(dim, dim);
      for (Eigen::Index y = 0; y < dim; ++y) g(image(y), y) -= 1.0;
      gram.noalias() += g.transpose() * g;
    };
    for (const auto& t : system.translations()) {
      add([&](Eigen::Index y) {
        const Eigen::Index copy = y / m, x = y % m;
        return copy * m + t(c, static_cast<PointId>(x));
      });
    }
    add([&](Eigen::Index y) { return ((y / m + 1) % copies) * m + y % m; });

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    for (Eigen::Index k = 0; k < dim; ++k) {
      if (es.eigenvalues()(k) > 1e-9) continue;
      ++check.dimension;
      const auto v = es.eigenvectors().col(k);
      const double spread = v.maxCoeff() - v.minCoeff();
      if (spread > 1e-8) check.diagonal_constants = false;
    }
  }
  return check;
}

}  // namespace roekit
