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

#ifndef ROEKIT_TRANSLATION_HPP
#define ROEKIT_TRANSLATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "roekit/space.hpp"

namespace roekit {

/// A full partial translation: a permutation of every component.
/// images[c][y] = A(y), so the operator has entry 1 at (A(y), y).
struct FullTranslation {
  std::vector<std::vector<PointId>> images;

  static FullTranslation identity(const SpaceFamily& space);

  PointId operator()(std::size_t c, PointId y) const { return images[c][y]; }
  FullTranslation inverse() const;
  bool is_identity() const;
  bool operator==(const FullTranslation&) const = default;
};

/// (a ∘ b)(y) = a(b(y)).
FullTranslation compose(const FullTranslation& a, const FullTranslation& b);

struct SystemCheck {
  bool bijective = true;
  bool supported = true;
  bool covering = true;
  std::string detail;

  bool ok() const noexcept { return bijective && supported && covering; }
};

/// Ordered family A_0, ..., A_n of full translations whose graphs lie in,
/// and jointly cover, the generating entourage E0. A_0 is the identity.
class FullTranslationSystem {
 public:
  FullTranslationSystem(Entourage e0, std::vector<FullTranslation> translations);

  const SpacePtr& space() const noexcept { return e0_.space(); }
  const Entourage& e0() const noexcept { return e0_; }
  std::size_t size() const noexcept { return translations_.size(); }
  const FullTranslation& operator[](std::size_t i) const { return translations_.at(i); }
  const std::vector<FullTranslation>& translations() const noexcept { return translations_; }
  bool inverse_closed() const noexcept { return inverse_closed_; }

  /// Exhaustive bijectivity, support and cover check.
  SystemCheck check() const;

  /// Lowest index i with A_i(y) = x.
  std::optional<std::size_t> route(std::size_t c, PointId x, PointId y) const;

 private:
  Entourage e0_;
  std::vector<FullTranslation> translations_;
  bool inverse_closed_ = false;
};

/// All products A_{i_1}...A_{i_k} with k = power, first occurrence kept,
/// over E0^{∘power}. Used when an operator's support exceeds E0.
FullTranslationSystem raise_system(const FullTranslationSystem& system, int power);

}  // namespace roekit

#endif  // ROEKIT_TRANSLATION_HPP
