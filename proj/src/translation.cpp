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

#include "roekit/translation.hpp"

#include <algorithm>
#include <numeric>

#include "roekit/error.hpp"

namespace roekit {

FullTranslation FullTranslation::identity(const SpaceFamily& space) {
  FullTranslation t;
  for (const auto& comp : space.components()) {
    std::vector<PointId> image(static_cast<std::size_t>(comp.size()));
    std::iota(image.begin(), image.end(), 0);
    t.images.push_back(std::move(image));
  }
  return t;
}

FullTranslation FullTranslation::inverse() const {
  FullTranslation inv;
  for (const auto& image : images) {
    std::vector<PointId> back(image.size());
    for (std::size_t y = 0; y < image.size(); ++y) back[image[y]] = static_cast<PointId>(y);
    inv.images.push_back(std::move(back));
  }
  return inv;
}

bool FullTranslation::is_identity() const {
  for (const auto& image : images) {
    for (std::size_t y = 0; y < image.size(); ++y) {
      if (image[y] != static_cast<PointId>(y)) return false;
    }
  }
  return true;
}

FullTranslation compose(const FullTranslation& a, const FullTranslation& b) {
  if (a.images.size() != b.images.size()) raise(ErrorCode::kSpaceMismatch, "translation shapes differ");
  FullTranslation out;
  for (std::size_t c = 0; c < a.images.size(); ++c) {
    std::vector<PointId> image(b.images[c].size());
    for (std::size_t y = 0; y < image.size(); ++y) image[y] = a.images[c][b.images[c][y]];
    out.images.push_back(std::move(image));
  }
  return out;
}

FullTranslationSystem::FullTranslationSystem(Entourage e0,
                                             std::vector<FullTranslation> translations)
    : e0_(std::move(e0)), translations_(std::move(translations)) {
  if (translations_.empty()) raise(ErrorCode::kEmptySystem, "a system needs at least the identity");
  const auto& space = *e0_.space();
  for (const auto& t : translations_) {
    if (t.images.size() != space.component_count()) {
      raise(ErrorCode::kSpaceMismatch, "translation component count differs from space");
    }
    for (std::size_t c = 0; c < t.images.size(); ++c) {
      if (t.images[c].size() != static_cast<std::size_t>(space.component(c).size())) {
        raise(ErrorCode::kSpaceMismatch, "translation size differs on component " + std::to_string(c));
      }
    }
  }
  inverse_closed_ = std::all_of(translations_.begin(), translations_.end(), [&](const auto& t) {
    auto inv = t.inverse();
    return std::find(translations_.begin(), translations_.end(), inv) != translations_.end();
  });
}

SystemCheck FullTranslationSystem::check() const {
  SystemCheck result;
  const auto& space = *e0_.space();
  for (std::size_t i = 0; i < translations_.size(); ++i) {
    for (std::size_t c = 0; c < space.component_count(); ++c) {
      const auto& image = translations_[i].images[c];
      std::vector<char> hit(image.size(), 0);
      for (std::size_t y = 0; y < image.size(); ++y) {
        const PointId x = image[y];
        if (x < 0 || static_cast<std::size_t>(x) >= image.size() || hit[x]) {
          result.bijective = false;
          result.detail = "A_" + std::to_string(i) + " is not a bijection on component " +
                          std::to_string(c);
          return result;
        }
        hit[x] = 1;
        if (!e0_.contains(c, x, static_cast<PointId>(y))) {
          result.supported = false;
          result.detail = "A_" + std::to_string(i) + " moves " + std::to_string(y) + " to " +
                          std::to_string(x) + " outside E0 on component " + std::to_string(c);
        }
      }
    }
  }
  for (std::size_t c = 0; c < space.component_count() && result.covering; ++c) {
    const PointId n = space.component(c).size();
    for (PointId x = 0; x < n && result.covering; ++x) {
      for (PointId y : e0_.rows(c).row(x)) {
        if (!route(c, x, y)) {
          result.covering = false;
          result.detail = "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") of component " + std::to_string(c) + " is not covered";
          break;
        }
      }
    }
  }
  return result;
}

std::optional<std::size_t> FullTranslationSystem::route(std::size_t c, PointId x,
                                                        PointId y) const {
  for (std::size_t i = 0; i < translations_.size(); ++i) {
    if (translations_[i].images[c][y] == x) return i;
  }
  return std::nullopt;
}

FullTranslationSystem raise_system(const FullTranslationSystem& system, int power) {
  if (power < 1) raise(ErrorCode::kOutOfRange, "system power must be at least 1");
  std::vector<FullTranslation> words = system.translations();
  Entourage e = system.e0();
  for (int k = 1; k < power; ++k) {
    std::vector<FullTranslation> next;
    for (const auto& w : words) {
      for (const auto& a : system.translations()) {
        auto product = compose(w, a);
        if (std::find(next.begin(), next.end(), product) == next.end()) {
          next.push_back(std::move(product));
        }
      }
    }
    words = std::move(next);
    e = compose_entourages(e, system.e0());
  }
  // keep the identity in front
  auto id = std::find_if(words.begin(), words.end(), [](const auto& t) { return t.is_identity(); });
  if (id != words.end()) std::rotate(words.begin(), id, id + 1);
  return FullTranslationSystem(std::move(e), std::move(words));
}

}  // namespace roekit
