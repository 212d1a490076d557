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

#ifndef ROEKIT_DECOMP_HPP
#define ROEKIT_DECOMP_HPP

#include <cstddef>
#include <random>
#include <vector>

#include "roekit/group.hpp"
#include "roekit/roe.hpp"
#include "roekit/translation.hpp"

namespace roekit {

/// Disjoint matchings covering the off-diagonal part of an entourage.
struct MatchingCover {
  SpacePtr space;
  /// matchings[j][c]: edges (u < v) of colour j on component c.
  std::vector<std::vector<std::vector<Edge>>> matchings;
  std::size_t max_degree = 0;

  std::size_t color_count() const noexcept { return matchings.size(); }
  /// Greedy colouring never needs more than 2 * maxdeg - 1 colours.
  bool within_greedy_bound() const noexcept {
    return max_degree == 0 ? matchings.empty() : matchings.size() <= 2 * max_degree - 1;
  }
};

/// Greedy proper edge colouring: edges in lexicographic order, each takes
/// the lowest colour free at both endpoints. Requires a symmetric E0.
MatchingCover entourage_matchings(const Entourage& e0);

/// A_0 = identity, A_j = the involution swapping the endpoints of every
/// edge of matching j. E0 must contain the diagonal.
FullTranslationSystem full_system_from_matchings(const MatchingCover& cover, const Entourage& e0);

/// V = sum_i chi_i A_i with 0/1 functions chi_i.
struct Decomposition {
  std::vector<DiagonalFunction> chi;
};

/// Routes each pair (x, y) of V to the lowest A_i with A_i(y) = x.
/// Throws kSupportNotCovered naming the first unroutable pair.
Decomposition decompose(const PartialTranslation& v, const FullTranslationSystem& system);

/// Routes by group arithmetic: the label of y^{-1} x among the generators.
/// Index i of the result matches family.system[i].
Decomposition cayley_decompose(const PartialTranslation& v, const GeneratedFamily& family);

RoeOperator reconstruct(const Decomposition& d, const FullTranslationSystem& system);

struct DecompositionCheck {
  bool reconstructs = false;
  bool disjoint = false;
  bool mass = false;  // sum_i chi_i == Phi(V)

  bool ok() const noexcept { return reconstructs && disjoint && mass; }
};

DecompositionCheck verify_decomposition(const PartialTranslation& v, const Decomposition& d,
                                        const FullTranslationSystem& system);

/// Keeps each E0 pair with a random probability, shuffles, and greedily
/// retains pairs that keep the map injective.
PartialTranslation random_partial_translation(const Entourage& e0, std::mt19937_64& rng);

}  // namespace roekit

#endif  // ROEKIT_DECOMP_HPP
