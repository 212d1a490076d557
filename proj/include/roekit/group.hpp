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

#ifndef ROEKIT_GROUP_HPP
#define ROEKIT_GROUP_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "roekit/space.hpp"
#include "roekit/translation.hpp"

namespace roekit {

/// Canonical encoding of a group element: residues, matrix entries mod p,
/// or a permutation in one-line notation.
using GroupElement = std::vector<std::int32_t>;

struct FiniteGroup {
  std::string name;
  std::uint64_t order = 1;
  GroupElement identity;
  std::function<GroupElement(const GroupElement&, const GroupElement&)> multiply;
  std::function<GroupElement(const GroupElement&)> inverse;
};

FiniteGroup cyclic_group(std::int32_t n);
/// (Z/n)^d.
FiniteGroup torus_group(std::int32_t n, std::int32_t d);
/// D_n of order 2n; elements r^a s^b encoded (a, b).
FiniteGroup dihedral_group(std::int32_t n);
FiniteGroup symmetric_group(std::int32_t n);
/// SL_2(Z/p), elements (a, b, c, d) for [[a, b], [c, d]].
FiniteGroup sl2_group(std::int32_t p);

/// Cayley graph of a finite group with right-multiplication translations.
struct CayleyGraph {
  FiniteGroup group;
  Component component;
  std::vector<GroupElement> elements;   // point id -> element
  std::vector<GroupElement> generators; // labels 1..K; label 0 is the identity
  /// translations[k][y] = id of elements[y] * generators[k - 1]; index 0 is identity.
  std::vector<std::vector<PointId>> translations;

  /// (element, point id) sorted by element.
  std::vector<std::pair<GroupElement, PointId>> sorted_index;

  /// Point id of an element; -1 if absent.
  PointId index_of(const GroupElement& g) const;
};

/// Enumerates the group by breadth-first closure from the identity.
/// Throws kNonSymmetricGenerators or kNotGenerating.
CayleyGraph cayley_component(const FiniteGroup& group,
                             const std::vector<GroupElement>& generators);

enum class GroupKind { kCyclic, kTorus, kDihedral, kSymmetric, kSL2Prime };

std::string_view group_kind_name(GroupKind kind) noexcept;

struct GroupSpec {
  GroupKind kind = GroupKind::kCyclic;
  std::vector<std::int32_t> sizes;  // cycle lengths, torus sides, primes, n
  std::int32_t dimension = 1;       // torus only
  bool include_identity = true;
};

/// Parses `cyclic:2,4,8`, `torus:d=2:4,8,16`, `sl2:3,5,7`, `dihedral:3,4`,
/// `symmetric:n=4,5`. Throws kParse.
GroupSpec parse_family_descriptor(std::string_view text);
std::string format_family_descriptor(const GroupSpec& spec);

/// A generated family: space, generator system, and the Cayley data per
/// component (used for label routing).
struct GeneratedFamily {
  GroupSpec spec;
  SpacePtr space;
  FullTranslationSystem system;
  std::vector<CayleyGraph> cayley;
};

/// Box space of Z or Z^d along the filtration given by spec.sizes; the
/// sizes must increase and divide one another. Throws kInvalidFiltration.
GeneratedFamily box_space(const GroupSpec& spec, std::size_t budget);
/// One SL_2(Z/p) Cayley graph per prime. Throws kNotPrime, kBudgetExceeded.
GeneratedFamily sl2_family(const std::vector<std::int32_t>& primes, std::size_t budget);
/// Dispatches on spec.kind.
GeneratedFamily generate_family(const GroupSpec& spec, std::size_t budget);

inline constexpr std::size_t kDefaultBudget = 20000;

}  // namespace roekit

#endif  // ROEKIT_GROUP_HPP
