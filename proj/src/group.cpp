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

#include "roekit/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <string>

#include "roekit/error.hpp"

namespace roekit {
namespace {

std::int32_t mod(std::int64_t a, std::int32_t n) {
  auto r = static_cast<std::int32_t>(a % n);
  return r < 0 ? r + n : r;
}

bool is_prime(std::int32_t p) {
  if (p < 2) return false;
  for (std::int32_t d = 2; static_cast<std::int64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t factorial(std::int32_t n) {
  std::uint64_t f = 1;
  for (std::int32_t k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::vector<GroupElement> default_generators(GroupKind kind, std::int32_t size, std::int32_t dim) {
  switch (kind) {
    case GroupKind::kCyclic:
      return {{mod(1, size)}, {mod(-1, size)}};
    case GroupKind::kTorus: {
      std::vector<GroupElement> gens;
      for (std::int32_t j = 0; j < dim; ++j) {
        GroupElement plus(static_cast<std::size_t>(dim), 0), minus(static_cast<std::size_t>(dim), 0);
        plus[j] = mod(1, size);
        minus[j] = mod(-1, size);
        gens.push_back(plus);
        gens.push_back(minus);
      }
      return gens;
    }
    case GroupKind::kDihedral:
      return {{mod(1, size), 0}, {mod(-1, size), 0}, {0, 1}};
    case GroupKind::kSymmetric: {
      GroupElement swap(static_cast<std::size_t>(size)), cycle(static_cast<std::size_t>(size)),
          back(static_cast<std::size_t>(size));
      std::iota(swap.begin(), swap.end(), 0);
      if (size >= 2) std::swap(swap[0], swap[1]);
      for (std::int32_t i = 0; i < size; ++i) {
        cycle[i] = (i + 1) % size;
        back[i] = (i + size - 1) % size;
      }
      return {swap, cycle, back};
    }
    case GroupKind::kSL2Prime:
      return {{1, 1, 0, 1}, {1, size - 1, 0, 1}, {1, 0, 1, 1}, {1, 0, size - 1, 1}};
  }
  return {};
}

FiniteGroup group_for(GroupKind kind, std::int32_t size, std::int32_t dim) {
  switch (kind) {
    case GroupKind::kCyclic: return cyclic_group(size);
    case GroupKind::kTorus: return torus_group(size, dim);
    case GroupKind::kDihedral: return dihedral_group(size);
    case GroupKind::kSymmetric: return symmetric_group(size);
    case GroupKind::kSL2Prime: return sl2_group(size);
  }
  raise(ErrorCode::kInvalidArgument, "unknown group kind");
}

std::uint64_t order_for(GroupKind kind, std::int32_t size, std::int32_t dim) {
  switch (kind) {
    case GroupKind::kCyclic: return static_cast<std::uint64_t>(size);
    case GroupKind::kTorus: {
      std::uint64_t o = 1;
      for (std::int32_t j = 0; j < dim; ++j) o *= static_cast<std::uint64_t>(size);
      return o;
    }
    case GroupKind::kDihedral: return 2 * static_cast<std::uint64_t>(size);
    case GroupKind::kSymmetric: return size > 20 ? UINT64_MAX : factorial(size);
    case GroupKind::kSL2Prime: {
      const auto p = static_cast<std::uint64_t>(size);
      return p * (p * p - 1);
    }
  }
  return 0;
}

GeneratedFamily assemble(const GroupSpec& spec, std::size_t budget) {
  std::uint64_t total = 0;
  for (auto s : spec.sizes) {
    const auto o = order_for(spec.kind, s, spec.dimension);
    total = (o == UINT64_MAX || total + o < total) ? UINT64_MAX : total + o;
  }
  if (total > budget) {
    raise(ErrorCode::kBudgetExceeded,
          "family needs " + (total == UINT64_MAX ? std::string("too many") : std::to_string(total)) +
              " points, budget is " + std::to_string(budget));
  }
  std::vector<CayleyGraph> graphs;
  std::vector<Component> comps;
  for (auto s : spec.sizes) {
    graphs.push_back(cayley_component(group_for(spec.kind, s, spec.dimension),
                                      default_generators(spec.kind, s, spec.dimension)));
    comps.push_back(graphs.back().component);
  }
  auto space = std::make_shared<const SpaceFamily>(std::move(comps));

  const std::size_t first = spec.include_identity ? 0 : 1;
  const std::size_t labels = graphs.front().translations.size();
  std::vector<FullTranslation> translations(labels - first);
  std::vector<std::vector<Edge>> pairs(graphs.size());
  for (std::size_t c = 0; c < graphs.size(); ++c) {
    for (std::size_t k = first; k < labels; ++k) {
      const auto& image = graphs[c].translations[k];
      translations[k - first].images.push_back(image);
      for (std::size_t y = 0; y < image.size(); ++y) {
        pairs[c].emplace_back(image[y], static_cast<PointId>(y));
      }
    }
  }
  auto e0 = Entourage::from_pairs(space, pairs);
  FullTranslationSystem system(std::move(e0), std::move(translations));
  return GeneratedFamily{spec, space, std::move(system), std::move(graphs)};
}

std::vector<std::int32_t> parse_int_list(std::string_view text, std::size_t column) {
  std::vector<std::int32_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = text.substr(pos, comma - pos);
    std::int32_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      raise(ErrorCode::kParse, "column " + std::to_string(column + pos + 1) +
                                   ": expected an integer, got '" + std::string(item) + "'");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return values;
}

void sl2_family_check(const std::vector<std::int32_t>& primes) {
  if (primes.empty()) raise(ErrorCode::kInvalidArgument, "empty prime list");
  for (auto p : primes) {
    if (!is_prime(p) || p < 3) raise(ErrorCode::kNotPrime, std::to_string(p) + " is not an odd prime");
  }
}

}  // namespace

FiniteGroup cyclic_group(std::int32_t n) {
  if (n < 1) raise(ErrorCode::kInvalidArgument, "cyclic group order must be positive");
  FiniteGroup g;
  g.name = "Z/" + std::to_string(n);
  g.order = static_cast<std::uint64_t>(n);
  g.identity = {0};
  g.multiply = [n](const GroupElement& a, const GroupElement& b) {
    return GroupElement{mod(static_cast<std::int64_t>(a[0]) + b[0], n)};
  };
  g.inverse = [n](const GroupElement& a) { return GroupElement{mod(-a[0], n)}; };
  return g;
}

FiniteGroup torus_group(std::int32_t n, std::int32_t d) {
  if (n < 1 || d < 1) raise(ErrorCode::kInvalidArgument, "torus needs n >= 1 and d >= 1");
  FiniteGroup g;
  g.name = "(Z/" + std::to_string(n) + ")^" + std::to_string(d);
  g.order = order_for(GroupKind::kTorus, n, d);
  g.identity = GroupElement(static_cast<std::size_t>(d), 0);
  g.multiply = [n](const GroupElement& a, const GroupElement& b) {
    GroupElement out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = mod(static_cast<std::int64_t>(a[j]) + b[j], n);
    return out;
  };
  g.inverse = [n](const GroupElement& a) {
    GroupElement out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = mod(-a[j], n);
    return out;
  };
  return g;
}

FiniteGroup dihedral_group(std::int32_t n) {
  if (n < 1) raise(ErrorCode::kInvalidArgument, "dihedral group needs n >= 1");
  FiniteGroup g;
  g.name = "D_" + std::to_string(n);
  g.order = 2 * static_cast<std::uint64_t>(n);
  g.identity = {0, 0};
  // r^a s^b * r^c s^d = r^(a + (-1)^b c) s^(b + d)
  g.multiply = [n](const GroupElement& x, const GroupElement& y) {
    const std::int64_t rot = x[1] ? -static_cast<std::int64_t>(y[0]) : y[0];
    return GroupElement{mod(x[0] + rot, n), (x[1] + y[1]) % 2};
  };
  g.inverse = [n](const GroupElement& x) {
    return x[1] ? x : GroupElement{mod(-x[0], n), 0};
  };
  return g;
}

FiniteGroup symmetric_group(std::int32_t n) {
  if (n < 1 || n > 12) raise(ErrorCode::kInvalidArgument, "symmetric group needs 1 <= n <= 12");
  FiniteGroup g;
  g.name = "S_" + std::to_string(n);
  g.order = factorial(n);
  g.identity = GroupElement(static_cast<std::size_t>(n));
  std::iota(g.identity.begin(), g.identity.end(), 0);
  // (a * b)(i) = a(b(i))
  g.multiply = [](const GroupElement& a, const GroupElement& b) {
    GroupElement out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
    return out;
  };
  g.inverse = [](const GroupElement& a) {
    GroupElement out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::int32_t>(i);
    return out;
  };
  return g;
}

FiniteGroup sl2_group(std::int32_t p) {
  if (!is_prime(p) || p < 3) raise(ErrorCode::kNotPrime, std::to_string(p) + " is not an odd prime");
  FiniteGroup g;
  g.name = "SL2(Z/" + std::to_string(p) + ")";
  g.order = order_for(GroupKind::kSL2Prime, p, 1);
  g.identity = {1, 0, 0, 1};
  g.multiply = [p](const GroupElement& x, const GroupElement& y) {
    auto dot = [p](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
      return mod(a * b + c * d, p);
    };
    return GroupElement{dot(x[0], y[0], x[1], y[2]), dot(x[0], y[1], x[1], y[3]),
                        dot(x[2], y[0], x[3], y[2]), dot(x[2], y[1], x[3], y[3])};
  };
  g.inverse = [p](const GroupElement& x) {
    return GroupElement{x[3], mod(-x[1], p), mod(-x[2], p), x[0]};
  };
  return g;
}

PointId CayleyGraph::index_of(const GroupElement& g) const {
  auto it = std::lower_bound(sorted_index.begin(), sorted_index.end(), g,
                             [](const auto& entry, const GroupElement& key) { return entry.first < key; });
  if (it == sorted_index.end() || it->first != g) return -1;
  return it->second;
}

CayleyGraph cayley_component(const FiniteGroup& group, const std::vector<GroupElement>& generators) {
  std::vector<GroupElement> nontrivial;
  for (const auto& s : generators) {
    if (s != group.identity) nontrivial.push_back(s);
  }
  for (const auto& s : nontrivial) {
    auto inv = group.inverse(s);
    if (std::find(nontrivial.begin(), nontrivial.end(), inv) == nontrivial.end()) {
      raise(ErrorCode::kNonSymmetricGenerators, "inverse of a generator of " + group.name + " is missing");
    }
  }

  std::map<GroupElement, PointId> index;
  std::vector<GroupElement> elements{group.identity};
  index.emplace(group.identity, 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : generators) {
      auto h = group.multiply(elements[head], s);
      if (index.emplace(h, static_cast<PointId>(elements.size())).second) elements.push_back(std::move(h));
    }
  }
  if (elements.size() != group.order) {
    raise(ErrorCode::kNotGenerating, "generators reach " + std::to_string(elements.size()) + " of " +
                                         std::to_string(group.order) + " elements of " + group.name);
  }

  const auto n = static_cast<PointId>(elements.size());
  std::vector<std::vector<PointId>> translations;
  std::vector<PointId> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  translations.push_back(std::move(identity));
  std::vector<Edge> edges;
  for (const auto& s : generators) {
    std::vector<PointId> image(static_cast<std::size_t>(n));
    for (PointId y = 0; y < n; ++y) {
      image[y] = index.at(group.multiply(elements[y], s));
      edges.emplace_back(y, image[y]);
    }
    translations.push_back(std::move(image));
  }

  CayleyGraph graph{group, Component::from_edges(n, edges), std::move(elements), generators,
                    std::move(translations), {}};
  graph.sorted_index.assign(index.begin(), index.end());
  return graph;
}

std::string_view group_kind_name(GroupKind kind) noexcept {
  switch (kind) {
    case GroupKind::kCyclic: return "cyclic";
    case GroupKind::kTorus: return "torus";
    case GroupKind::kDihedral: return "dihedral";
    case GroupKind::kSymmetric: return "symmetric";
    case GroupKind::kSL2Prime: return "sl2";
  }
  return "unknown";
}

GroupSpec parse_family_descriptor(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon + 1 >= text.size()) {
    raise(ErrorCode::kParse, "family descriptor '" + std::string(text) + "' needs kind:sizes");
  }
  const auto kind = text.substr(0, colon);
  auto rest = text.substr(colon + 1);
  std::size_t column = colon + 1;
  GroupSpec spec;
  if (kind == "cyclic") {
    spec.kind = GroupKind::kCyclic;
  } else if (kind == "torus") {
    spec.kind = GroupKind::kTorus;
    if (rest.starts_with("d=")) {
      auto second = rest.find(':');
      if (second == std::string_view::npos) raise(ErrorCode::kParse, "torus descriptor needs d=<dim>:<sizes>");
      spec.dimension = parse_int_list(rest.substr(2, second - 2), column + 2).at(0);
      column += second + 1;
      rest = rest.substr(second + 1);
    } else {
      spec.dimension = 2;
    }
    if (spec.dimension < 1) raise(ErrorCode::kParse, "torus dimension must be positive");
  } else if (kind == "sl2") {
    spec.kind = GroupKind::kSL2Prime;
  } else if (kind == "dihedral") {
    spec.kind = GroupKind::kDihedral;
  } else if (kind == "symmetric") {
    spec.kind = GroupKind::kSymmetric;
    if (rest.starts_with("n=")) {
      rest = rest.substr(2);
      column += 2;
    }
  } else {
    raise(ErrorCode::kParse, "column 1: unknown family kind '" + std::string(kind) + "'");
  }
  spec.sizes = parse_int_list(rest, column);
  return spec;
}

std::string format_family_descriptor(const GroupSpec& spec) {
  std::string out(group_kind_name(spec.kind));
  out += ':';
  if (spec.kind == GroupKind::kTorus) out += "d=" + std::to_string(spec.dimension) + ':';
  if (spec.kind == GroupKind::kSymmetric) out += "n=";
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.sizes[i]);
  }
  return out;
}

GeneratedFamily box_space(const GroupSpec& spec, std::size_t budget) {
  if (spec.kind != GroupKind::kCyclic && spec.kind != GroupKind::kTorus) {
    raise(ErrorCode::kInvalidFiltration, "box spaces are built for Z and Z^d only");
  }
  if (spec.sizes.empty()) raise(ErrorCode::kInvalidArgument, "empty filtration");
  for (std::size_t k = 0; k < spec.sizes.size(); ++k) {
    if (spec.sizes[k] < 1) raise(ErrorCode::kInvalidFiltration, "filtration indices must be positive");
    if (k > 0 && (spec.sizes[k] <= spec.sizes[k - 1] || spec.sizes[k] % spec.sizes[k - 1] != 0)) {
      raise(ErrorCode::kInvalidFiltration,
            std::to_string(spec.sizes[k - 1]) + " -> " + std::to_string(spec.sizes[k]) +
                " is not a strictly nested step (each index must properly divide the next)");
    }
  }
  return assemble(spec, budget);
}

GeneratedFamily sl2_family(const std::vector<std::int32_t>& primes, std::size_t budget) {
  sl2_family_check(primes);
  GroupSpec spec;
  spec.kind = GroupKind::kSL2Prime;
  spec.sizes = primes;
  return assemble(spec, budget);
}

GeneratedFamily generate_family(const GroupSpec& spec, std::size_t budget) {
  switch (spec.kind) {
    case GroupKind::kCyclic:
    case GroupKind::kTorus:
      return box_space(spec, budget);
    case GroupKind::kSL2Prime:
      sl2_family_check(spec.sizes);
      return assemble(spec, budget);
    case GroupKind::kDihedral:
    case GroupKind::kSymmetric:
      if (spec.sizes.empty()) raise(ErrorCode::kInvalidArgument, "empty family list");
      return assemble(spec, budget);
  }
  raise(ErrorCode::kInvalidArgument, "unknown family kind");
}

}  // namespace roekit
