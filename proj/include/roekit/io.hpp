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

#ifndef ROEKIT_IO_HPP
#define ROEKIT_IO_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "roekit/decomp.hpp"
#include "roekit/roe.hpp"
#include "roekit/space.hpp"
#include "roekit/translation.hpp"

namespace roekit {

// Line-oriented text formats. Readers throw kParse with "line L, column C".

/// `space v1`, then `component <id> <count>` and `edge <u> <v>` lines.
std::string write_space(const SpaceFamily& space);
SpacePtr read_space(std::string_view text);
/// One `<component> <u> <v>` line per unit edge, both directions.
std::string write_adjacency(const SpaceFamily& space);

/// `system v1`, then per component `component <id>` followed by
/// `perm <i> <comma-separated images>`. E0 is rebuilt as the union of graphs.
std::string write_system(const FullTranslationSystem& system);
FullTranslationSystem read_system(std::string_view text, const SpacePtr& space);
/// E0 = union of the translation graphs.
FullTranslationSystem system_from_translations(const SpacePtr& space, std::vector<FullTranslation> translations);

/// `roeop v1`, lines `entry <component> <row> <col> <re> <im>`.
std::string write_operator(const RoeOperator& op);
RoeOperator read_operator(std::string_view text, const SpacePtr& space);

/// `pt v1`, lines `pair <component> <x> <y>` meaning t(y) = x.
std::string write_partial_translation(const PartialTranslation& v);
PartialTranslation read_partial_translation(std::string_view text, const SpacePtr& space);

/// `decomp v1`, lines `chi <i> <component> <point>` for chi_i(point) = 1.
std::string write_decomposition(const Decomposition& d);
Decomposition read_decomposition(std::string_view text, const SpacePtr& space, std::size_t terms);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace roekit

#endif  // ROEKIT_IO_HPP
