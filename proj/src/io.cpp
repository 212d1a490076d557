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

#include "roekit/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "roekit/error.hpp"

namespace roekit {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

// Splits text into lines of whitespace-separated tokens, skipping blanks
// and lines starting with '#'.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next() {
    while (pos_ <= text_.size()) {
      if (pos_ == text_.size()) return false;
      auto end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_;
      tokens_.clear();
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens_.push_back({line.substr(start, i - start), start + 1});
      }
      if (!tokens_.empty() && tokens_[0].text[0] != '#') return true;
    }
    return false;
  }

  const std::vector<Token>& tokens() const { return tokens_; }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    raise(ErrorCode::kParse, "line " + std::to_string(line_) + ", column " + std::to_string(column) + ": " + message);
  }

  void expect_arity(std::size_t n) const {
    if (tokens_.size() != n) {
      fail(tokens_.back().column, "expected " + std::to_string(n - 1) + " fields after '" +
                                      std::string(tokens_[0].text) + "'");
    }
  }

  template <typename Int>
  Int integer(std::size_t i) const {
    const auto& t = tokens_.at(i);
    Int value{};
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail(t.column, "expected an integer");
    return value;
  }

  double real(std::size_t i) const {
    const auto& t = tokens_.at(i);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail(t.column, "expected a number");
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
  std::vector<Token> tokens_;
};

void expect_header(LineReader& in, std::string_view kind) {
  if (!in.next()) raise(ErrorCode::kParse, "line 1, column 1: missing '" + std::string(kind) + " v1' header");
  const auto& t = in.tokens();
  if (t.size() != 2 || t[0].text != kind) in.fail(1, "expected '" + std::string(kind) + " v1'");
  if (t[1].text != "v1") in.fail(t[1].column, "unsupported version '" + std::string(t[1].text) + "'");
}

std::size_t component_index(const LineReader& in, std::size_t token, const SpacePtr& space) {
  const auto c = in.integer<std::int64_t>(token);
  if (c < 0 || static_cast<std::size_t>(c) >= space->component_count()) {
    in.fail(in.tokens()[token].column, "component out of range");
  }
  return static_cast<std::size_t>(c);
}

PointId point_index(const LineReader& in, std::size_t token, const SpacePtr& space, std::size_t c) {
  const auto x = in.integer<std::int64_t>(token);
  if (x < 0 || x >= space->component(c).size()) in.fail(in.tokens()[token].column, "point out of range");
  return static_cast<PointId>(x);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string write_space(const SpaceFamily& space) {
  std::ostringstream out;
  out << "space v1\n";
  for (std::size_t c = 0; c < space.component_count(); ++c) {
    const auto& comp = space.component(c);
    out << "component " << c << ' ' << comp.size() << '\n';
    for (const auto& [u, v] : comp.edges()) out << "edge " << u << ' ' << v << '\n';
  }
  return out.str();
}

SpacePtr read_space(std::string_view text) {
  LineReader in(text);
  expect_header(in, "space");
  std::vector<PointId> counts;
  std::vector<std::vector<Edge>> edges;
  while (in.next()) {
    const auto& t = in.tokens();
    if (t[0].text == "component") {
      in.expect_arity(3);
      const auto id = in.integer<std::int64_t>(1);
      if (id != static_cast<std::int64_t>(counts.size())) in.fail(t[1].column, "components must be numbered 0, 1, ...");
      const auto n = in.integer<std::int64_t>(2);
      if (n < 1 || n > (1 << 30)) in.fail(t[2].column, "component needs at least one point");
      counts.push_back(static_cast<PointId>(n));
      edges.emplace_back();
    } else if (t[0].text == "edge") {
      in.expect_arity(3);
      if (counts.empty()) in.fail(1, "edge before any component");
      const auto u = in.integer<std::int64_t>(1), v = in.integer<std::int64_t>(2);
      if (u < 0 || u >= counts.back()) in.fail(t[1].column, "endpoint out of range");
      if (v < 0 || v >= counts.back()) in.fail(t[2].column, "endpoint out of range");
      edges.back().emplace_back(static_cast<PointId>(u), static_cast<PointId>(v));
    } else {
      in.fail(1, "unknown record '" + std::string(t[0].text) + "'");
    }
  }
  if (counts.empty()) raise(ErrorCode::kParse, "space file has no components");
  return build_space_from_edges(counts, edges);
}

std::string write_adjacency(const SpaceFamily& space) {
  std::ostringstream out;
  for (std::size_t c = 0; c < space.component_count(); ++c) {
    for (const auto& [u, v] : space.component(c).edges()) {
      out << c << ' ' << u << ' ' << v << '\n';
      if (u != v) out << c << ' ' << v << ' ' << u << '\n';
    }
  }
  return out.str();
}

FullTranslationSystem system_from_translations(const SpacePtr& space, std::vector<FullTranslation> translations) {
  std::vector<std::vector<Edge>> pairs(space->component_count());
  for (const auto& t : translations) {
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      for (PointId y = 0; y < space->component(c).size(); ++y) pairs[c].emplace_back(t(c, y), y);
    }
  }
  return FullTranslationSystem(Entourage::from_pairs(space, pairs), std::move(translations));
}

std::string write_system(const FullTranslationSystem& system) {
  std::ostringstream out;
  out << "system v1\n";
  const auto& space = *system.space();
  for (std::size_t c = 0; c < space.component_count(); ++c) {
    out << "component " << c << '\n';
    for (std::size_t i = 0; i < system.size(); ++i) {
      out << "perm " << i << ' ';
      const auto& images = system[i].images[c];
      for (std::size_t y = 0; y < images.size(); ++y) out << (y ? "," : "") << images[y];
      out << '\n';
    }
  }
  return out.str();
}

FullTranslationSystem read_system(std::string_view text, const SpacePtr& space) {
  LineReader in(text);
  expect_header(in, "system");
  const std::size_t comps = space->component_count();
  std::vector<FullTranslation> translations;
  std::vector<std::vector<char>> filled;  // [i][c]
  std::optional<std::size_t> current;
  while (in.next()) {
    const auto& t = in.tokens();
    if (t[0].text == "component") {
      in.expect_arity(2);
      current = component_index(in, 1, space);
    } else if (t[0].text == "perm") {
      in.expect_arity(3);
      if (!current) in.fail(1, "perm before any component");
      const auto i = in.integer<std::int64_t>(1);
      if (i < 0 || i > 100000) in.fail(t[1].column, "translation index out of range");
      while (translations.size() <= static_cast<std::size_t>(i)) {
        FullTranslation blank;
        blank.images.resize(comps);
        translations.push_back(std::move(blank));
        filled.emplace_back(comps, 0);
      }
      if (filled[i][*current]) in.fail(t[1].column, "duplicate perm for this component");
      filled[i][*current] = 1;
      const PointId m = space->component(*current).size();
      auto& images = translations[i].images[*current];
      std::string_view list = t[2].text;
      std::size_t pos = 0;
      while (pos <= list.size()) {
        auto comma = list.find(',', pos);
        if (comma == std::string_view::npos) comma = list.size();
        const auto field = list.substr(pos, comma - pos);
        std::int64_t v = -1;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc() || ptr != field.data() + field.size() || v < 0 || v >= m) {
          in.fail(t[2].column + pos, "bad image");
        }
        images.push_back(static_cast<PointId>(v));
        pos = comma + 1;
      }
      if (static_cast<PointId>(images.size()) != m) in.fail(t[2].column, "image list length differs from component size");
    } else {
      in.fail(1, "unknown record '" + std::string(t[0].text) + "'");
    }
  }
  if (translations.empty()) raise(ErrorCode::kEmptySystem, "system file lists no translations");
  for (std::size_t i = 0; i < translations.size(); ++i) {
    for (std::size_t c = 0; c < comps; ++c) {
      if (!filled[i][c]) {
        raise(ErrorCode::kParse, "translation " + std::to_string(i) + " missing on component " + std::to_string(c));
      }
    }
  }
  return system_from_translations(space, std::move(translations));
}

std::string write_operator(const RoeOperator& op) {
  std::ostringstream out;
  out << "roeop v1\n";
  for (std::size_t c = 0; c < op.component_count(); ++c) {
    for (const auto& t : op.triplets(c)) {
      out << "entry " << c << ' ' << t.row << ' ' << t.col << ' ' << format_double(t.value.real()) << ' '
          << format_double(t.value.imag()) << '\n';
    }
  }
  return out.str();
}

RoeOperator read_operator(std::string_view text, const SpacePtr& space) {
  LineReader in(text);
  expect_header(in, "roeop");
  std::vector<std::vector<Triplet>> entries(space->component_count());
  while (in.next()) {
    const auto& t = in.tokens();
    if (t[0].text != "entry") in.fail(1, "unknown record '" + std::string(t[0].text) + "'");
    in.expect_arity(6);
    const auto c = component_index(in, 1, space);
    const PointId x = point_index(in, 2, space, c), y = point_index(in, 3, space, c);
    entries[c].push_back({x, y, Complex(in.real(4), in.real(5))});
  }
  return RoeOperator(space, entries);
}

std::string write_partial_translation(const PartialTranslation& v) {
  std::ostringstream out;
  out << "pt v1\n";
  for (std::size_t c = 0; c < v.space()->component_count(); ++c) {
    for (const auto& [x, y] : v.pairs(c)) out << "pair " << c << ' ' << x << ' ' << y << '\n';
  }
  return out.str();
}

PartialTranslation read_partial_translation(std::string_view text, const SpacePtr& space) {
  LineReader in(text);
  expect_header(in, "pt");
  std::vector<std::vector<Edge>> pairs(space->component_count());
  while (in.next()) {
    const auto& t = in.tokens();
    if (t[0].text != "pair") in.fail(1, "unknown record '" + std::string(t[0].text) + "'");
    in.expect_arity(4);
    const auto c = component_index(in, 1, space);
    pairs[c].emplace_back(point_index(in, 2, space, c), point_index(in, 3, space, c));
  }
  return PartialTranslation(space, std::move(pairs));
}

std::string write_decomposition(const Decomposition& d) {
  std::ostringstream out;
  out << "decomp v1\n";
  for (std::size_t i = 0; i < d.chi.size(); ++i) {
    const auto& chi = d.chi[i];
    for (std::size_t c = 0; c < chi.space()->component_count(); ++c) {
      const auto& values = chi.values(c);
      for (std::size_t x = 0; x < values.size(); ++x) {
        if (values[x] != Complex(0.0)) out << "chi " << i << ' ' << c << ' ' << x << '\n';
      }
    }
  }
  return out.str();
}

Decomposition read_decomposition(std::string_view text, const SpacePtr& space, std::size_t terms) {
  LineReader in(text);
  expect_header(in, "decomp");
  std::vector<std::vector<std::vector<Complex>>> values(terms);
  for (auto& v : values) {
    for (const auto& comp : space->components()) v.emplace_back(comp.size(), Complex(0.0));
  }
  while (in.next()) {
    const auto& t = in.tokens();
    if (t[0].text != "chi") in.fail(1, "unknown record '" + std::string(t[0].text) + "'");
    in.expect_arity(4);
    const auto i = in.integer<std::int64_t>(1);
    if (i < 0 || static_cast<std::size_t>(i) >= terms) in.fail(t[1].column, "term index out of range");
    const auto c = component_index(in, 2, space);
    values[i][c][point_index(in, 3, space, c)] = 1.0;
  }
  Decomposition d;
  for (auto& v : values) d.chi.emplace_back(space, std::move(v));
  return d;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  if (!out) raise(ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace roekit
