/*
 * Copyright 2026 The Jingo Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "jingo/corpus/methods.hpp"

#include <cstddef>

namespace jingo::corpus {

namespace {

struct LineRange {
  std::size_t begin = 0;  // inclusive
  std::size_t end = 0;    // inclusive
};

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace

std::vector<std::string> segment_methods(const std::string& class_source) {
  const std::vector<std::string> lines = split_lines(class_source);

  std::vector<LineRange> units;
  int depth = 0;
  bool in_unit = false;
  int unit_start_depth = 0;
  std::size_t unit_start_line = 0;
  bool in_block_comment = false;
  bool truncated_unit = false;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string& line = lines[li];
    bool in_string = false;
    bool in_char = false;
    bool seen_paren_pair = false;  // '(' ... ')' earlier on this line
    int open_parens = 0;

    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (in_block_comment) {
        if (c == '*' && i + 1 < line.size() && line[i + 1] == '/') {
          in_block_comment = false;
          ++i;
        }
        continue;
      }
      if (in_string) {
        if (c == '\\') { ++i; continue; }
        if (c == '"') in_string = false;
        continue;
      }
      if (in_char) {
        if (c == '\\') { ++i; continue; }
        if (c == '\'') in_char = false;
        continue;
      }
      switch (c) {
        case '/':
          if (i + 1 < line.size() && line[i + 1] == '/') { i = line.size(); continue; }
          if (i + 1 < line.size() && line[i + 1] == '*') { in_block_comment = true; ++i; }
          break;
        case '"': in_string = true; break;
        case '\'': in_char = true; break;
        case '(': ++open_parens; break;
        case ')':
          if (open_parens > 0) {
            --open_parens;
            if (open_parens == 0) seen_paren_pair = true;
          }
          break;
        case '{':
          if (!in_unit && seen_paren_pair && depth >= 1) {
            in_unit = true;
            unit_start_depth = depth;
            unit_start_line = li;
          }
          ++depth;
          break;
        case '}':
          --depth;
          if (in_unit && depth <= unit_start_depth) {
            units.push_back({unit_start_line, li});
            in_unit = false;
          }
          break;
        default:
          break;
      }
    }
  }

  if (in_unit) truncated_unit = true;

  if (units.empty() || truncated_unit) {
    // Interfaces, unbalanced braces, or files without member bodies.
    return {class_source};
  }

  std::vector<std::string> out;
  out.reserve(units.size());
  for (const LineRange& range : units) {
    std::string text;
    for (std::size_t li = range.begin; li <= range.end; ++li) {
      text += lines[li];
      if (li != range.end) text += '\n';
    }
    out.push_back(std::move(text));
  }
  return out;
}

}  // namespace jingo::corpus
