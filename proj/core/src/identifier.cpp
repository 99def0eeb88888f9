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

#include "jingo/corpus/identifier.hpp"

#include <cctype>

namespace jingo::corpus {

namespace {

inline bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_word_char(char c) { return is_lower(c) || is_upper(c) || is_digit(c) || c == '_'; }
inline char to_lower(char c) { return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }

std::string lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(to_lower(c));
  return out;
}

}  // namespace

std::vector<std::string> tokenize_identifier(const std::string& token, bool keep_unsplit) {
  std::vector<std::string> parts;
  std::string current;

  auto flush = [&] {
    if (!current.empty()) {
      parts.push_back(current);
      current.clear();
    }
  };

  const std::size_t n = token.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char c = token[i];
    if (c == '_') {
      flush();
      continue;
    }
    if (!current.empty()) {
      const char prev = token[i - 1];
      const bool lower_to_upper = is_lower(prev) && is_upper(c);
      // End of an acronym run: "HTMLParser" splits between L and P.
      const bool acronym_end =
          is_upper(prev) && is_upper(c) && i + 1 < n && is_lower(token[i + 1]);
      const bool alpha_digit = (is_digit(prev) != is_digit(c)) && prev != '_';
      if (lower_to_upper || acronym_end || alpha_digit) flush();
    }
    current.push_back(to_lower(c));
  }
  flush();

  if (keep_unsplit && parts.size() > 1) {
    parts.push_back(lowercase(token));
  }
  return parts;
}

std::vector<std::string> scan_raw_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && !is_word_char(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && is_word_char(line[i])) ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

bool is_camel_case(std::string_view token) {
  for (std::size_t i = 1; i < token.size(); ++i) {
    if (is_lower(token[i - 1]) && is_upper(token[i])) return true;
  }
  return false;
}

}  // namespace jingo::corpus
