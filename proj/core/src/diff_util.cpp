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

#include "diff_util.hpp"

namespace jingo::diffutil {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::size_t len = nl - start;
    if (len > 0 && text[start + len - 1] == '\r') --len;
    lines.push_back(text.substr(start, len));
    start = nl + 1;
  }
  return lines;
}

std::string unquote_path(std::string_view quoted) {
  std::string out;
  out.reserve(quoted.size());
  for (std::size_t i = 0; i < quoted.size(); ++i) {
    char c = quoted[i];
    if (c != '\\' || i + 1 >= quoted.size()) {
      out.push_back(c);
      continue;
    }
    const char next = quoted[++i];
    switch (next) {
      case 'n': out.push_back('\n'); break;
      case 't': out.push_back('\t'); break;
      case 'r': out.push_back('\r'); break;
      case '"': out.push_back('"'); break;
      case '\\': out.push_back('\\'); break;
      default: {
        if (next >= '0' && next <= '7') {  // octal escape, up to 3 digits
          int value = next - '0';
          int digits = 1;
          while (digits < 3 && i + 1 < quoted.size() && quoted[i + 1] >= '0' &&
                 quoted[i + 1] <= '7') {
            value = value * 8 + (quoted[++i] - '0');
            ++digits;
          }
          out.push_back(static_cast<char>(value));
        } else {
          out.push_back(next);
        }
      }
    }
  }
  return out;
}

std::optional<std::string> header_path(std::string_view payload) {
  if (!payload.empty() && payload.front() == '"') {
    const std::size_t close = payload.rfind('"');
    if (close > 0 && close != std::string_view::npos) {
      payload = payload.substr(1, close - 1);
      std::string unquoted = unquote_path(payload);
      std::string_view v(unquoted);
      if (starts_with(v, "a/") || starts_with(v, "b/")) v.remove_prefix(2);
      return std::string(v);
    }
  }
  // Git appends no timestamp, but be lenient about a tab-separated suffix.
  const std::size_t tab = payload.find('\t');
  if (tab != std::string_view::npos) payload = payload.substr(0, tab);
  if (payload == "/dev/null") return std::nullopt;
  if (starts_with(payload, "a/") || starts_with(payload, "b/")) payload.remove_prefix(2);
  return std::string(payload);
}

std::string diff_git_new_path(std::string_view payload) {
  if (!payload.empty() && payload.front() == '"') {
    const std::size_t mid = payload.find("\" \"");
    if (mid != std::string_view::npos) {
      std::string_view b = payload.substr(mid + 3);
      if (!b.empty() && b.back() == '"') b.remove_suffix(1);
      std::string unquoted = unquote_path(b);
      std::string_view v(unquoted);
      if (starts_with(v, "b/")) v.remove_prefix(2);
      return std::string(v);
    }
  }
  const std::size_t pos = payload.rfind(" b/");
  if (pos == std::string_view::npos) return std::string(payload);
  return std::string(payload.substr(pos + 3));
}

std::optional<HunkHeader> parse_hunk_header(std::string_view line) {
  HunkHeader h;
  std::size_t i = 2;  // past "@@"
  auto skip_spaces = [&] {
    while (i < line.size() && line[i] == ' ') ++i;
  };
  auto read_number = [&](long& out) -> bool {
    if (i >= line.size() || line[i] < '0' || line[i] > '9') return false;
    long v = 0;
    while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
      v = v * 10 + (line[i] - '0');
      ++i;
    }
    out = v;
    return true;
  };
  skip_spaces();
  if (i >= line.size() || line[i] != '-') return std::nullopt;
  ++i;
  if (!read_number(h.old_start)) return std::nullopt;
  if (i < line.size() && line[i] == ',') {
    ++i;
    if (!read_number(h.old_count)) return std::nullopt;
  }
  skip_spaces();
  if (i >= line.size() || line[i] != '+') return std::nullopt;
  ++i;
  if (!read_number(h.new_start)) return std::nullopt;
  if (i < line.size() && line[i] == ',') {
    ++i;
    if (!read_number(h.new_count)) return std::nullopt;
  }
  skip_spaces();
  if (i + 1 >= line.size() || line[i] != '@' || line[i + 1] != '@') return std::nullopt;
  return h;
}

}  // namespace jingo::diffutil
