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

#include "jingo/vcs/virtual_tree.hpp"

#include <string_view>

#include "diff_util.hpp"
#include "jingo/errors.hpp"
#include "jingo/log.hpp"

namespace jingo::vcs {

namespace {

using diffutil::starts_with;

struct PendingFile {
  std::string old_path;   // empty or /dev/null-mapped for creations
  std::string new_path;
  bool is_rename = false;
  bool old_is_null = false;
  bool new_is_null = false;
};

struct HunkOp {
  char op;  // ' ', '+', '-'
  std::string text;
};

struct ParsedHunk {
  long old_start = 0;
  long old_count = 0;
  std::vector<HunkOp> ops;
};

// Applies hunks (in order) to the old content.
std::vector<std::string> apply_hunks(const std::vector<std::string>& old_lines,
                                     const std::vector<ParsedHunk>& hunks,
                                     const std::string& path) {
  std::vector<std::string> out;
  std::size_t cursor = 0;  // next old line to copy (0-based)

  for (const ParsedHunk& hunk : hunks) {
    // For a zero-length old range the @@ position names the line AFTER
    // which the insertion happens; otherwise it is the first changed line.
    const std::size_t first =
        hunk.old_count == 0 ? static_cast<std::size_t>(hunk.old_start)
                            : static_cast<std::size_t>(hunk.old_start > 0 ? hunk.old_start - 1 : 0);
    while (cursor < first && cursor < old_lines.size()) {
      out.push_back(old_lines[cursor]);
      ++cursor;
    }
    for (const HunkOp& op : hunk.ops) {
      switch (op.op) {
        case ' ':
          if (cursor < old_lines.size()) {
            if (old_lines[cursor] != op.text) {
              log::warn("virtual tree: context mismatch in ", path);
            }
            ++cursor;
          }
          out.push_back(op.text);
          break;
        case '-':
          if (cursor < old_lines.size()) {
            if (old_lines[cursor] != op.text) {
              log::warn("virtual tree: removed-line mismatch in ", path);
            }
            ++cursor;
          }
          break;
        case '+':
          out.push_back(op.text);
          break;
        default:
          break;
      }
    }
  }
  while (cursor < old_lines.size()) {
    out.push_back(old_lines[cursor]);
    ++cursor;
  }
  return out;
}

}  // namespace

void VirtualTree::apply_diff(const std::string& raw) {
  const std::vector<std::string> lines = diffutil::split_lines(raw);

  PendingFile file;
  std::vector<ParsedHunk> hunks;
  bool have_file = false;
  bool is_binary = false;

  auto flush = [&] {
    if (!have_file) return;
    if (is_binary) {
      log::debug("virtual tree: skipping binary entry ", file.new_path);
    } else if (file.new_is_null) {
      const std::string& victim = !file.old_path.empty() ? file.old_path : file.new_path;
      files_.erase(victim);
    } else {
      std::vector<std::string> old_lines;
      if (file.is_rename && !file.old_path.empty()) {
        auto it = files_.find(file.old_path);
        if (it != files_.end()) {
          old_lines = std::move(it->second);
          files_.erase(it);
        }
      } else if (!file.old_is_null) {
        const std::string& source = !file.old_path.empty() ? file.old_path : file.new_path;
        auto it = files_.find(source);
        if (it != files_.end()) {
          old_lines = it->second;
        } else if (!hunks.empty() && !(hunks[0].old_count == 0 && hunks[0].old_start == 0)) {
          log::warn("virtual tree: patch for unknown file ", file.new_path);
        }
      }
      files_[file.new_path] = hunks.empty() ? old_lines : apply_hunks(old_lines, hunks, file.new_path);
    }
    file = PendingFile{};
    hunks.clear();
    is_binary = false;
    have_file = false;
  };

  std::size_t i = 0;
  while (i < lines.size()) {
    const std::string& line = lines[i];

    if (starts_with(line, "diff --git ")) {
      flush();
      have_file = true;
      file.new_path = diffutil::diff_git_new_path(std::string_view(line).substr(11));
      ++i;
      continue;
    }
    if (!have_file) {
      ++i;
      continue;
    }
    if (starts_with(line, "rename from ")) {
      file.is_rename = true;
      if (auto p = diffutil::header_path(std::string_view(line).substr(12))) file.old_path = *p;
      ++i;
      continue;
    }
    if (starts_with(line, "rename to ")) {
      if (auto p = diffutil::header_path(std::string_view(line).substr(10))) file.new_path = *p;
      ++i;
      continue;
    }
    if (starts_with(line, "--- ")) {
      auto p = diffutil::header_path(std::string_view(line).substr(4));
      if (p) {
        file.old_path = *p;
      } else {
        file.old_is_null = true;
      }
      ++i;
      continue;
    }
    if (starts_with(line, "+++ ")) {
      auto p = diffutil::header_path(std::string_view(line).substr(4));
      if (p) {
        file.new_path = *p;
      } else {
        file.new_is_null = true;
      }
      ++i;
      continue;
    }
    if (starts_with(line, "Binary files ") || starts_with(line, "GIT binary patch")) {
      is_binary = true;
      ++i;
      continue;
    }
    if (starts_with(line, "@@")) {
      auto header = diffutil::parse_hunk_header(line);
      if (!header) throw MalformedDiff("virtual tree: bad hunk header: " + line);
      ParsedHunk hunk;
      hunk.old_start = header->old_start;
      hunk.old_count = header->old_count;
      long old_remaining = header->old_count;
      long new_remaining = header->new_count;
      ++i;
      while (old_remaining > 0 || new_remaining > 0) {
        if (i >= lines.size()) throw MalformedDiff("virtual tree: truncated hunk");
        const std::string& body = lines[i];
        if (body.empty()) {
          hunk.ops.push_back({' ', ""});
          --old_remaining;
          --new_remaining;
        } else {
          switch (body[0]) {
            case ' ':
              hunk.ops.push_back({' ', body.substr(1)});
              --old_remaining;
              --new_remaining;
              break;
            case '-':
              hunk.ops.push_back({'-', body.substr(1)});
              --old_remaining;
              break;
            case '+':
              hunk.ops.push_back({'+', body.substr(1)});
              --new_remaining;
              break;
            case '\\':
              break;
            default:
              throw MalformedDiff("virtual tree: unexpected hunk line: " + body);
          }
        }
        ++i;
      }
      while (i < lines.size() && !lines[i].empty() && lines[i][0] == '\\') ++i;
      hunks.push_back(std::move(hunk));
      continue;
    }
    ++i;  // index/mode/similarity headers
  }
  flush();
}

std::string VirtualTree::content(const std::string& path) const {
  const auto it = files_.find(path);
  if (it == files_.end()) return {};
  std::string out;
  for (const std::string& line : it->second) {
    out += line;
    out += '\n';
  }
  return out;
}

std::map<std::string, std::string> VirtualTree::snapshot(const std::string& extension) const {
  std::map<std::string, std::string> out;
  for (const auto& [path, lines] : files_) {
    if (!extension.empty()) {
      if (path.size() < extension.size() ||
          path.compare(path.size() - extension.size(), extension.size(), extension) != 0) {
        continue;
      }
    }
    out.emplace(path, content(path));
  }
  return out;
}

}  // namespace jingo::vcs
