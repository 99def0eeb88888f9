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

#include "jingo/corpus/diff_parser.hpp"

#include <cstddef>
#include <string_view>

#include "diff_util.hpp"
#include "jingo/errors.hpp"
#include "jingo/log.hpp"

namespace jingo::corpus {

using diffutil::starts_with;

Changeset parse_diff(const std::string& raw, const ChangesetMeta& meta) {
  Changeset cs;
  cs.sha = meta.sha;
  cs.timestamp = meta.timestamp;
  cs.author = meta.author;
  cs.message = meta.message;

  const std::vector<std::string> lines = diffutil::split_lines(raw);
  FileChange* current = nullptr;

  std::size_t i = 0;
  while (i < lines.size()) {
    const std::string& line = lines[i];

    if (starts_with(line, "diff --git ")) {
      cs.files.emplace_back();
      current = &cs.files.back();
      current->path = diffutil::diff_git_new_path(std::string_view(line).substr(11));
      ++i;
      continue;
    }

    if (current == nullptr) {
      ++i;  // tolerate leading noise before the first file entry
      continue;
    }

    if (starts_with(line, "rename to ")) {
      current->path =
          diffutil::header_path(std::string_view(line).substr(10)).value_or(current->path);
      ++i;
      continue;
    }
    if (starts_with(line, "+++ ")) {
      if (auto p = diffutil::header_path(std::string_view(line).substr(4))) current->path = *p;
      ++i;
      continue;
    }
    if (starts_with(line, "--- ")) {
      if (auto p = diffutil::header_path(std::string_view(line).substr(4))) {
        if (current->path.empty()) current->path = *p;
        // Deleted file: +++ is /dev/null, the old path names the file.
        if (i + 1 < lines.size() && lines[i + 1] == "+++ /dev/null") current->path = *p;
      }
      ++i;
      continue;
    }
    if (starts_with(line, "Binary files ") || starts_with(line, "GIT binary patch")) {
      log::debug("skipping binary hunk for ", current->path.empty() ? "<unknown>" : current->path);
      ++i;
      continue;
    }
    if (starts_with(line, "@@")) {
      auto header = diffutil::parse_hunk_header(line);
      if (!header) {
        throw MalformedDiff("bad hunk header in " + meta.sha + ": " + line);
      }
      Hunk hunk;
      long old_remaining = header->old_count;
      long new_remaining = header->new_count;
      ++i;
      while (old_remaining > 0 || new_remaining > 0) {
        if (i >= lines.size()) {
          throw MalformedDiff("truncated hunk in " + meta.sha);
        }
        const std::string& body = lines[i];
        if (body.empty()) {
          // Some exporters strip the single space of an empty context line.
          hunk.context.emplace_back();
          --old_remaining;
          --new_remaining;
        } else {
          switch (body[0]) {
            case ' ':
              hunk.context.push_back(body.substr(1));
              --old_remaining;
              --new_remaining;
              break;
            case '-':
              hunk.removed.push_back(body.substr(1));
              --old_remaining;
              break;
            case '+':
              hunk.added.push_back(body.substr(1));
              --new_remaining;
              break;
            case '\\':
              break;  // "\ No newline at end of file" consumes no count
            default:
              throw MalformedDiff("unexpected hunk line in " + meta.sha + ": " + body);
          }
        }
        ++i;
      }
      while (i < lines.size() && !lines[i].empty() && lines[i][0] == '\\') ++i;
      if (hunk.empty()) {
        throw MalformedDiff("empty hunk in " + meta.sha);
      }
      current->hunks.push_back(std::move(hunk));
      continue;
    }

    // Remaining metadata: index/mode/similarity/copy/rename-from headers.
    ++i;
  }

  return cs;
}

}  // namespace jingo::corpus
