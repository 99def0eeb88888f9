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

// Internal helpers shared by the diff parser and the virtual tree patcher.
// Not installed.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jingo::diffutil {

inline bool starts_with(std::string_view line, std::string_view prefix) {
  return line.substr(0, prefix.size()) == prefix;
}

/// Splits text into lines, tolerating a missing trailing newline and CRLF.
std::vector<std::string> split_lines(const std::string& text);

/// Undoes git's C-style path quoting ("a/na\303\257ve name.txt").
std::string unquote_path(std::string_view quoted);

/// Extracts a path from a `--- a/x` / `+++ b/x` style header payload,
/// stripping the a/ or b/ prefix. Returns nullopt for /dev/null.
std::optional<std::string> header_path(std::string_view payload);

/// Extracts the b-side path from the payload of `diff --git a/x b/x`.
std::string diff_git_new_path(std::string_view payload);

struct HunkHeader {
  long old_start = 0;
  long old_count = 1;
  long new_start = 0;
  long new_count = 1;
};

/// Parses `@@ -a[,b] +c[,d] @@ ...`. Returns nullopt when malformed.
std::optional<HunkHeader> parse_hunk_header(std::string_view line);

}  // namespace jingo::diffutil
