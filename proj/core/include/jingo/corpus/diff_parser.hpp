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

#pragma once

#include <cstdint>
#include <string>

#include "jingo/corpus/types.hpp"

namespace jingo::corpus {

struct ChangesetMeta {
  std::string sha;
  std::int64_t timestamp = 0;
  std::string author;
  std::string message;
};

/// Parses unified-diff text as produced by `git diff` with default settings
/// (Myers algorithm, 3 context lines) into a Changeset. Boilerplate markers
/// (`diff --git`, index/mode lines, `+++`, `---`, `@@`) are stripped; the
/// leading +/-/space of content lines is removed and the line is routed to
/// added/removed/context. Binary file entries are skipped with a log entry.
///
/// Throws MalformedDiff when a hunk body cannot be parsed.
Changeset parse_diff(const std::string& raw, const ChangesetMeta& meta);

}  // namespace jingo::corpus
