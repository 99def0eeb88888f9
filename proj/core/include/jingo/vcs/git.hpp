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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jingo/evaluation/replay.hpp"

namespace jingo::vcs {

/// Walks first-parent history in commit order, diffing each commit against
/// its first parent (root commits against the empty tree) with the diff
/// tool's default settings. Commits with timestamp <= since are skipped.
///
/// Throws NotARepository / ToolUnavailable.
std::vector<evaluation::ChangesetEvent> extract_changesets(
    const std::string& repo_path, std::optional<std::int64_t> since = std::nullopt);

/// All file contents of the tree at `sha`, as path -> content. Throws
/// UnknownCommit for an unresolvable sha.
std::map<std::string, std::string> snapshot_at(const std::string& repo_path,
                                               const std::string& sha);

}  // namespace jingo::vcs
