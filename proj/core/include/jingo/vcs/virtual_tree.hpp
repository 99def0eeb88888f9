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

#include <map>
#include <string>
#include <vector>

namespace jingo::vcs {

/// In-memory repository tree maintained by replaying raw unified diffs in
/// commit order. Starting from the empty tree, applying every first-parent
/// diff reproduces the tree at each commit, so replay can materialize
/// snapshots without the original repository.
class VirtualTree {
 public:
  /// Applies one commit's raw `git diff` output. Throws MalformedDiff when
  /// the patch cannot be interpreted; context mismatches are logged and the
  /// diff's view wins.
  void apply_diff(const std::string& raw);

  bool contains(const std::string& path) const { return files_.count(path) != 0; }
  std::size_t file_count() const { return files_.size(); }

  /// Joined file content ('\n' separators, trailing newline).
  std::string content(const std::string& path) const;

  /// All files whose path ends with `extension` (empty = all), as
  /// path -> content. Deterministically ordered.
  std::map<std::string, std::string> snapshot(const std::string& extension = "") const;

 private:
  std::map<std::string, std::vector<std::string>> files_;
};

}  // namespace jingo::vcs
