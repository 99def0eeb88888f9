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
#include <string>
#include <vector>

namespace jingo::corpus {

/// One contiguous block of change inside a file diff. Context lines are the
/// unchanged lines surrounding the change (up to 3 before and 3 after) and
/// are never counted as added or removed.
struct Hunk {
  std::vector<std::string> added;
  std::vector<std::string> removed;
  std::vector<std::string> context;

  bool empty() const { return added.empty() && removed.empty() && context.empty(); }
};

struct FileChange {
  std::string path;  // repository-relative, from the new-file header
  std::vector<Hunk> hunks;
};

/// One commit's parsed diff plus its metadata.
struct Changeset {
  std::string sha;
  std::int64_t timestamp = 0;  // seconds since epoch, UTC
  std::string author;
  std::string message;
  std::vector<FileChange> files;
};

struct BugReport {
  std::string id;
  std::int64_t timestamp_reported = 0;
  std::string summary;      // non-empty
  std::string description;  // may be empty
};

/// Bag of terms produced by preprocessing. Terms are kept as strings so the
/// same document can be inferred under models with independent vocabularies.
struct Document {
  std::string source_id;               // originating changeset sha or bug id
  std::map<std::string, int> term_counts;  // term -> count >= 1
  std::int64_t total_tokens = 0;       // sum of counts

  void add(const std::string& term, int count = 1) {
    term_counts[term] += count;
    total_tokens += count;
  }

  bool empty() const { return term_counts.empty(); }
};

}  // namespace jingo::corpus
