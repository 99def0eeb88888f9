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

#include <set>
#include <string>

#include "jingo/corpus/types.hpp"

namespace jingo::corpus {

struct PreprocessConfig {
  int filename_repeat = 10;   // weight boost for file base names
  bool keep_unsplit = true;   // keep the original token next to its splits
  int context_lines = 3;      // expected by the diff exporter
  std::set<std::string> code_keywords;  // dropped from changeset text
  std::set<std::string> stopwords;      // dropped from bug-report text

  /// Config with the built-in stop word and keyword lists.
  static PreprocessConfig defaults();
};

/// Builds the bag of terms for one changeset: file base names repeated
/// filename_repeat times, all added/removed/context line tokens and the
/// commit message, each camel/underscore-split, keyword-filtered and
/// Porter-stemmed.
///
/// Throws EmptyDocument when no token survives; callers skip the update.
Document preprocess_changeset(const Changeset& cs, const PreprocessConfig& cfg);

/// Builds the bag of terms for one bug report: summary + description,
/// tokenized with unsplit tokens preserved, stop-word-filtered and
/// Porter-stemmed. No file name boosting.
Document preprocess_bug_report(const BugReport& br, const PreprocessConfig& cfg);

/// Runs one free-text blob through the bug-report pipeline; used for commit
/// logs standing in for bug reports during translation cold start.
Document preprocess_text_as_report(const std::string& source_id, const std::string& text,
                                   const PreprocessConfig& cfg);

/// Runs source text through the changeset code pipeline (tokenize, keyword
/// removal, stem) without file name boosting; used for snapshot method units
/// and whole-class texts. May return an empty bag.
Document preprocess_code_text(const std::string& source_id, const std::string& text,
                              const PreprocessConfig& cfg);

/// Fraction of the report's raw whitespace tokens (punctuation trimmed from
/// the edges) that are camel case or exactly match a class name. Returns 0
/// for an empty report.
double code_token_ratio(const BugReport& br, const std::set<std::string>& class_names);

}  // namespace jingo::corpus
