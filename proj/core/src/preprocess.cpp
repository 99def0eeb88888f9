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

#include "jingo/corpus/preprocess.hpp"

#include <algorithm>
#include <string_view>

#include "jingo/corpus/identifier.hpp"
#include "jingo/corpus/porter.hpp"
#include "jingo/corpus/wordlists.hpp"
#include "jingo/errors.hpp"
#include "jingo/log.hpp"

namespace jingo::corpus {

namespace {

bool digits_only(std::string_view token) {
  return std::all_of(token.begin(), token.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

// Tokenize -> filter -> stem -> count. `drop` holds the pipeline's word list
// (code keywords for changesets, English stop words for bug reports);
// matching happens on the lowercased subtoken before stemming. Length-1 and
// digits-only subtokens are noise for topic formation and are dropped.
void add_text(Document& doc, std::string_view text, const std::set<std::string>& drop,
              bool keep_unsplit, int weight = 1) {
  for (const std::string& raw : scan_raw_tokens(text)) {
    for (const std::string& sub : tokenize_identifier(raw, keep_unsplit)) {
      if (sub.size() <= 1 || digits_only(sub)) continue;
      if (drop.count(sub) != 0) continue;
      doc.add(porter_stem(sub), weight);
    }
  }
}

// "Auditor.java" -> "Auditor"; directories stripped first.
std::string_view base_name_without_extension(std::string_view path) {
  const std::size_t slash = path.find_last_of('/');
  if (slash != std::string_view::npos) path.remove_prefix(slash + 1);
  const std::size_t dot = path.find_last_of('.');
  if (dot != std::string_view::npos && dot > 0) path = path.substr(0, dot);
  return path;
}

}  // namespace

PreprocessConfig PreprocessConfig::defaults() {
  PreprocessConfig cfg;
  cfg.code_keywords = default_code_keywords();
  cfg.stopwords = default_stopwords();
  return cfg;
}

Document preprocess_changeset(const Changeset& cs, const PreprocessConfig& cfg) {
  Document doc;
  doc.source_id = cs.sha;

  for (const FileChange& file : cs.files) {
    add_text(doc, base_name_without_extension(file.path), cfg.code_keywords, cfg.keep_unsplit,
             cfg.filename_repeat);
    for (const Hunk& hunk : file.hunks) {
      for (const std::string& line : hunk.added) {
        add_text(doc, line, cfg.code_keywords, cfg.keep_unsplit);
      }
      for (const std::string& line : hunk.removed) {
        add_text(doc, line, cfg.code_keywords, cfg.keep_unsplit);
      }
      for (const std::string& line : hunk.context) {
        add_text(doc, line, cfg.code_keywords, cfg.keep_unsplit);
      }
    }
  }
  add_text(doc, cs.message, cfg.code_keywords, cfg.keep_unsplit);

  if (doc.empty()) {
    throw EmptyDocument("no token survived preprocessing for changeset " + cs.sha);
  }
  return doc;
}

Document preprocess_bug_report(const BugReport& br, const PreprocessConfig& cfg) {
  Document doc;
  doc.source_id = br.id;
  add_text(doc, br.summary, cfg.stopwords, cfg.keep_unsplit);
  add_text(doc, br.description, cfg.stopwords, cfg.keep_unsplit);
  if (doc.empty()) {
    throw EmptyDocument("no token survived preprocessing for bug " + br.id);
  }
  return doc;
}

Document preprocess_text_as_report(const std::string& source_id, const std::string& text,
                                   const PreprocessConfig& cfg) {
  Document doc;
  doc.source_id = source_id;
  add_text(doc, text, cfg.stopwords, cfg.keep_unsplit);
  if (doc.empty()) {
    throw EmptyDocument("no token survived preprocessing for text " + source_id);
  }
  return doc;
}

Document preprocess_code_text(const std::string& source_id, const std::string& text,
                              const PreprocessConfig& cfg) {
  Document doc;
  doc.source_id = source_id;
  add_text(doc, text, cfg.code_keywords, cfg.keep_unsplit);
  return doc;
}

double code_token_ratio(const BugReport& br, const std::set<std::string>& class_names) {
  const std::string text = br.summary + " " + br.description;

  long total = 0;
  long code = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) break;

    std::string_view token(text.data() + start, i - start);
    // Trim punctuation from the token edges; camel case must survive.
    while (!token.empty() && !std::isalnum(static_cast<unsigned char>(token.front())) &&
           token.front() != '_') {
      token.remove_prefix(1);
    }
    while (!token.empty() && !std::isalnum(static_cast<unsigned char>(token.back())) &&
           token.back() != '_') {
      token.remove_suffix(1);
    }
    if (token.empty()) continue;

    ++total;
    if (is_camel_case(token) || class_names.count(std::string(token)) != 0) ++code;
  }

  if (total == 0) {
    log::warn("code_token_ratio: empty bug report ", br.id);
    return 0.0;
  }
  return static_cast<double>(code) / static_cast<double>(total);
}

}  // namespace jingo::corpus
