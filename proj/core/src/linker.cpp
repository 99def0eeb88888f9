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

#include "jingo/ingest/linker.hpp"

#include <cctype>
#include <map>
#include <set>

#include "jingo/log.hpp"

namespace jingo::ingest {

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::string lowercase(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Reads digits at `i`; returns the number when it ends at a word boundary
// (so "#1234" can never stand for bug 123).
std::string read_issue_number(const std::string& text, std::size_t i) {
  std::size_t end = i;
  while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
  if (end == i) return {};
  if (end < text.size() && is_word_char(text[end])) return {};
  return text.substr(i, end - i);
}

// keyword [:] #123 — the keyword must sit at word boundaries.
void match_keyword_pattern(const std::string& lower, const std::string& keyword,
                           std::set<std::string>& out) {
  std::size_t pos = 0;
  while ((pos = lower.find(keyword, pos)) != std::string::npos) {
    const std::size_t after = pos + keyword.size();
    const bool bounded_left = pos == 0 || !is_word_char(lower[pos - 1]);
    const bool bounded_right = after >= lower.size() || !is_word_char(lower[after]);
    if (!bounded_left || !bounded_right) {
      ++pos;
      continue;
    }
    std::size_t i = after;
    while (i < lower.size() && lower[i] == ' ') ++i;
    if (i < lower.size() && lower[i] == ':') {
      ++i;
      while (i < lower.size() && lower[i] == ' ') ++i;
    }
    if (i < lower.size() && lower[i] == '#') {
      const std::string number = read_issue_number(lower, i + 1);
      if (!number.empty()) out.insert(number);
    }
    pos = after;
  }
}

// PROJECT-123, case-insensitive, bounded on both sides.
void match_project_pattern(const std::string& lower, const std::string& project,
                           std::set<std::string>& out) {
  std::size_t pos = 0;
  while ((pos = lower.find(project, pos)) != std::string::npos) {
    const std::size_t after = pos + project.size();
    const bool bounded_left = pos == 0 || !is_word_char(lower[pos - 1]);
    if (bounded_left && after < lower.size() && lower[after] == '-') {
      const std::string number = read_issue_number(lower, after + 1);
      if (!number.empty()) out.insert(number);
    }
    pos = after;
  }
}

bool has_extension(const std::string& path, const std::string& ext) {
  if (ext.empty()) return true;
  return path.size() >= ext.size() &&
         path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
}

}  // namespace

std::vector<evaluation::FixLink> link_bugs(const std::vector<corpus::BugReport>& bugs,
                                           const std::vector<corpus::Changeset>& commits,
                                           const LinkConventions& conventions) {
  std::set<std::string> bug_ids;
  for (const corpus::BugReport& bug : bugs) bug_ids.insert(bug.id);

  std::vector<std::string> keywords;
  for (const std::string& kw : conventions.keywords) keywords.push_back(lowercase(kw));
  const std::string project = lowercase(conventions.project_name);

  // Latest matching commit per bug; ties resolved toward the later stream
  // position so reruns stay deterministic.
  std::map<std::string, std::size_t> chosen;
  for (std::size_t c = 0; c < commits.size(); ++c) {
    const std::string lower = lowercase(commits[c].message);
    std::set<std::string> numbers;
    for (const std::string& kw : keywords) match_keyword_pattern(lower, kw, numbers);
    if (!project.empty()) match_project_pattern(lower, project, numbers);

    for (const std::string& number : numbers) {
      if (bug_ids.count(number) == 0) continue;
      const auto it = chosen.find(number);
      if (it == chosen.end() || commits[c].timestamp >= commits[it->second].timestamp) {
        chosen[number] = c;
      }
    }
  }

  std::vector<evaluation::FixLink> links;
  for (const corpus::BugReport& bug : bugs) {
    const auto it = chosen.find(bug.id);
    if (it == chosen.end()) {
      log::info("bug ", bug.id, " has no linked fixing commit");
      continue;
    }
    const corpus::Changeset& commit = commits[it->second];

    evaluation::FixLink link;
    link.bug_id = bug.id;
    link.fixing_sha = commit.sha;
    link.timestamp = commit.timestamp;
    std::set<std::string> seen;
    for (const corpus::FileChange& file : commit.files) {
      if (has_extension(file.path, conventions.source_extension) && seen.insert(file.path).second) {
        link.fixed_files.push_back(file.path);
      }
    }
    if (link.fixed_files.empty()) {
      log::warn("fix commit ", commit.sha, " for bug ", bug.id,
                " touches no source file; link dropped");
      continue;
    }
    links.push_back(std::move(link));
  }
  return links;
}

}  // namespace jingo::ingest
