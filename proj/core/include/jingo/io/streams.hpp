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

#include <iosfwd>
#include <string>
#include <vector>

#include "jingo/corpus/types.hpp"
#include "jingo/evaluation/replay.hpp"

namespace jingo::io {

/// Link row as exported: the fixing commit's timestamp is resolved against
/// the changeset stream when the replay events are assembled.
struct LinkRecord {
  std::string bug_id;
  std::string fixing_sha;
  std::vector<std::string> fixed_files;
};

// Changeset stream: one JSON object per line with fields
// {sha, timestamp, author, message, diff}. UTF-8, newline-delimited.
void write_changeset_record(std::ostream& out, const evaluation::ChangesetEvent& record);
std::vector<evaluation::ChangesetEvent> read_changeset_stream(std::istream& in);
std::vector<evaluation::ChangesetEvent> read_changeset_file(const std::string& path);
void write_changeset_file(const std::string& path,
                          const std::vector<evaluation::ChangesetEvent>& records, bool append);

// Bug stream: one JSON object per line with fields
// {id, timestamp_reported, summary, description}.
void write_bug_record(std::ostream& out, const corpus::BugReport& record);
std::vector<corpus::BugReport> read_bug_stream(std::istream& in);
std::vector<corpus::BugReport> read_bug_file(const std::string& path);

// Links file: tab-delimited rows {bug_id, fixing_sha, fixed_files
// (semicolon-joined)}.
void write_link_record(std::ostream& out, const LinkRecord& record);
std::vector<LinkRecord> read_link_stream(std::istream& in);
std::vector<LinkRecord> read_link_file(const std::string& path);
void write_link_file(const std::string& path, const std::vector<LinkRecord>& records);

/// Merges the three streams into one replay-ordered event list, resolving
/// each link's timestamp from its fixing changeset. Links whose sha is
/// absent from the changeset stream are dropped with a warning.
std::vector<evaluation::HistoryEvent> assemble_events(
    std::vector<evaluation::ChangesetEvent> changesets, std::vector<corpus::BugReport> bugs,
    const std::vector<LinkRecord>& links);

// Result tables. Metric rows are stable across runs; timing is not.
void write_metrics_table(std::ostream& out, const evaluation::EvalResult& result);
void write_timing_table(std::ostream& out, const evaluation::TimingReport& report);

}  // namespace jingo::io
