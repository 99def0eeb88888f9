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

#include "jingo/io/streams.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "jingo/errors.hpp"
#include "jingo/log.hpp"

namespace jingo::io {

namespace {

using nlohmann::json;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open stream file: " + path);
  return in;
}

std::string format_metric(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

}  // namespace

void write_changeset_record(std::ostream& out, const evaluation::ChangesetEvent& record) {
  const json j = {{"sha", record.meta.sha},
                  {"timestamp", record.meta.timestamp},
                  {"author", record.meta.author},
                  {"message", record.meta.message},
                  {"diff", record.diff}};
  out << j.dump() << '\n';
}

std::vector<evaluation::ChangesetEvent> read_changeset_stream(std::istream& in) {
  std::vector<evaluation::ChangesetEvent> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ConfigError("changeset stream line " + std::to_string(line_no) + ": " + e.what());
    }
    evaluation::ChangesetEvent record;
    record.meta.sha = j.at("sha").get<std::string>();
    record.meta.timestamp = j.at("timestamp").get<std::int64_t>();
    record.meta.author = j.value("author", "");
    record.meta.message = j.value("message", "");
    record.diff = j.value("diff", "");
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<evaluation::ChangesetEvent> read_changeset_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_changeset_stream(in);
}

void write_changeset_file(const std::string& path,
                          const std::vector<evaluation::ChangesetEvent>& records, bool append) {
  std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
  if (!out) throw ConfigError("cannot write stream file: " + path);
  for (const auto& record : records) write_changeset_record(out, record);
}

void write_bug_record(std::ostream& out, const corpus::BugReport& record) {
  const json j = {{"id", record.id},
                  {"timestamp_reported", record.timestamp_reported},
                  {"summary", record.summary},
                  {"description", record.description}};
  out << j.dump() << '\n';
}

std::vector<corpus::BugReport> read_bug_stream(std::istream& in) {
  std::vector<corpus::BugReport> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ConfigError("bug stream line " + std::to_string(line_no) + ": " + e.what());
    }
    corpus::BugReport record;
    record.id = j.at("id").get<std::string>();
    record.timestamp_reported = j.at("timestamp_reported").get<std::int64_t>();
    record.summary = j.at("summary").get<std::string>();
    record.description = j.value("description", "");
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<corpus::BugReport> read_bug_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_bug_stream(in);
}

void write_link_record(std::ostream& out, const LinkRecord& record) {
  out << record.bug_id << '\t' << record.fixing_sha << '\t';
  for (std::size_t i = 0; i < record.fixed_files.size(); ++i) {
    if (i > 0) out << ';';
    out << record.fixed_files[i];
  }
  out << '\n';
}

std::vector<LinkRecord> read_link_stream(std::istream& in) {
  std::vector<LinkRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    LinkRecord record;
    std::string files;
    if (!std::getline(fields, record.bug_id, '\t') ||
        !std::getline(fields, record.fixing_sha, '\t')) {
      throw ConfigError("links file: malformed row: " + line);
    }
    std::getline(fields, files, '\t');
    std::size_t start = 0;
    while (start <= files.size() && !files.empty()) {
      const std::size_t sep = files.find(';', start);
      const std::string item =
          files.substr(start, sep == std::string::npos ? std::string::npos : sep - start);
      if (!item.empty()) record.fixed_files.push_back(item);
      if (sep == std::string::npos) break;
      start = sep + 1;
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<LinkRecord> read_link_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_link_stream(in);
}

void write_link_file(const std::string& path, const std::vector<LinkRecord>& records) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ConfigError("cannot write links file: " + path);
  for (const auto& record : records) write_link_record(out, record);
}

std::vector<evaluation::HistoryEvent> assemble_events(
    std::vector<evaluation::ChangesetEvent> changesets, std::vector<corpus::BugReport> bugs,
    const std::vector<LinkRecord>& links) {
  std::map<std::string, std::int64_t> sha_time;
  for (const auto& cs : changesets) sha_time[cs.meta.sha] = cs.meta.timestamp;

  std::vector<evaluation::HistoryEvent> events;
  events.reserve(changesets.size() + bugs.size() + links.size());
  for (auto& cs : changesets) events.push_back(evaluation::HistoryEvent::of(std::move(cs)));
  for (auto& bug : bugs) events.push_back(evaluation::HistoryEvent::of(std::move(bug)));
  for (const LinkRecord& link : links) {
    const auto it = sha_time.find(link.fixing_sha);
    if (it == sha_time.end()) {
      log::warn("link for bug ", link.bug_id, " references unknown sha ", link.fixing_sha,
                "; dropped");
      continue;
    }
    evaluation::FixLink fix;
    fix.bug_id = link.bug_id;
    fix.fixing_sha = link.fixing_sha;
    fix.fixed_files = link.fixed_files;
    fix.timestamp = it->second;
    events.push_back(evaluation::HistoryEvent::of(std::move(fix)));
  }
  evaluation::sort_events(events);
  return events;
}

void write_metrics_table(std::ostream& out, const evaluation::EvalResult& result) {
  out << "bug_id\trr\tap\thit1\thit3\thit5\n";
  for (const evaluation::BugOutcome& bug : result.bugs) {
    out << bug.bug_id << '\t' << format_metric(bug.reciprocal_rank) << '\t'
        << format_metric(bug.average_precision) << '\t' << (bug.hit1 ? 1 : 0) << '\t'
        << (bug.hit3 ? 1 : 0) << '\t' << (bug.hit5 ? 1 : 0) << '\n';
  }
  out << "ALL\t" << format_metric(result.mrr) << '\t' << format_metric(result.map) << '\t'
      << format_metric(result.top1) << '\t' << format_metric(result.top3) << '\t'
      << format_metric(result.top5) << '\n';
}

void write_timing_table(std::ostream& out, const evaluation::TimingReport& report) {
  out << "build_seconds\t" << format_metric(report.build_seconds) << '\n';
  out << "mean_update_seconds\t" << format_metric(report.mean_update_seconds) << '\n';
  out << "speedup\t" << format_metric(report.speedup) << '\n';
}

}  // namespace jingo::io
