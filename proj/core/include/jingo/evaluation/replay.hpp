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
#include <variant>
#include <vector>

#include "jingo/corpus/diff_parser.hpp"
#include "jingo/corpus/preprocess.hpp"
#include "jingo/corpus/types.hpp"
#include "jingo/locator/locator.hpp"
#include "jingo/topicmodel/online_lda.hpp"
#include "jingo/translation/translation.hpp"
#include "jingo/vcs/virtual_tree.hpp"

namespace jingo::evaluation {

/// A raw changeset as exported: metadata plus unparsed diff text.
struct ChangesetEvent {
  corpus::ChangesetMeta meta;
  std::string diff;
};

/// Links a bug to the changeset that fixed it and the goldset of files that
/// changed. Timestamped with the fixing commit's timestamp.
struct FixLink {
  std::string bug_id;
  std::string fixing_sha;
  std::vector<std::string> fixed_files;
  std::int64_t timestamp = 0;
};

/// One event of the merged history stream. At equal timestamps bug reports
/// sort first, then fix links, then changesets, so a bug is always scored
/// against strictly pre-fix model state.
struct HistoryEvent {
  std::variant<corpus::BugReport, FixLink, ChangesetEvent> payload;

  std::int64_t timestamp() const;
  int kind_rank() const;       // BugReport 0, FixLink 1, Changeset 2
  const std::string& id() const;  // bug id or sha

  static HistoryEvent of(corpus::BugReport br);
  static HistoryEvent of(FixLink link);
  static HistoryEvent of(ChangesetEvent cs);
};

/// Sorts by (timestamp, kind rank, id) — the canonical replay order.
void sort_events(std::vector<HistoryEvent>& events);

enum class ReplayMode { kJingo, kBaseline };

struct ReplayConfig {
  topicmodel::LdaConfig changeset_model = topicmodel::LdaConfig::changeset_defaults();
  topicmodel::LdaConfig bug_report_model = topicmodel::LdaConfig::bug_report_defaults();
  corpus::PreprocessConfig preprocess = corpus::PreprocessConfig::defaults();
  translation::ReadinessPolicy readiness;
  locator::LocatorConfig locator;
  double ridge = translation::kDefaultRidge;
  std::optional<std::size_t> pair_window;  // optional sliding cap on stored pairs
  std::string source_extension = ".java";
  ReplayMode mode = ReplayMode::kJingo;
};

struct BugOutcome {
  std::string bug_id;
  double reciprocal_rank = 0.0;
  double average_precision = 0.0;
  int best_rank = 0;  // 1-based; 0 = goldset absent from the ranking
  bool hit1 = false;
  bool hit3 = false;
  bool hit5 = false;
};

struct TimingLog {
  double build_seconds = 0.0;              // total model-update cost so far
  std::vector<double> update_seconds;      // one entry per changeset
};

struct TimingReport {
  double build_seconds = 0.0;
  double mean_update_seconds = 0.0;
  double speedup = 0.0;  // build / mean update
};

/// Aggregates recorded wall-clock values; empty logs yield a zero report
/// with a warning.
TimingReport timing_report(const TimingLog& log);

struct EvalResult {
  std::vector<BugOutcome> bugs;
  double mrr = 0.0;
  double map = 0.0;
  double top1 = 0.0;
  double top3 = 0.0;
  double top5 = 0.0;
  TimingLog timing;
};

/// Incremental replay: feed events in order, read models/result between
/// events or at the end. Event timestamps must be non-decreasing; going
/// backwards raises CausalityViolation.
class ReplayEngine {
 public:
  explicit ReplayEngine(ReplayConfig cfg);

  void process(const HistoryEvent& event);

  EvalResult result() const;

  const topicmodel::TopicModel& changeset_model() const { return cs_model_; }
  const topicmodel::TopicModel& bug_report_model() const { return br_model_; }
  const translation::PairStore& pair_store() const { return pairs_; }
  const std::optional<translation::TranslationMatrix>& translation_matrix() const {
    return t_matrix_;
  }
  const vcs::VirtualTree& tree() const { return tree_; }
  std::int64_t last_timestamp() const { return last_timestamp_; }
  const std::string& last_changeset_sha() const { return last_sha_; }
  const std::string& last_bug_id() const { return last_bug_id_; }

 private:
  void on_bug_report(const corpus::BugReport& br);
  void on_changeset(const ChangesetEvent& event);
  void on_fix_link(const FixLink& link);
  void record_real_pairs(const std::string& sha, const corpus::Document& cs_doc);
  void maybe_record_commit_log_pair(const ChangesetEvent& event, const corpus::Document& cs_doc,
                                    bool is_fix_commit);
  void refit(bool real_pair_added);

  ReplayConfig cfg_;
  topicmodel::TopicModel cs_model_;
  topicmodel::TopicModel br_model_;
  translation::PairStore pairs_;
  std::optional<translation::TranslationMatrix> t_matrix_;
  vcs::VirtualTree tree_;
  locator::SnapshotIndexCache index_cache_;

  std::map<std::string, corpus::BugReport> bug_reports_;
  std::map<std::string, corpus::Document> bug_docs_;
  std::multimap<std::string, std::string> pending_links_;  // sha -> bug id

  std::vector<BugOutcome> outcomes_;
  TimingLog timing_;
  std::int64_t last_timestamp_ = INT64_MIN;
  std::string last_sha_;
  std::string last_bug_id_;
};

/// Runs the whole stream through a fresh engine.
EvalResult replay(const std::vector<HistoryEvent>& events, const ReplayConfig& cfg);

}  // namespace jingo::evaluation
