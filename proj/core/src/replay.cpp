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

#include "jingo/evaluation/replay.hpp"

#include <algorithm>
#include <chrono>

#include "jingo/errors.hpp"
#include "jingo/evaluation/metrics.hpp"
#include "jingo/log.hpp"

namespace jingo::evaluation {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::int64_t HistoryEvent::timestamp() const {
  return std::visit(
      [](const auto& p) -> std::int64_t {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, corpus::BugReport>) {
          return p.timestamp_reported;
        } else if constexpr (std::is_same_v<T, FixLink>) {
          return p.timestamp;
        } else {
          return p.meta.timestamp;
        }
      },
      payload);
}

int HistoryEvent::kind_rank() const { return static_cast<int>(payload.index()); }

const std::string& HistoryEvent::id() const {
  return std::visit(
      [](const auto& p) -> const std::string& {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, corpus::BugReport>) {
          return p.id;
        } else if constexpr (std::is_same_v<T, FixLink>) {
          return p.bug_id;
        } else {
          return p.meta.sha;
        }
      },
      payload);
}

HistoryEvent HistoryEvent::of(corpus::BugReport br) { return HistoryEvent{std::move(br)}; }
HistoryEvent HistoryEvent::of(FixLink link) { return HistoryEvent{std::move(link)}; }
HistoryEvent HistoryEvent::of(ChangesetEvent cs) { return HistoryEvent{std::move(cs)}; }

void sort_events(std::vector<HistoryEvent>& events) {
  std::stable_sort(events.begin(), events.end(), [](const HistoryEvent& a, const HistoryEvent& b) {
    if (a.timestamp() != b.timestamp()) return a.timestamp() < b.timestamp();
    if (a.kind_rank() != b.kind_rank()) return a.kind_rank() < b.kind_rank();
    return a.id() < b.id();
  });
}

TimingReport timing_report(const TimingLog& log) {
  TimingReport report;
  if (log.update_seconds.empty()) {
    log::warn("timing_report: no updates recorded");
    return report;
  }
  report.build_seconds = log.build_seconds;
  double total = 0.0;
  for (double s : log.update_seconds) total += s;
  report.mean_update_seconds = total / static_cast<double>(log.update_seconds.size());
  report.speedup =
      report.mean_update_seconds > 0.0 ? report.build_seconds / report.mean_update_seconds : 0.0;
  return report;
}

ReplayEngine::ReplayEngine(ReplayConfig cfg)
    : cfg_(std::move(cfg)),
      cs_model_(cfg_.changeset_model),
      br_model_(cfg_.bug_report_model),
      pairs_(static_cast<std::size_t>(cfg_.bug_report_model.k),
             static_cast<std::size_t>(cfg_.changeset_model.k)) {}

void ReplayEngine::process(const HistoryEvent& event) {
  const std::int64_t ts = event.timestamp();
  if (ts < last_timestamp_) {
    throw CausalityViolation("event " + event.id() + " at " + std::to_string(ts) +
                             " is earlier than " + std::to_string(last_timestamp_) +
                             "; export is corrupt");
  }
  last_timestamp_ = ts;

  std::visit(
      [this](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, corpus::BugReport>) {
          on_bug_report(p);
        } else if constexpr (std::is_same_v<T, FixLink>) {
          on_fix_link(p);
        } else {
          on_changeset(p);
        }
      },
      event.payload);
}

void ReplayEngine::on_bug_report(const corpus::BugReport& br) {
  bug_reports_[br.id] = br;
  last_bug_id_ = br.id;
  try {
    const corpus::Document doc = corpus::preprocess_bug_report(br, cfg_.preprocess);
    bug_docs_[br.id] = doc;
    if (cfg_.mode == ReplayMode::kJingo) {
      br_model_.expand_vocabulary(doc);
      br_model_.update({doc});
    }
  } catch (const EmptyDocument&) {
    log::warn("bug ", br.id, " preprocesses to nothing; model update skipped");
  }
}

void ReplayEngine::on_changeset(const ChangesetEvent& event) {
  last_sha_ = event.meta.sha;

  corpus::Changeset cs;
  std::optional<corpus::Document> doc;
  const auto start = Clock::now();
  try {
    cs = corpus::parse_diff(event.diff, event.meta);
    doc = corpus::preprocess_changeset(cs, cfg_.preprocess);
    cs_model_.expand_vocabulary(*doc);
    cs_model_.update({*doc});
  } catch (const MalformedDiff& e) {
    log::warn("skipping corrupt changeset ", event.meta.sha, ": ", e.what());
    return;
  } catch (const EmptyDocument&) {
    log::info("changeset ", event.meta.sha, " preprocesses to nothing; model update skipped");
    doc.reset();
  }
  const double elapsed = seconds_since(start);
  timing_.update_seconds.push_back(elapsed);
  timing_.build_seconds += elapsed;

  try {
    tree_.apply_diff(event.diff);
  } catch (const MalformedDiff& e) {
    log::warn("virtual tree skipped changeset ", event.meta.sha, ": ", e.what());
  }

  if (cfg_.mode != ReplayMode::kJingo || !doc.has_value()) return;

  const bool is_fix_commit = pending_links_.count(event.meta.sha) != 0;
  maybe_record_commit_log_pair(event, *doc, is_fix_commit);
  if (is_fix_commit) record_real_pairs(event.meta.sha, *doc);
}

void ReplayEngine::maybe_record_commit_log_pair(const ChangesetEvent& event,
                                                const corpus::Document& cs_doc,
                                                bool is_fix_commit) {
  // Commit logs only bridge the cold start; fix commits contribute their
  // real pair instead of a redundant commit-log row.
  const std::size_t required = cfg_.readiness.required_pairs(pairs_.k_br(), pairs_.k_cs());
  if (is_fix_commit || pairs_.count(translation::PairKind::kRealFix) >= required) return;

  try {
    const corpus::Document log_doc =
        corpus::preprocess_text_as_report(event.meta.sha, event.meta.message, cfg_.preprocess);
    pairs_.record_pair(br_model_.infer(log_doc), cs_model_.infer(cs_doc),
                       translation::PairKind::kCommitLog);
    if (cfg_.pair_window) pairs_.trim_to_window(*cfg_.pair_window);
    refit(/*real_pair_added=*/false);
  } catch (const EmptyDocument&) {
    log::debug("commit log of ", event.meta.sha, " preprocesses to nothing");
  }
}

void ReplayEngine::record_real_pairs(const std::string& sha, const corpus::Document& cs_doc) {
  const auto [begin, end] = pending_links_.equal_range(sha);
  bool added = false;
  for (auto it = begin; it != end; ++it) {
    const auto doc_it = bug_docs_.find(it->second);
    if (doc_it == bug_docs_.end()) {
      log::warn("fix link for bug ", it->second, " has no processable report; pair skipped");
      continue;
    }
    pairs_.record_pair(br_model_.infer(doc_it->second), cs_model_.infer(cs_doc),
                       translation::PairKind::kRealFix);
    added = true;
  }
  pending_links_.erase(begin, end);
  if (added) {
    if (cfg_.pair_window) pairs_.trim_to_window(*cfg_.pair_window);
    refit(/*real_pair_added=*/true);
  }
}

void ReplayEngine::refit(bool real_pair_added) {
  if (!is_ready(pairs_, cfg_.readiness)) return;
  // Refit on every real pair; commit-log growth only triggers the first fit.
  if (!real_pair_added && t_matrix_.has_value()) return;
  try {
    t_matrix_ = translation::fit(pairs_, cfg_.ridge, cfg_.readiness);
  } catch (const SingularSystem&) {
    log::warn("translation fit is singular, retrying with default ridge");
    t_matrix_ = translation::fit(pairs_, translation::kDefaultRidge, cfg_.readiness);
  }
}

void ReplayEngine::on_fix_link(const FixLink& link) {
  const auto bug_it = bug_reports_.find(link.bug_id);
  if (bug_it == bug_reports_.end()) {
    log::warn("fix link references unknown bug ", link.bug_id, "; skipped");
    return;
  }

  // Score first: models and tree hold strictly pre-fix data because the
  // fixing changeset sorts after its link.
  const auto snapshot = tree_.snapshot(cfg_.source_extension);
  if (snapshot.empty()) {
    log::warn("no source snapshot at fix of bug ", link.bug_id, "; skipped");
  } else {
    try {
      const locator::SnapshotIndex index =
          locator::build_snapshot_index(snapshot, cs_model_, cfg_.preprocess, &index_cache_);
      locator::LocatorConfig loc = cfg_.locator;
      loc.baseline_mode = cfg_.locator.baseline_mode || cfg_.mode == ReplayMode::kBaseline;
      const translation::TranslationMatrix* t =
          (loc.baseline_mode || !t_matrix_.has_value()) ? nullptr : &t_matrix_.value();
      const locator::Ranking ranking =
          locator::locate(bug_it->second, cs_model_, br_model_, t, index, loc, cfg_.preprocess);

      const std::set<std::string> goldset(link.fixed_files.begin(), link.fixed_files.end());
      BugOutcome outcome;
      outcome.bug_id = link.bug_id;
      outcome.reciprocal_rank = reciprocal_rank(ranking, goldset);
      outcome.average_precision = average_precision(ranking, goldset);
      outcome.best_rank = best_goldset_rank(ranking, goldset);
      outcome.hit1 = outcome.best_rank >= 1 && outcome.best_rank <= 1;
      outcome.hit3 = outcome.best_rank >= 1 && outcome.best_rank <= 3;
      outcome.hit5 = outcome.best_rank >= 1 && outcome.best_rank <= 5;
      outcomes_.push_back(std::move(outcome));
    } catch (const EmptyDocument&) {
      log::warn("bug ", link.bug_id, " preprocesses to nothing; evaluation skipped");
    }
  }

  // The translation pair is recorded when the fixing changeset itself is
  // observed (it sorts right after this event).
  if (cfg_.mode == ReplayMode::kJingo) {
    pending_links_.emplace(link.fixing_sha, link.bug_id);
  }
}

EvalResult ReplayEngine::result() const {
  EvalResult result;
  result.bugs = outcomes_;
  result.timing = timing_;

  if (!outcomes_.empty()) {
    std::vector<int> best_ranks;
    best_ranks.reserve(outcomes_.size());
    for (const BugOutcome& b : outcomes_) {
      result.mrr += b.reciprocal_rank;
      result.map += b.average_precision;
      best_ranks.push_back(b.best_rank);
    }
    result.mrr /= static_cast<double>(outcomes_.size());
    result.map /= static_cast<double>(outcomes_.size());
    result.top1 = top_at_k(best_ranks, 1);
    result.top3 = top_at_k(best_ranks, 3);
    result.top5 = top_at_k(best_ranks, 5);
  }
  return result;
}

EvalResult replay(const std::vector<HistoryEvent>& events, const ReplayConfig& cfg) {
  ReplayEngine engine(cfg);
  for (const HistoryEvent& event : events) {
    engine.process(event);
  }
  return engine.result();
}

}  // namespace jingo::evaluation
