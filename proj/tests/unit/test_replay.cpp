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

#include <doctest.h>

#include <sstream>

#include "../support/synthetic.hpp"
#include "jingo/errors.hpp"
#include "jingo/evaluation/replay.hpp"
#include "jingo/io/streams.hpp"

using namespace jingo::evaluation;
using jingo::corpus::BugReport;

namespace {

ReplayConfig small_config(ReplayMode mode, std::uint64_t seed = 7) {
  ReplayConfig cfg;
  cfg.changeset_model = jingo::topicmodel::LdaConfig::with_topics(10, 0.75, seed);
  cfg.bug_report_model = jingo::topicmodel::LdaConfig::with_topics(8, 1.0, seed);
  cfg.mode = mode;
  return cfg;
}

ChangesetEvent simple_changeset(const std::string& sha, std::int64_t ts, const std::string& path,
                                const std::string& line, const std::string& message = "edit") {
  ChangesetEvent event;
  event.meta.sha = sha;
  event.meta.timestamp = ts;
  event.meta.author = "dev";
  event.meta.message = message;
  event.diff = "diff --git a/" + path + " b/" + path +
               "\n--- /dev/null\n+++ b/" + path + "\n@@ -0,0 +1,3 @@\n+public class X {\n+    " +
               line + "\n+}\n";
  return event;
}

std::string metrics_table(const EvalResult& result) {
  std::ostringstream out;
  jingo::io::write_metrics_table(out, result);
  return out.str();
}

}  // namespace

TEST_SUITE("evaluation.replay") {

TEST_CASE("event ordering: reports, then links, then changesets") {
  std::vector<HistoryEvent> events;
  events.push_back(HistoryEvent::of(simple_changeset("s1", 100, "A.java", "x.y();")));
  FixLink link;
  link.bug_id = "b1";
  link.fixing_sha = "s1";
  link.fixed_files = {"A.java"};
  link.timestamp = 100;
  events.push_back(HistoryEvent::of(link));
  BugReport report;
  report.id = "b1";
  report.timestamp_reported = 100;
  report.summary = "tied report";
  events.push_back(HistoryEvent::of(report));

  sort_events(events);
  CHECK(events[0].kind_rank() == 0);  // bug report
  CHECK(events[1].kind_rank() == 1);  // fix link
  CHECK(events[2].kind_rank() == 2);  // changeset
}

TEST_CASE("going backwards in time aborts with CausalityViolation") {
  ReplayEngine engine(small_config(ReplayMode::kBaseline));
  engine.process(HistoryEvent::of(simple_changeset("s1", 200, "A.java", "a.b();")));
  CHECK_THROWS_AS(
      engine.process(HistoryEvent::of(simple_changeset("s0", 100, "B.java", "c.d();"))),
      jingo::CausalityViolation);
}

TEST_CASE("a stream with no fix links produces timings but no bug rows") {
  ReplayEngine engine(small_config(ReplayMode::kJingo));
  engine.process(HistoryEvent::of(simple_changeset("s1", 100, "A.java", "alpha.beta();")));
  engine.process(HistoryEvent::of(simple_changeset("s2", 200, "B.java", "gamma.delta();")));
  const EvalResult result = engine.result();
  CHECK(result.bugs.empty());
  CHECK(result.timing.update_seconds.size() == 2);
  CHECK(result.timing.build_seconds > 0.0);
}

TEST_CASE("a bug whose goldset class ranks first scores 1 everywhere") {
  // Two classes with disjoint vocabularies; the report speaks the first
  // class's language, baseline mode.
  std::vector<HistoryEvent> events;
  std::int64_t ts = 100;
  for (int i = 0; i < 12; ++i) {
    events.push_back(HistoryEvent::of(simple_changeset(
        "a" + std::to_string(i), ts, "Zebra.java", "zebra.stripe(zebra);", "zebra work")));
    ts += 10;
    events.push_back(HistoryEvent::of(simple_changeset(
        "b" + std::to_string(i), ts, "Yonder.java", "yonder.hill(yonder);", "yonder work")));
    ts += 10;
  }
  BugReport report;
  report.id = "bug1";
  report.timestamp_reported = ts;
  report.summary = "zebra stripe is wrong";
  events.push_back(HistoryEvent::of(report));
  ts += 10;
  FixLink link;
  link.bug_id = "bug1";
  link.fixing_sha = "fix1";
  link.fixed_files = {"Zebra.java"};
  link.timestamp = ts;
  events.push_back(HistoryEvent::of(link));
  events.push_back(
      HistoryEvent::of(simple_changeset("fix1", ts, "Zebra.java", "zebra.fixed();")));

  sort_events(events);
  const EvalResult result = replay(events, small_config(ReplayMode::kBaseline));
  REQUIRE(result.bugs.size() == 1);
  CHECK(result.bugs[0].reciprocal_rank == doctest::Approx(1.0));
  CHECK(result.mrr == doctest::Approx(1.0));
  CHECK(result.map == doctest::Approx(1.0));
  CHECK(result.top1 == doctest::Approx(1.0));
}

TEST_CASE("replay on a synthetic history is deterministic and in range") {
  synthetic::Options opts;
  opts.groups = 3;
  opts.classes_per_group = 3;
  opts.edit_changesets = 60;
  opts.bugs = 9;
  opts.nl_bugs = 3;
  opts.seed = 12;
  const synthetic::History history = synthetic::make_history(opts);
  CHECK(history.changeset_count == 3 + 60 + 9);

  const ReplayConfig cfg = small_config(ReplayMode::kJingo, 3);
  const EvalResult first = replay(history.events, cfg);
  const EvalResult second = replay(history.events, cfg);

  REQUIRE_FALSE(first.bugs.empty());
  CHECK(metrics_table(first) == metrics_table(second));  // byte-identical
  for (const BugOutcome& bug : first.bugs) {
    CHECK(bug.reciprocal_rank >= 0.0);
    CHECK(bug.reciprocal_rank <= 1.0);
    CHECK(bug.average_precision >= 0.0);
    CHECK(bug.average_precision <= 1.0);
  }
  CHECK(first.top1 <= first.top3);
  CHECK(first.top3 <= first.top5);
}

TEST_CASE("future events cannot leak into an evaluation point") {
  synthetic::Options opts;
  opts.groups = 3;
  opts.classes_per_group = 3;
  opts.edit_changesets = 80;
  opts.bugs = 12;
  opts.nl_bugs = 4;
  opts.seed = 31;
  const synthetic::History history = synthetic::make_history(opts);

  // Cut right after the 6th fix link.
  int links_seen = 0;
  std::size_t cut = 0;
  for (std::size_t i = 0; i < history.events.size(); ++i) {
    if (history.events[i].kind_rank() == 1 && ++links_seen == 6) {
      cut = i;
      break;
    }
  }
  REQUIRE(links_seen == 6);

  std::vector<HistoryEvent> truncated(history.events.begin(),
                                      history.events.begin() + static_cast<long>(cut) + 1);

  // Full stream with a marker term injected into every post-cut changeset.
  std::vector<HistoryEvent> marked = history.events;
  for (std::size_t i = cut + 1; i < marked.size(); ++i) {
    if (auto* cs = std::get_if<ChangesetEvent>(&marked[i].payload)) {
      std::string& diff = cs->diff;
      std::string out;
      std::istringstream in(diff);
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '+' && line.rfind("+++", 0) != 0) {
          line += " zzmarker";
        }
        out += line;
        out += '\n';
      }
      diff = out;
    }
  }

  const ReplayConfig cfg = small_config(ReplayMode::kJingo, 4);
  const EvalResult from_truncated = replay(truncated, cfg);
  const EvalResult from_full = replay(marked, cfg);

  REQUIRE(from_truncated.bugs.size() == 6);
  REQUIRE(from_full.bugs.size() >= 6);
  for (std::size_t i = 0; i < from_truncated.bugs.size(); ++i) {
    CHECK(from_truncated.bugs[i].bug_id == from_full.bugs[i].bug_id);
    CHECK(from_truncated.bugs[i].reciprocal_rank == from_full.bugs[i].reciprocal_rank);
    CHECK(from_truncated.bugs[i].average_precision == from_full.bugs[i].average_precision);
    CHECK(from_truncated.bugs[i].best_rank == from_full.bugs[i].best_rank);
  }
}

TEST_CASE("baseline mode records no translation pairs") {
  synthetic::Options opts;
  opts.groups = 2;
  opts.classes_per_group = 2;
  opts.edit_changesets = 30;
  opts.bugs = 4;
  opts.nl_bugs = 0;
  opts.seed = 8;
  const synthetic::History history = synthetic::make_history(opts);

  ReplayEngine baseline(small_config(ReplayMode::kBaseline));
  for (const auto& event : history.events) baseline.process(event);
  CHECK(baseline.pair_store().size() == 0);
  CHECK_FALSE(baseline.translation_matrix().has_value());

  ReplayEngine jingo_mode(small_config(ReplayMode::kJingo));
  for (const auto& event : history.events) jingo_mode.process(event);
  CHECK(jingo_mode.pair_store().size() > 0);
  CHECK(jingo_mode.pair_store().count(jingo::translation::PairKind::kRealFix) == 4);
}

TEST_CASE("timing_report aggregates and guards the empty log") {
  TimingLog log;
  log.build_seconds = 100.0;
  log.update_seconds.assign(100, 1.0);
  const TimingReport report = timing_report(log);
  CHECK(report.build_seconds == doctest::Approx(100.0));
  CHECK(report.mean_update_seconds == doctest::Approx(1.0));
  CHECK(report.speedup == doctest::Approx(100.0));

  const TimingReport empty = timing_report(TimingLog{});
  CHECK(empty.build_seconds == 0.0);
  CHECK(empty.mean_update_seconds == 0.0);
  CHECK(empty.speedup == 0.0);
}

}  // TEST_SUITE
