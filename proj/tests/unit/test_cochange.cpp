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

#include "jingo/errors.hpp"
#include "jingo/evaluation/cochange.hpp"

using jingo::corpus::Changeset;
using jingo::corpus::FileChange;
using jingo::corpus::PreprocessConfig;
using jingo::evaluation::cochange_analysis;
using jingo::evaluation::CochangeOptions;
using jingo::topicmodel::LdaConfig;
using jingo::topicmodel::TopicModel;

namespace {

Changeset touching(const std::string& sha, std::initializer_list<std::string> paths) {
  Changeset cs;
  cs.sha = sha;
  cs.timestamp = 1;
  for (const std::string& path : paths) {
    cs.files.push_back(FileChange{path, {}});
  }
  return cs;
}

}  // namespace

TEST_SUITE("evaluation.cochange") {

TEST_CASE("always co-changed identical classes land in the top bucket at ~1") {
  // Train a tiny model so class texts infer to something meaningful.
  TopicModel model(LdaConfig::with_topics(2, 0.75, 6));
  jingo::corpus::Document d1;
  d1.source_id = "d1";
  d1.add("sharedterm", 4);
  jingo::corpus::Document d2;
  d2.source_id = "d2";
  d2.add("lonelyterm", 4);
  for (int i = 0; i < 20; ++i) {
    model.expand_vocabulary(d1);
    model.update({d1});
    model.expand_vocabulary(d2);
    model.update({d2});
  }

  std::vector<Changeset> changes;
  for (int i = 0; i < 10; ++i) {
    changes.push_back(touching("t" + std::to_string(i), {"A.java", "B.java"}));
  }
  changes.push_back(touching("solo", {"C.java"}));

  std::map<std::string, std::string> snapshot;
  snapshot["A.java"] = "sharedterm sharedterm sharedterm";
  snapshot["B.java"] = "sharedterm sharedterm sharedterm";
  snapshot["C.java"] = "lonelyterm lonelyterm lonelyterm";

  const auto report =
      cochange_analysis(changes, model, snapshot, PreprocessConfig::defaults());
  CHECK(report.classes_considered == 3);
  REQUIRE(report.high.pair_count == 1);  // (A,B) at rate 1.0
  CHECK(report.high.mean_similarity > 0.99);
  // (A,C) and (B,C): 0 shared commits -> low bucket, dissimilar text.
  CHECK(report.low.pair_count == 2);
  CHECK(report.low.mean_similarity < report.high.mean_similarity);
}

TEST_CASE("rate buckets use min-denominator co-change rates") {
  TopicModel model(LdaConfig::with_topics(2, 0.75, 6));
  jingo::corpus::Document d;
  d.source_id = "d";
  d.add("word", 3);
  model.expand_vocabulary(d);
  model.update({d});

  // P appears in 10 commits, Q in 10, together once -> 10% (mid bucket).
  std::vector<Changeset> changes;
  changes.push_back(touching("both", {"P.java", "Q.java"}));
  for (int i = 0; i < 9; ++i) {
    changes.push_back(touching("p" + std::to_string(i), {"P.java"}));
    changes.push_back(touching("q" + std::to_string(i), {"Q.java"}));
  }

  std::map<std::string, std::string> snapshot;
  snapshot["P.java"] = "word word";
  snapshot["Q.java"] = "word word";

  const auto report =
      cochange_analysis(changes, model, snapshot, PreprocessConfig::defaults());
  CHECK(report.high.pair_count == 0);
  CHECK(report.mid.pair_count == 1);
  CHECK(report.low.pair_count == 0);
}

TEST_CASE("top_n restricts the analysis to the most-changed classes") {
  TopicModel model(LdaConfig::with_topics(2, 0.75, 6));
  jingo::corpus::Document d;
  d.source_id = "d";
  d.add("word", 3);
  model.expand_vocabulary(d);
  model.update({d});

  std::vector<Changeset> changes;
  for (int i = 0; i < 5; ++i) changes.push_back(touching("ab" + std::to_string(i), {"A.java", "B.java"}));
  changes.push_back(touching("c0", {"C.java"}));

  std::map<std::string, std::string> snapshot;
  snapshot["A.java"] = "word";
  snapshot["B.java"] = "word";
  snapshot["C.java"] = "word";

  CochangeOptions opts;
  opts.top_n = 2;
  const auto report = cochange_analysis(changes, model, snapshot,
                                        PreprocessConfig::defaults(), opts);
  CHECK(report.classes_considered == 2);
  CHECK(report.high.pair_count + report.mid.pair_count + report.low.pair_count == 1);
}

TEST_CASE("fewer than two changed classes is an error") {
  TopicModel model(LdaConfig::with_topics(2, 0.75, 6));
  std::vector<Changeset> changes = {touching("s", {"Only.java"})};
  std::map<std::string, std::string> snapshot;
  snapshot["Only.java"] = "text";
  CHECK_THROWS_AS(
      cochange_analysis(changes, model, snapshot, PreprocessConfig::defaults()),
      jingo::TooFewClasses);

  // Changed files missing from the snapshot do not count either.
  std::vector<Changeset> ghost = {touching("g", {"Gone.java", "Only.java"})};
  CHECK_THROWS_AS(cochange_analysis(ghost, model, snapshot, PreprocessConfig::defaults()),
                  jingo::TooFewClasses);
}

}  // TEST_SUITE
