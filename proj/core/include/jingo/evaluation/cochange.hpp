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

#include <map>
#include <string>
#include <vector>

#include "jingo/corpus/preprocess.hpp"
#include "jingo/corpus/types.hpp"
#include "jingo/topicmodel/online_lda.hpp"

namespace jingo::evaluation {

struct CochangeOptions {
  double high_threshold = 0.20;
  double low_threshold = 0.05;
  std::size_t top_n = 100;  // most-changed classes considered
};

struct CochangeBucket {
  std::size_t pair_count = 0;
  double mean_similarity = 0.0;
};

struct CochangeReport {
  CochangeBucket high;  // co-changed >= 20% of the time
  CochangeBucket mid;   // [5%, 20%)
  CochangeBucket low;   // < 5%
  std::size_t classes_considered = 0;
};

/// Buckets class pairs among the top_n most-changed classes by co-change
/// rate |shared commits| / min(|commits_i|, |commits_j|) and reports the
/// mean cosine similarity of their class-text topic distributions per
/// bucket. Throws TooFewClasses when fewer than two snapshot classes have a
/// change history.
CochangeReport cochange_analysis(const std::vector<corpus::Changeset>& changesets,
                                 const topicmodel::TopicModel& model,
                                 const std::map<std::string, std::string>& snapshot,
                                 const corpus::PreprocessConfig& pre,
                                 const CochangeOptions& opts = {});

}  // namespace jingo::evaluation
