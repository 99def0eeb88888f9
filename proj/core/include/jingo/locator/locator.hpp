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
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "jingo/corpus/preprocess.hpp"
#include "jingo/corpus/types.hpp"
#include "jingo/topicmodel/online_lda.hpp"
#include "jingo/translation/translation.hpp"

namespace jingo::locator {

using topicmodel::TopicDistribution;

struct LocatorConfig {
  double gamma = 5.0;          // amplifier for the changeset-side distribution
  bool baseline_mode = false;  // rank from the changeset distribution only
};

/// One class of the snapshot: its path and the topic distribution of each
/// method-like unit, inferred under the current changeset model.
struct IndexedClass {
  std::string path;
  std::vector<TopicDistribution> methods;  // never empty
};

struct SnapshotIndex {
  std::vector<IndexedClass> classes;        // sorted by path
  std::set<std::string> class_names;        // simple names, feeds code_token_ratio
};

/// Skips re-inference of unchanged files under an unchanged model version.
/// Keyed by (model update count, path, content hash).
class SnapshotIndexCache {
 public:
  const std::vector<TopicDistribution>* find(std::uint64_t model_version, const std::string& path,
                                             std::size_t content_hash) const;
  void put(std::uint64_t model_version, const std::string& path, std::size_t content_hash,
           std::vector<TopicDistribution> methods);

 private:
  struct Entry {
    std::uint64_t model_version;
    std::size_t content_hash;
    std::vector<TopicDistribution> methods;
  };
  std::unordered_map<std::string, Entry> entries_;
};

/// Builds the index for a snapshot: each file is segmented into method-like
/// units, preprocessed through the changeset pipeline and inferred under the
/// changeset model. Files are (path, source text) pairs.
SnapshotIndex build_snapshot_index(const std::map<std::string, std::string>& files,
                                   const topicmodel::TopicModel& cs_model,
                                   const corpus::PreprocessConfig& pre,
                                   SnapshotIndexCache* cache = nullptr);

/// norm(dist_cs * lambda_ratio * gamma + dist_co * (1 - lambda_ratio)).
/// lambda_ratio = 0 and 1 collapse exactly to dist_co and dist_cs.
TopicDistribution combine(const TopicDistribution& dist_cs, const TopicDistribution& dist_co,
                          double lambda_ratio, double gamma);

/// 1 - cos(a, b); in [0, 1] for non-negative vectors. Throws ZeroVector.
double cosine_distance(const TopicDistribution& a, const TopicDistribution& b);

struct RankedClass {
  std::string path;
  double distance;
};

/// Classes sorted by ascending distance; ties broken by path.
using Ranking = std::vector<RankedClass>;

/// Scores every class by the minimum cosine distance between the query and
/// any of its method distributions.
Ranking rank_classes(const TopicDistribution& query, const SnapshotIndex& index);

/// Full query pipeline for one bug report. When `t` is null or baseline
/// mode is set, the query is the changeset-related distribution alone;
/// otherwise the bug-related distribution is translated and blended with it
/// according to the report's code-token ratio.
Ranking locate(const corpus::BugReport& br, const topicmodel::TopicModel& cs_model,
               const topicmodel::TopicModel& br_model, const translation::TranslationMatrix* t,
               const SnapshotIndex& index, const LocatorConfig& cfg,
               const corpus::PreprocessConfig& pre);

}  // namespace jingo::locator
