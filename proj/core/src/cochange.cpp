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

#include "jingo/evaluation/cochange.hpp"

#include <algorithm>
#include <set>

#include "jingo/errors.hpp"
#include "jingo/locator/locator.hpp"

namespace jingo::evaluation {

CochangeReport cochange_analysis(const std::vector<corpus::Changeset>& changesets,
                                 const topicmodel::TopicModel& model,
                                 const std::map<std::string, std::string>& snapshot,
                                 const corpus::PreprocessConfig& pre,
                                 const CochangeOptions& opts) {
  // Per-class set of changeset indices, restricted to snapshot classes.
  std::map<std::string, std::set<std::size_t>> history;
  for (std::size_t i = 0; i < changesets.size(); ++i) {
    for (const corpus::FileChange& file : changesets[i].files) {
      if (snapshot.count(file.path) != 0) history[file.path].insert(i);
    }
  }
  if (history.size() < 2) {
    throw TooFewClasses("cochange_analysis: need at least 2 changed classes, have " +
                        std::to_string(history.size()));
  }

  // Top-N most changed, ties by path for determinism.
  std::vector<const std::pair<const std::string, std::set<std::size_t>>*> ranked;
  ranked.reserve(history.size());
  for (const auto& entry : history) ranked.push_back(&entry);
  std::sort(ranked.begin(), ranked.end(), [](const auto* a, const auto* b) {
    if (a->second.size() != b->second.size()) return a->second.size() > b->second.size();
    return a->first < b->first;
  });
  if (ranked.size() > opts.top_n) ranked.resize(opts.top_n);

  std::vector<topicmodel::TopicDistribution> dists;
  dists.reserve(ranked.size());
  for (const auto* entry : ranked) {
    const corpus::Document doc =
        corpus::preprocess_code_text(entry->first, snapshot.at(entry->first), pre);
    dists.push_back(model.infer(doc));
  }

  CochangeReport report;
  report.classes_considered = ranked.size();
  double sum_high = 0.0;
  double sum_mid = 0.0;
  double sum_low = 0.0;

  for (std::size_t i = 0; i < ranked.size(); ++i) {
    for (std::size_t j = i + 1; j < ranked.size(); ++j) {
      const std::set<std::size_t>& ci = ranked[i]->second;
      const std::set<std::size_t>& cj = ranked[j]->second;
      std::size_t shared = 0;
      for (std::size_t commit : ci) {
        if (cj.count(commit) != 0) ++shared;
      }
      const double rate =
          static_cast<double>(shared) / static_cast<double>(std::min(ci.size(), cj.size()));
      const double similarity = 1.0 - locator::cosine_distance(dists[i], dists[j]);

      if (rate >= opts.high_threshold) {
        ++report.high.pair_count;
        sum_high += similarity;
      } else if (rate >= opts.low_threshold) {
        ++report.mid.pair_count;
        sum_mid += similarity;
      } else {
        ++report.low.pair_count;
        sum_low += similarity;
      }
    }
  }

  if (report.high.pair_count > 0) {
    report.high.mean_similarity = sum_high / static_cast<double>(report.high.pair_count);
  }
  if (report.mid.pair_count > 0) {
    report.mid.mean_similarity = sum_mid / static_cast<double>(report.mid.pair_count);
  }
  if (report.low.pair_count > 0) {
    report.low.mean_similarity = sum_low / static_cast<double>(report.low.pair_count);
  }
  return report;
}

}  // namespace jingo::evaluation
