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

#include "jingo/evaluation/metrics.hpp"

#include "jingo/log.hpp"

namespace jingo::evaluation {

double reciprocal_rank(const locator::Ranking& ranking, const std::set<std::string>& goldset) {
  const int rank = best_goldset_rank(ranking, goldset);
  return rank == 0 ? 0.0 : 1.0 / static_cast<double>(rank);
}

double average_precision(const locator::Ranking& ranking, const std::set<std::string>& goldset) {
  if (goldset.empty()) return 0.0;
  double sum = 0.0;
  int relevant_seen = 0;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (goldset.count(ranking[i].path) != 0) {
      ++relevant_seen;
      sum += static_cast<double>(relevant_seen) / static_cast<double>(i + 1);
    }
  }
  return sum / static_cast<double>(goldset.size());
}

double top_at_k(const std::vector<int>& per_bug_best_rank, int k) {
  if (per_bug_best_rank.empty()) {
    log::warn("top_at_k: no bugs evaluated, reporting 0");
    return 0.0;
  }
  std::size_t hits = 0;
  for (int rank : per_bug_best_rank) {
    if (rank >= 1 && rank <= k) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(per_bug_best_rank.size());
}

int best_goldset_rank(const locator::Ranking& ranking, const std::set<std::string>& goldset) {
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (goldset.count(ranking[i].path) != 0) return static_cast<int>(i + 1);
  }
  return 0;
}

}  // namespace jingo::evaluation
