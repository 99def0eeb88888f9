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

#include <set>
#include <string>
#include <vector>

#include "jingo/locator/locator.hpp"

namespace jingo::evaluation {

/// 1/r for the first (1-based) rank holding a goldset class; 0 when none of
/// the goldset appears in the ranking.
double reciprocal_rank(const locator::Ranking& ranking, const std::set<std::string>& goldset);

/// Mean of precision-at-rank over the relevant items found, divided by
/// |goldset|; missing goldset classes contribute 0.
double average_precision(const locator::Ranking& ranking, const std::set<std::string>& goldset);

/// Fraction of bugs with at least one goldset class ranked <= k. `hits`
/// holds, per bug, the best (1-based) goldset rank or 0 for a miss. Zero
/// bugs yields 0 with a warning.
double top_at_k(const std::vector<int>& per_bug_best_rank, int k);

/// Best 1-based rank of any goldset class, or 0 when absent.
int best_goldset_rank(const locator::Ranking& ranking, const std::set<std::string>& goldset);

}  // namespace jingo::evaluation
