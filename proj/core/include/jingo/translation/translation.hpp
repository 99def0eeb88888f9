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
#include <vector>

#include "jingo/topicmodel/online_lda.hpp"

namespace jingo::translation {

using topicmodel::TopicDistribution;

/// Origin of one training pair: a real fixed-bug/fixing-changeset event, or
/// a commit-log/changeset pair used only for cold start.
enum class PairKind : std::uint8_t { kRealFix = 0, kCommitLog = 1 };

/// Minimum training data before T may be fit: ceil(omega * max(k_br, k_cs))
/// pairs.
struct ReadinessPolicy {
  double omega = 1.5;

  std::size_t required_pairs(std::size_t k_br, std::size_t k_cs) const;
};

/// Accumulates aligned rows of the B (bug-report side) and A (changeset
/// side) design matrices. Row i of both sides originates from the same fix
/// event or the same commit.
class PairStore {
 public:
  PairStore(std::size_t k_br, std::size_t k_cs) : k_br_(k_br), k_cs_(k_cs) {}

  std::size_t k_br() const { return k_br_; }
  std::size_t k_cs() const { return k_cs_; }
  std::size_t size() const { return kinds_.size(); }
  std::size_t count(PairKind kind) const;

  const std::vector<std::vector<double>>& rows_b() const { return rows_b_; }
  const std::vector<std::vector<double>>& rows_a() const { return rows_a_; }
  const std::vector<PairKind>& kinds() const { return kinds_; }

  /// Appends one aligned row to each side. Throws DimensionMismatch when a
  /// vector length disagrees with the store's topic counts.
  void record_pair(const TopicDistribution& b, const TopicDistribution& a, PairKind kind);

  /// Drops the oldest rows beyond `max_pairs`; the optional window-based cap
  /// on translation training cost.
  void trim_to_window(std::size_t max_pairs);

 private:
  std::size_t k_br_;
  std::size_t k_cs_;
  std::vector<std::vector<double>> rows_b_;
  std::vector<std::vector<double>> rows_a_;
  std::vector<PairKind> kinds_;
};

bool is_ready(const PairStore& store, const ReadinessPolicy& policy);

/// Dense k_br x k_cs map from bug-report topic space to changeset topic
/// space; entries may be negative (unconstrained least squares).
struct TranslationMatrix {
  std::size_t rows = 0;  // k_br
  std::size_t cols = 0;  // k_cs
  std::vector<double> data;  // row-major
  std::size_t fitted_on = 0;  // pair count at fit time

  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

inline constexpr double kDefaultRidge = 1e-6;

/// Solves (B^T B + ridge I) T = B^T A. With ridge = 0 and full-rank B this
/// is the exact least-squares minimizer of |BT - A|^2.
///
/// Throws SingularSystem when ridge = 0 was requested and B is rank
/// deficient; callers retry with kDefaultRidge.
TranslationMatrix fit_least_squares(const std::vector<std::vector<double>>& rows_b,
                                    const std::vector<std::vector<double>>& rows_a,
                                    std::size_t k_br, std::size_t k_cs, double ridge);

/// Fits T from the store, honoring cold-start retirement: once real
/// bug-fix pairs alone satisfy the policy, commit-log rows are excluded.
/// Throws NotReady when the store has too few pairs.
TranslationMatrix fit(const PairStore& store, double ridge, const ReadinessPolicy& policy);

/// Maps a bug-report distribution into changeset topic space: b^T T, with
/// negative entries clamped to zero and the result L1-normalized. An
/// all-zero product degenerates to the uniform distribution; `degenerate`,
/// when non-null, reports that case.
TopicDistribution translate(const TranslationMatrix& t, const TopicDistribution& b,
                            bool* degenerate = nullptr);

}  // namespace jingo::translation
