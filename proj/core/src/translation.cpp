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

#include "jingo/translation/translation.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "jingo/errors.hpp"
#include "jingo/log.hpp"

namespace jingo::translation {

std::size_t ReadinessPolicy::required_pairs(std::size_t k_br, std::size_t k_cs) const {
  const double raw = omega * static_cast<double>(std::max(k_br, k_cs));
  return static_cast<std::size_t>(std::ceil(raw));
}

std::size_t PairStore::count(PairKind kind) const {
  std::size_t n = 0;
  for (PairKind k : kinds_) {
    if (k == kind) ++n;
  }
  return n;
}

void PairStore::record_pair(const TopicDistribution& b, const TopicDistribution& a,
                            PairKind kind) {
  if (b.size() != k_br_) {
    throw DimensionMismatch("record_pair: bug-side length " + std::to_string(b.size()) +
                            " != " + std::to_string(k_br_));
  }
  if (a.size() != k_cs_) {
    throw DimensionMismatch("record_pair: changeset-side length " + std::to_string(a.size()) +
                            " != " + std::to_string(k_cs_));
  }
  rows_b_.push_back(b.probs);
  rows_a_.push_back(a.probs);
  kinds_.push_back(kind);
}

void PairStore::trim_to_window(std::size_t max_pairs) {
  if (kinds_.size() <= max_pairs) return;
  const std::size_t drop = kinds_.size() - max_pairs;
  rows_b_.erase(rows_b_.begin(), rows_b_.begin() + static_cast<std::ptrdiff_t>(drop));
  rows_a_.erase(rows_a_.begin(), rows_a_.begin() + static_cast<std::ptrdiff_t>(drop));
  kinds_.erase(kinds_.begin(), kinds_.begin() + static_cast<std::ptrdiff_t>(drop));
}

bool is_ready(const PairStore& store, const ReadinessPolicy& policy) {
  return store.size() >= policy.required_pairs(store.k_br(), store.k_cs());
}

TranslationMatrix fit_least_squares(const std::vector<std::vector<double>>& rows_b,
                                    const std::vector<std::vector<double>>& rows_a,
                                    std::size_t k_br, std::size_t k_cs, double ridge) {
  const std::size_t n = rows_b.size();
  if (n != rows_a.size()) {
    throw DimensionMismatch("fit: B and A row counts differ");
  }

  Eigen::MatrixXd b(n, k_br);
  Eigen::MatrixXd a(n, k_cs);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows_b[i].size() != k_br || rows_a[i].size() != k_cs) {
      throw DimensionMismatch("fit: row length disagrees with topic counts");
    }
    for (std::size_t j = 0; j < k_br; ++j) b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows_b[i][j];
    for (std::size_t j = 0; j < k_cs; ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows_a[i][j];
  }

  Eigen::MatrixXd gram = b.transpose() * b;
  if (ridge == 0.0) {
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
    if (lu.rank() < static_cast<Eigen::Index>(k_br)) {
      throw SingularSystem("fit: B^T B is rank deficient and no ridge was requested");
    }
  } else {
    gram.diagonal().array() += ridge;
  }

  const Eigen::MatrixXd rhs = b.transpose() * a;
  const Eigen::MatrixXd solution = gram.ldlt().solve(rhs);

  TranslationMatrix t;
  t.rows = k_br;
  t.cols = k_cs;
  t.fitted_on = n;
  t.data.resize(k_br * k_cs);
  for (std::size_t r = 0; r < k_br; ++r) {
    for (std::size_t c = 0; c < k_cs; ++c) {
      t.data[r * k_cs + c] = solution(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return t;
}

TranslationMatrix fit(const PairStore& store, double ridge, const ReadinessPolicy& policy) {
  const std::size_t required = policy.required_pairs(store.k_br(), store.k_cs());
  if (store.size() < required) {
    throw NotReady("fit: " + std::to_string(store.size()) + " pairs recorded, " +
                   std::to_string(required) + " required");
  }

  // Commit-log pairs only bridge the cold start; once real fixes alone meet
  // the threshold, fits use real pairs only.
  const bool real_only = store.count(PairKind::kRealFix) >= required;
  if (!real_only) {
    return fit_least_squares(store.rows_b(), store.rows_a(), store.k_br(), store.k_cs(), ridge);
  }

  std::vector<std::vector<double>> rows_b;
  std::vector<std::vector<double>> rows_a;
  for (std::size_t i = 0; i < store.size(); ++i) {
    if (store.kinds()[i] == PairKind::kRealFix) {
      rows_b.push_back(store.rows_b()[i]);
      rows_a.push_back(store.rows_a()[i]);
    }
  }
  return fit_least_squares(rows_b, rows_a, store.k_br(), store.k_cs(), ridge);
}

TopicDistribution translate(const TranslationMatrix& t, const TopicDistribution& b,
                            bool* degenerate) {
  if (b.size() != t.rows) {
    throw DimensionMismatch("translate: distribution length " + std::to_string(b.size()) +
                            " != " + std::to_string(t.rows));
  }
  if (degenerate != nullptr) *degenerate = false;

  std::vector<double> product(t.cols, 0.0);
  for (std::size_t r = 0; r < t.rows; ++r) {
    const double weight = b[r];
    if (weight == 0.0) continue;
    const double* row = t.data.data() + r * t.cols;
    for (std::size_t c = 0; c < t.cols; ++c) product[c] += weight * row[c];
  }

  double mass = 0.0;
  for (double& v : product) {
    if (v < 0.0) v = 0.0;
    mass += v;
  }
  if (!(mass > 0.0)) {
    log::warn("translate: clamped product is all-zero, returning uniform");
    if (degenerate != nullptr) *degenerate = true;
    return TopicDistribution::uniform(t.cols);
  }
  for (double& v : product) v /= mass;
  return TopicDistribution{std::move(product)};
}

}  // namespace jingo::translation
