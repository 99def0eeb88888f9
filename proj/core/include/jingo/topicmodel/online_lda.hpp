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
#include <set>
#include <string>
#include <vector>

#include "jingo/corpus/types.hpp"
#include "jingo/topicmodel/vocabulary.hpp"

namespace jingo::topicmodel {

struct LdaConfig {
  int k = 100;               // number of topics
  double alpha = 0.01;       // symmetric document-topic prior
  double eta = 0.01;         // symmetric topic-term prior
  double kappa = 0.75;       // decay exponent, (0.5, 1.0]
  double tau0 = 1.0;         // offset delaying early-update dominance
  std::uint64_t seed = 42;
  int e_step_iters = 100;
  double e_step_tol = 1e-3;  // mean absolute change of the doc-topic posterior

  /// k topics with symmetric 1/k priors.
  static LdaConfig with_topics(int k, double kappa, std::uint64_t seed = 42);

  /// Tuned values for the changeset stream: k=100, kappa=0.75.
  static LdaConfig changeset_defaults(std::uint64_t seed = 42);

  /// Tuned values for the bug-report stream: k=50, kappa=1.0.
  static LdaConfig bug_report_defaults(std::uint64_t seed = 42);

  /// Throws ConfigError when an invariant is broken (k >= 2, alpha > 0,
  /// eta > 0, 0.5 < kappa <= 1.0, tau0 >= 0).
  void validate() const;
};

/// Probability vector over a model's k topics: entries >= 0, sum 1.
struct TopicDistribution {
  std::vector<double> probs;

  std::size_t size() const { return probs.size(); }
  double operator[](std::size_t i) const { return probs[i]; }

  static TopicDistribution uniform(std::size_t k);
  /// Normalizes non-negative weights to sum 1; throws ZeroVector when the
  /// total mass is zero.
  static TopicDistribution normalized(std::vector<double> weights);
};

/// Step size of batch t: (tau0 + t)^(-kappa). The raw mathematical value;
/// update() caps the blend weight at 1.
double step_size(const LdaConfig& cfg, std::uint64_t t);

/// Online LDA over a growing vocabulary. The topic-term matrix (k x V) is
/// refined one mini-batch at a time through stochastic variational Bayes;
/// documents are plain term bags, encoded against this model's vocabulary
/// on the fly.
///
/// Thread contract: update/expand_vocabulary need exclusive access; infer
/// and perplexity are const and safe to run concurrently.
class TopicModel {
 public:
  explicit TopicModel(LdaConfig cfg);

  /// Rebuilds a model from persisted state. lambda is row-major k x V.
  static TopicModel from_state(LdaConfig cfg, Vocabulary vocab, std::vector<double> lambda,
                               std::uint64_t update_count);

  const LdaConfig& config() const { return cfg_; }
  const Vocabulary& vocab() const { return vocab_; }
  std::uint64_t update_count() const { return t_; }

  double topic_term(int topic, std::size_t term_id) const {
    return lambda_[static_cast<std::size_t>(topic) * vocab_.size() + term_id];
  }
  /// Row-major k x V topic-term weights.
  const std::vector<double>& lambda() const { return lambda_; }

  /// Assigns fresh ids to unseen terms; new lambda columns start at eta.
  /// Existing columns are never touched.
  void expand_vocabulary(const std::set<std::string>& terms);
  void expand_vocabulary(const corpus::Document& doc);

  /// Applies one mini-batch: per-document E-step to convergence, then the
  /// M-step blend lambda <- (1-rho_t) lambda + rho_t lambda_hat with
  /// rho_t = (tau0+t)^(-kappa). Deterministic given seed, state and batch
  /// order. Throws EmptyBatch for an empty batch (model unchanged).
  void update(const std::vector<corpus::Document>& batch);

  /// E-step only; never mutates the model. Out-of-vocabulary terms are
  /// ignored; a document with no in-vocabulary token yields the uniform
  /// prior posterior.
  TopicDistribution infer(const corpus::Document& doc) const;

  /// exp(-(sum_d log p(d)) / N) over in-vocabulary tokens, where log p(d)
  /// scores each token against the topic mixture sum_k theta_dk beta_kw.
  /// Throws NoTokens when the held-out set has no in-vocabulary token.
  double perplexity(const std::vector<corpus::Document>& heldout) const;

 private:
  struct EncodedDoc {
    std::vector<std::size_t> ids;
    std::vector<double> counts;
  };

  EncodedDoc encode(const corpus::Document& doc) const;
  void refresh_exp_elog_beta();
  /// Runs the E-step loop; returns the converged gamma (length k).
  std::vector<double> e_step(const EncodedDoc& doc, std::vector<double> gamma) const;

  LdaConfig cfg_;
  Vocabulary vocab_;
  std::vector<double> lambda_;         // row-major k x V, all entries > 0
  std::vector<double> exp_elog_beta_;  // row-major k x V, derived from lambda
  std::uint64_t t_ = 0;                // mini-batches applied
};

}  // namespace jingo::topicmodel
