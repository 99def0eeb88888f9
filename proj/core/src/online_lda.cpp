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

#include "jingo/topicmodel/online_lda.hpp"

#include <cmath>
#include <random>

#include "jingo/errors.hpp"
#include "jingo/log.hpp"

namespace jingo::topicmodel {

namespace {

constexpr double kPhiFloor = 1e-100;

double digamma(double x) {
  double result = 0.0;
  while (x < 6.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double r = 1.0 / x;
  const double r2 = r * r;
  result += std::log(x) - 0.5 * r;
  result -= r2 * (1.0 / 12.0 -
                  r2 * (1.0 / 120.0 -
                        r2 * (1.0 / 252.0 - r2 * (1.0 / 240.0 - r2 * (1.0 / 132.0)))));
  return result;
}

// E[log theta_k] under Dirichlet(gamma), exponentiated.
void exp_dirichlet_expectation(const std::vector<double>& gamma, std::vector<double>& out) {
  double sum = 0.0;
  for (double g : gamma) sum += g;
  const double psi_sum = digamma(sum);
  out.resize(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    out[i] = std::exp(digamma(gamma[i]) - psi_sum);
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) from raw engine output; avoids the implementation-defined
// std::uniform_real_distribution so runs reproduce across standard libraries.
double canonical(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

LdaConfig LdaConfig::with_topics(int k, double kappa, std::uint64_t seed) {
  LdaConfig cfg;
  cfg.k = k;
  cfg.alpha = 1.0 / k;
  cfg.eta = 1.0 / k;
  cfg.kappa = kappa;
  cfg.seed = seed;
  cfg.validate();
  return cfg;
}

LdaConfig LdaConfig::changeset_defaults(std::uint64_t seed) {
  return with_topics(100, 0.75, seed);
}

LdaConfig LdaConfig::bug_report_defaults(std::uint64_t seed) {
  return with_topics(50, 1.0, seed);
}

void LdaConfig::validate() const {
  if (k < 2) throw ConfigError("LdaConfig: k must be >= 2");
  if (alpha <= 0.0) throw ConfigError("LdaConfig: alpha must be > 0");
  if (eta <= 0.0) throw ConfigError("LdaConfig: eta must be > 0");
  if (kappa <= 0.5 || kappa > 1.0) throw ConfigError("LdaConfig: kappa must be in (0.5, 1.0]");
  if (tau0 < 0.0) throw ConfigError("LdaConfig: tau0 must be >= 0");
  if (e_step_iters < 1) throw ConfigError("LdaConfig: e_step_iters must be >= 1");
  if (e_step_tol <= 0.0) throw ConfigError("LdaConfig: e_step_tol must be > 0");
}

TopicDistribution TopicDistribution::uniform(std::size_t k) {
  return TopicDistribution{std::vector<double>(k, 1.0 / static_cast<double>(k))};
}

TopicDistribution TopicDistribution::normalized(std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) sum += w;
  if (!(sum > 0.0)) throw ZeroVector("cannot normalize zero-mass vector");
  for (double& w : weights) w /= sum;
  return TopicDistribution{std::move(weights)};
}

double step_size(const LdaConfig& cfg, std::uint64_t t) {
  return std::pow(cfg.tau0 + static_cast<double>(t), -cfg.kappa);
}

TopicModel::TopicModel(LdaConfig cfg) : cfg_(cfg) {
  cfg_.validate();
}

TopicModel TopicModel::from_state(LdaConfig cfg, Vocabulary vocab, std::vector<double> lambda,
                                  std::uint64_t update_count) {
  cfg.validate();
  if (lambda.size() != static_cast<std::size_t>(cfg.k) * vocab.size()) {
    throw ConfigError("TopicModel::from_state: lambda size does not match k x V");
  }
  for (double v : lambda) {
    if (!(v > 0.0)) throw ConfigError("TopicModel::from_state: lambda entries must be > 0");
  }
  TopicModel model(cfg);
  model.vocab_ = std::move(vocab);
  model.lambda_ = std::move(lambda);
  model.t_ = update_count;
  model.refresh_exp_elog_beta();
  return model;
}

void TopicModel::expand_vocabulary(const std::set<std::string>& terms) {
  std::vector<std::string> fresh;
  for (const std::string& term : terms) {
    if (!vocab_.contains(term)) fresh.push_back(term);
  }
  if (fresh.empty()) return;

  const std::size_t old_v = vocab_.size();
  const std::size_t new_v = old_v + fresh.size();
  const std::size_t k = static_cast<std::size_t>(cfg_.k);

  std::vector<double> grown(k * new_v, cfg_.eta);
  for (std::size_t topic = 0; topic < k; ++topic) {
    std::copy(lambda_.begin() + topic * old_v, lambda_.begin() + (topic + 1) * old_v,
              grown.begin() + topic * new_v);
  }
  lambda_ = std::move(grown);
  for (const std::string& term : fresh) vocab_.add(term);
  refresh_exp_elog_beta();
}

void TopicModel::expand_vocabulary(const corpus::Document& doc) {
  std::set<std::string> terms;
  for (const auto& [term, count] : doc.term_counts) terms.insert(term);
  expand_vocabulary(terms);
}

TopicModel::EncodedDoc TopicModel::encode(const corpus::Document& doc) const {
  EncodedDoc enc;
  enc.ids.reserve(doc.term_counts.size());
  enc.counts.reserve(doc.term_counts.size());
  for (const auto& [term, count] : doc.term_counts) {
    if (auto id = vocab_.id_of(term)) {
      enc.ids.push_back(*id);
      enc.counts.push_back(static_cast<double>(count));
    }
  }
  return enc;
}

void TopicModel::refresh_exp_elog_beta() {
  const std::size_t k = static_cast<std::size_t>(cfg_.k);
  const std::size_t v = vocab_.size();
  exp_elog_beta_.resize(k * v);
  for (std::size_t topic = 0; topic < k; ++topic) {
    const double* row = lambda_.data() + topic * v;
    double sum = 0.0;
    for (std::size_t i = 0; i < v; ++i) sum += row[i];
    const double psi_sum = digamma(sum);
    double* out = exp_elog_beta_.data() + topic * v;
    for (std::size_t i = 0; i < v; ++i) {
      out[i] = std::exp(digamma(row[i]) - psi_sum);
    }
  }
}

std::vector<double> TopicModel::e_step(const EncodedDoc& doc, std::vector<double> gamma) const {
  const std::size_t k = static_cast<std::size_t>(cfg_.k);
  const std::size_t v = vocab_.size();
  const std::size_t m = doc.ids.size();

  std::vector<double> exp_elog_theta(k);
  std::vector<double> phinorm(m);
  exp_dirichlet_expectation(gamma, exp_elog_theta);

  auto compute_phinorm = [&] {
    for (std::size_t w = 0; w < m; ++w) {
      double dot = 0.0;
      const std::size_t col = doc.ids[w];
      for (std::size_t topic = 0; topic < k; ++topic) {
        dot += exp_elog_theta[topic] * exp_elog_beta_[topic * v + col];
      }
      phinorm[w] = dot + kPhiFloor;
    }
  };
  compute_phinorm();

  std::vector<double> last(k);
  for (int iter = 0; iter < cfg_.e_step_iters; ++iter) {
    last = gamma;
    for (std::size_t topic = 0; topic < k; ++topic) {
      double acc = 0.0;
      for (std::size_t w = 0; w < m; ++w) {
        acc += doc.counts[w] / phinorm[w] * exp_elog_beta_[topic * v + doc.ids[w]];
      }
      gamma[topic] = cfg_.alpha + exp_elog_theta[topic] * acc;
    }
    exp_dirichlet_expectation(gamma, exp_elog_theta);
    compute_phinorm();

    double mean_change = 0.0;
    for (std::size_t topic = 0; topic < k; ++topic) {
      mean_change += std::fabs(gamma[topic] - last[topic]);
    }
    mean_change /= static_cast<double>(k);
    if (mean_change < cfg_.e_step_tol) break;
  }
  return gamma;
}

void TopicModel::update(const std::vector<corpus::Document>& batch) {
  if (batch.empty()) {
    throw EmptyBatch("update called with an empty batch");
  }

  const std::size_t k = static_cast<std::size_t>(cfg_.k);
  const std::size_t v = vocab_.size();
  const double rho = std::min(1.0, step_size(cfg_, t_));

  std::vector<double> sstats(k * v, 0.0);
  std::vector<double> exp_elog_theta(k);

  for (std::size_t d = 0; d < batch.size(); ++d) {
    const EncodedDoc enc = encode(batch[d]);
    if (enc.ids.size() != batch[d].term_counts.size()) {
      log::debug("update: document ", batch[d].source_id, " has out-of-vocabulary terms");
    }

    // Symmetry is broken by the randomized gamma start; the generator is
    // derived from (seed, t, doc index) so runs reproduce without carrying
    // engine state in the model.
    std::mt19937_64 gen(splitmix64(cfg_.seed ^ splitmix64(t_ * 0x10001ULL + d)));
    std::vector<double> gamma(k);
    for (double& g : gamma) g = 0.5 + canonical(gen);

    gamma = e_step(enc, std::move(gamma));
    exp_dirichlet_expectation(gamma, exp_elog_theta);

    // Recompute phinorm under the converged gamma for the sstats pass.
    for (std::size_t w = 0; w < enc.ids.size(); ++w) {
      const std::size_t col = enc.ids[w];
      double dot = 0.0;
      for (std::size_t topic = 0; topic < k; ++topic) {
        dot += exp_elog_theta[topic] * exp_elog_beta_[topic * v + col];
      }
      const double scale = enc.counts[w] / (dot + kPhiFloor);
      for (std::size_t topic = 0; topic < k; ++topic) {
        sstats[topic * v + col] += exp_elog_theta[topic] * scale;
      }
    }
  }

  // M-step: lambda_hat = eta + sstats .* expElogbeta, corpus weight 1 for
  // pure streaming; then the online blend.
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    const double lambda_hat = cfg_.eta + sstats[i] * exp_elog_beta_[i];
    lambda_[i] = (1.0 - rho) * lambda_[i] + rho * lambda_hat;
  }
  ++t_;
  refresh_exp_elog_beta();
}

TopicDistribution TopicModel::infer(const corpus::Document& doc) const {
  const std::size_t k = static_cast<std::size_t>(cfg_.k);
  const EncodedDoc enc = encode(doc);
  if (enc.ids.empty()) {
    return TopicDistribution::uniform(k);
  }
  // Fixed start keeps inference a pure function of (model, document).
  std::vector<double> gamma = e_step(enc, std::vector<double>(k, 1.0));
  return TopicDistribution::normalized(std::move(gamma));
}

double TopicModel::perplexity(const std::vector<corpus::Document>& heldout) const {
  const std::size_t k = static_cast<std::size_t>(cfg_.k);
  const std::size_t v = vocab_.size();

  std::vector<double> row_sum(k, 0.0);
  for (std::size_t topic = 0; topic < k; ++topic) {
    for (std::size_t i = 0; i < v; ++i) row_sum[topic] += lambda_[topic * v + i];
  }

  double log_likelihood = 0.0;
  double tokens = 0.0;
  for (const corpus::Document& doc : heldout) {
    const EncodedDoc enc = encode(doc);
    if (enc.ids.empty()) continue;
    const TopicDistribution theta = infer(doc);
    for (std::size_t w = 0; w < enc.ids.size(); ++w) {
      double p = 0.0;
      for (std::size_t topic = 0; topic < k; ++topic) {
        p += theta[topic] * lambda_[topic * v + enc.ids[w]] / row_sum[topic];
      }
      log_likelihood += enc.counts[w] * std::log(p);
      tokens += enc.counts[w];
    }
  }
  if (tokens == 0.0) {
    throw NoTokens("perplexity: held-out set has no in-vocabulary token");
  }
  return std::exp(-log_likelihood / tokens);
}

}  // namespace jingo::topicmodel
