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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/metric_fixtures.hpp"
#include "../support/oracles.hpp"
#include "../support/synthetic.hpp"
#include "jingo/evaluation/cochange.hpp"
#include "jingo/evaluation/metrics.hpp"
#include "jingo/evaluation/replay.hpp"
#include "jingo/io/streams.hpp"
#include "jingo/locator/locator.hpp"
#include "jingo/topicmodel/online_lda.hpp"
#include "jingo/translation/translation.hpp"
#include "jingo/vcs/virtual_tree.hpp"

namespace {

using jingo::corpus::Document;
using jingo::evaluation::EvalResult;
using jingo::evaluation::HistoryEvent;
using jingo::evaluation::ReplayConfig;
using jingo::evaluation::ReplayMode;
using jingo::topicmodel::LdaConfig;
using jingo::topicmodel::TopicDistribution;
using jingo::topicmodel::TopicModel;

class Runner {
 public:
  void criterion(int number, const std::string& title, const std::function<bool(std::string&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                title.c_str(), seconds, detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures_;
  }

  int finish() const {
    if (failures_ == 0) {
      std::printf("all acceptance criteria passed\n");
    } else {
      std::printf("%d acceptance criteria FAILED\n", failures_);
    }
    return failures_ == 0 ? 0 : 1;
  }

 private:
  int failures_ = 0;
};

double uniform(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

std::vector<double> random_simplex(std::mt19937_64& gen, std::size_t k) {
  std::vector<double> v(k);
  double sum = 0.0;
  for (double& x : v) {
    x = uniform(gen) + 1e-4;
    sum += x;
  }
  for (double& x : v) x /= sum;
  return v;
}

jingo::locator::Ranking as_ranking(const std::vector<std::string>& paths) {
  jingo::locator::Ranking ranking;
  double distance = 0.0;
  for (const std::string& path : paths) {
    ranking.push_back(jingo::locator::RankedClass{path, distance});
    distance += 0.01;
  }
  return ranking;
}

Document doc_of(const std::string& id, std::map<std::string, int> counts) {
  Document d;
  d.source_id = id;
  for (const auto& [term, count] : counts) d.add(term, count);
  return d;
}

ReplayConfig replay_config(ReplayMode mode, std::uint64_t seed) {
  ReplayConfig cfg;
  cfg.changeset_model = LdaConfig::with_topics(12, 0.75, seed);
  cfg.bug_report_model = LdaConfig::with_topics(8, 1.0, seed);
  cfg.mode = mode;
  return cfg;
}

std::string metrics_table(const EvalResult& result) {
  std::ostringstream out;
  jingo::io::write_metrics_table(out, result);
  return out.str();
}

// 1. reciprocal_rank / average_precision / top_at_k against hand-computed
//    values on the ten-ranking fixture set.
bool criterion_metric_oracle(std::string& detail) {
  std::vector<int> best_ranks;
  for (const auto& fixture : fixtures::metric_cases()) {
    const auto ranking = as_ranking(fixture.ranking);
    const double rr = jingo::evaluation::reciprocal_rank(ranking, fixture.goldset);
    const double ap = jingo::evaluation::average_precision(ranking, fixture.goldset);
    const int rank = jingo::evaluation::best_goldset_rank(ranking, fixture.goldset);
    if (std::fabs(rr - fixture.expected_rr) > 1e-15 ||
        std::fabs(ap - fixture.expected_ap) > 1e-15 || rank != fixture.expected_best_rank) {
      detail = "fixture mismatch";
      return false;
    }
    best_ranks.push_back(rank);
  }
  return std::fabs(jingo::evaluation::top_at_k(best_ranks, 1) - fixtures::kExpectedTop1) <= 1e-15 &&
         std::fabs(jingo::evaluation::top_at_k(best_ranks, 3) - fixtures::kExpectedTop3) <= 1e-15 &&
         std::fabs(jingo::evaluation::top_at_k(best_ranks, 5) - fixtures::kExpectedTop5) <= 1e-15;
}

// 2. rank_classes against the brute-force pairwise scorer: 100 random
//    (query, 50-class) instances, identical order, distances within 1e-12.
bool criterion_ranking_oracle(std::string& detail) {
  std::mt19937_64 gen(2024);
  for (int instance = 0; instance < 100; ++instance) {
    jingo::locator::SnapshotIndex index;
    std::vector<oracles::OracleClass> oracle_classes;
    for (int c = 0; c < 50; ++c) {
      jingo::locator::IndexedClass cls;
      cls.path = "src/C" + std::to_string(c) + ".java";
      oracles::OracleClass ocls;
      ocls.path = cls.path;
      const int methods = 1 + static_cast<int>(gen() % 5);
      for (int m = 0; m < methods; ++m) {
        auto v = random_simplex(gen, 10);
        cls.methods.push_back(TopicDistribution{v});
        ocls.methods.push_back(std::move(v));
      }
      index.classes.push_back(std::move(cls));
      oracle_classes.push_back(std::move(ocls));
    }
    const auto query = random_simplex(gen, 10);
    const auto ranking = jingo::locator::rank_classes(TopicDistribution{query}, index);
    const auto expected = oracles::brute_force_rank(query, oracle_classes);
    for (std::size_t i = 0; i < ranking.size(); ++i) {
      if (ranking[i].path != expected[i].path ||
          std::fabs(ranking[i].distance - expected[i].distance) > 1e-12) {
        detail = "instance " + std::to_string(instance) + " diverged at position " +
                 std::to_string(i);
        return false;
      }
    }
  }
  return true;
}

// 3. fit against the pseudoinverse oracle on 20 well-conditioned instances,
//    with the residual beating 1,000 random perturbations per instance.
bool criterion_least_squares_oracle(std::string& detail) {
  std::mt19937_64 gen(77);
  for (int instance = 0; instance < 20; ++instance) {
    // Instance 0 runs at the full 200x50 -> 200x100 scale; the rest stay
    // smaller to keep the suite fast.
    const std::size_t n = instance == 0 ? 200 : 80;
    const std::size_t k_br = instance == 0 ? 50 : 12;
    const std::size_t k_cs = instance == 0 ? 100 : 20;

    std::vector<std::vector<double>> b(n);
    std::vector<std::vector<double>> a(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = random_simplex(gen, k_br);
      a[i] = random_simplex(gen, k_cs);
    }

    const auto fitted = jingo::translation::fit_least_squares(b, a, k_br, k_cs, 0.0);
    const auto expected = oracles::pinv_fit(b, a, k_br, k_cs);
    for (std::size_t i = 0; i < fitted.data.size(); ++i) {
      if (std::fabs(fitted.data[i] - expected[i]) > 1e-6) {
        detail = "instance " + std::to_string(instance) + ": oracle delta " +
                 std::to_string(std::fabs(fitted.data[i] - expected[i]));
        return false;
      }
    }

    const double base = oracles::residual(b, a, fitted.data, k_br, k_cs);
    std::vector<double> perturbed = fitted.data;
    for (int trial = 0; trial < 1000; ++trial) {
      perturbed = fitted.data;
      for (double& x : perturbed) x += (uniform(gen) - 0.5) * 1e-3;
      if (base > oracles::residual(b, a, perturbed, k_br, k_cs) + 1e-12) {
        detail = "perturbation beat the minimizer on instance " + std::to_string(instance);
        return false;
      }
    }
  }
  return true;
}

// 4. Online LDA recovery on the two-topic separable corpus.
bool criterion_lda_recovery(std::string& detail) {
  const auto corpus = synthetic::separable_corpus(50, 3);

  // 3-token documents cap the posterior max at (alpha+3)/(2*alpha+3);
  // alpha = eta = 0.1 keeps 0.9 attainable (confirmed by the batch oracle
  // in the unit suite).
  LdaConfig cfg = LdaConfig::with_topics(2, 0.75, 3);
  cfg.alpha = 0.1;
  cfg.eta = 0.1;
  TopicModel model(cfg);
  for (const Document& doc : corpus) model.expand_vocabulary(doc);

  const std::vector<Document> heldout = {doc_of("ha", {{"aaa", 3}}), doc_of("hb", {{"bbb", 3}})};
  double after_one = 0.0;
  for (int batch = 0; batch < 10; ++batch) {
    const std::vector<Document> slice(corpus.begin() + batch * 10,
                                      corpus.begin() + (batch + 1) * 10);
    model.update(slice);
    if (batch == 0) after_one = model.perplexity(heldout);
  }
  const double after_ten = model.perplexity(heldout);
  if (!(after_ten < after_one)) {
    detail = "perplexity did not fall: " + std::to_string(after_one) + " -> " +
             std::to_string(after_ten);
    return false;
  }

  const TopicDistribution da = model.infer(doc_of("qa", {{"aaa", 3}}));
  const TopicDistribution db = model.infer(doc_of("qb", {{"bbb", 3}}));
  const double max_a = std::max(da[0], da[1]);
  const double max_b = std::max(db[0], db[1]);
  detail = "perplexity " + std::to_string(after_one) + " -> " + std::to_string(after_ten) +
           ", max components " + std::to_string(max_a) + "/" + std::to_string(max_b);
  return max_a >= 0.9 && max_b >= 0.9 && ((da[0] > 0.5) != (db[0] > 0.5));
}

// 5. combine: collapse identities exact, worked example within 1e-12.
bool criterion_combine_identities(std::string& detail) {
  const TopicDistribution cs{{0.7, 0.2, 0.1}};
  const TopicDistribution co{{0.1, 0.1, 0.8}};

  if (jingo::locator::combine(cs, co, 0.0, 5.0).probs != co.probs) {
    detail = "lambda = 0 did not collapse to the co-occurrence distribution";
    return false;
  }
  for (double gamma : {1.0, 5.0, 9.0}) {
    if (jingo::locator::combine(cs, co, 1.0, gamma).probs != cs.probs) {
      detail = "lambda = 1 did not collapse to the changeset distribution";
      return false;
    }
  }

  const TopicDistribution out =
      jingo::locator::combine(TopicDistribution{{1.0, 0.0}}, TopicDistribution{{0.0, 1.0}}, 0.2,
                              5.0);
  if (std::fabs(out[0] - 5.0 / 9.0) > 1e-12 || std::fabs(out[1] - 4.0 / 9.0) > 1e-12) {
    detail = "worked example mismatch";
    return false;
  }
  return true;
}

// 6. readiness flips exactly at the 75th pair for omega=1.5, 50 topics.
bool criterion_readiness_boundary(std::string& detail) {
  jingo::translation::ReadinessPolicy policy;  // 1.5
  jingo::translation::PairStore store(50, 50);
  const TopicDistribution row{std::vector<double>(50, 0.02)};
  for (int i = 0; i < 74; ++i) {
    store.record_pair(row, row, jingo::translation::PairKind::kRealFix);
    if (is_ready(store, policy)) {
      detail = "ready too early at " + std::to_string(i + 1);
      return false;
    }
  }
  store.record_pair(row, row, jingo::translation::PairKind::kRealFix);
  if (!is_ready(store, policy)) {
    detail = "not ready at 75";
    return false;
  }
  return true;
}

// 7. Causality: scoring at an evaluation point is identical between the
//    truncated stream and the full stream with marker terms injected into
//    post-cut changesets.
bool criterion_replay_causality(std::string& detail) {
  synthetic::Options opts;
  opts.groups = 4;
  opts.classes_per_group = 4;
  opts.edit_changesets = 120;
  opts.bugs = 18;
  opts.nl_bugs = 6;
  opts.seed = 99;
  const synthetic::History history = synthetic::make_history(opts);

  int links_seen = 0;
  std::size_t cut = 0;
  for (std::size_t i = 0; i < history.events.size(); ++i) {
    if (history.events[i].kind_rank() == 1 && ++links_seen == 8) {
      cut = i;
      break;
    }
  }
  if (links_seen != 8) {
    detail = "fixture too small";
    return false;
  }

  std::vector<HistoryEvent> truncated(history.events.begin(),
                                      history.events.begin() + static_cast<long>(cut) + 1);
  std::vector<HistoryEvent> marked = history.events;
  for (std::size_t i = cut + 1; i < marked.size(); ++i) {
    if (auto* cs = std::get_if<jingo::evaluation::ChangesetEvent>(&marked[i].payload)) {
      std::istringstream in(cs->diff);
      std::string line;
      std::string out;
      while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '+' && line.rfind("+++", 0) != 0) line += " zzmarker";
        out += line;
        out += '\n';
      }
      cs->diff = out;
    }
  }

  const ReplayConfig cfg = replay_config(ReplayMode::kJingo, 5);
  const EvalResult a = jingo::evaluation::replay(truncated, cfg);
  const EvalResult b = jingo::evaluation::replay(marked, cfg);
  if (a.bugs.size() != 8 || b.bugs.size() < 8) {
    detail = "unexpected outcome counts";
    return false;
  }

  // Byte-level comparison of the formatted per-bug rows.
  EvalResult b_prefix;
  b_prefix.bugs.assign(b.bugs.begin(), b.bugs.begin() + 8);
  EvalResult a_all;
  a_all.bugs = a.bugs;
  std::ostringstream row_a;
  std::ostringstream row_b;
  for (const auto& bug : a_all.bugs) {
    row_a << bug.bug_id << ' ' << bug.reciprocal_rank << ' ' << bug.average_precision << ' '
          << bug.best_rank << '\n';
  }
  for (const auto& bug : b_prefix.bugs) {
    row_b << bug.bug_id << ' ' << bug.reciprocal_rank << ' ' << bug.average_precision << ' '
          << bug.best_rank << '\n';
  }
  if (row_a.str() != row_b.str()) {
    detail = "evaluation rows differ between truncated and full streams";
    return false;
  }
  return true;
}

// 8. End-to-end improvement: mean MRR of jingo mode beats baseline mode by
//    >= 0.05 on the planted synthetic history, averaged over 10 seeds.
bool criterion_improvement(std::string& detail) {
  double total_gap = 0.0;
  double total_jingo = 0.0;
  double total_baseline = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    synthetic::Options opts;
    opts.seed = seed;  // 500 changesets, 60 bugs, 20 NL by default
    const synthetic::History history = synthetic::make_history(opts);

    const EvalResult jingo_result =
        jingo::evaluation::replay(history.events, replay_config(ReplayMode::kJingo, seed));
    const EvalResult baseline_result =
        jingo::evaluation::replay(history.events, replay_config(ReplayMode::kBaseline, seed));
    total_jingo += jingo_result.mrr;
    total_baseline += baseline_result.mrr;
    total_gap += jingo_result.mrr - baseline_result.mrr;
  }
  const double mean_gap = total_gap / 10.0;
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "mean MRR %.4f vs %.4f, gap %.4f (need >= 0.05)",
                total_jingo / 10.0, total_baseline / 10.0, mean_gap);
  detail = buffer;
  return mean_gap >= 0.05;
}

// 9. Update-vs-build timing on a 1,000-changeset corpus: the mean
//    single-changeset update must be >= 50x faster than a full rebuild.
bool criterion_timing(std::string& detail) {
  synthetic::Options opts;
  opts.groups = 6;
  opts.classes_per_group = 5;
  opts.edit_changesets = 994;
  opts.bugs = 0;
  opts.nl_bugs = 0;
  opts.seed = 17;
  const synthetic::History history = synthetic::make_history(opts);
  if (history.changeset_count != 1000) {
    detail = "fixture produced " + std::to_string(history.changeset_count) + " changesets";
    return false;
  }

  const EvalResult result =
      jingo::evaluation::replay(history.events, replay_config(ReplayMode::kJingo, 17));
  const auto timing = jingo::evaluation::timing_report(result.timing);
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "build %.3fs, mean update %.6fs, speedup %.0fx",
                timing.build_seconds, timing.mean_update_seconds, timing.speedup);
  detail = buffer;
  return timing.speedup >= 50.0;
}

// 10. Co-change bucket similarities are strictly ordered on planted groups.
bool criterion_cochange_ordering(std::string& detail) {
  const auto stream = synthetic::make_cochange_stream(42);

  TopicModel model(LdaConfig::with_topics(6, 0.75, 42));
  const auto pre = jingo::corpus::PreprocessConfig::defaults();
  jingo::vcs::VirtualTree tree;
  std::vector<jingo::corpus::Changeset> parsed;
  for (const auto& record : stream) {
    jingo::corpus::Changeset cs = jingo::corpus::parse_diff(record.diff, record.meta);
    const Document doc = jingo::corpus::preprocess_changeset(cs, pre);
    model.expand_vocabulary(doc);
    model.update({doc});
    tree.apply_diff(record.diff);
    parsed.push_back(std::move(cs));
  }

  const auto report = jingo::evaluation::cochange_analysis(parsed, model, tree.snapshot(".java"),
                                                           pre);
  char buffer[200];
  std::snprintf(buffer, sizeof(buffer),
                ">=20%%: %.3f (%zu pairs), [5,20)%%: %.3f (%zu), <5%%: %.3f (%zu)",
                report.high.mean_similarity, report.high.pair_count, report.mid.mean_similarity,
                report.mid.pair_count, report.low.mean_similarity, report.low.pair_count);
  detail = buffer;
  return report.high.pair_count > 0 && report.mid.pair_count > 0 && report.low.pair_count > 0 &&
         report.high.mean_similarity > report.mid.mean_similarity &&
         report.mid.mean_similarity > report.low.mean_similarity;
}

// 11. Determinism: two identical replay runs produce byte-identical metric
//     tables.
bool criterion_determinism(std::string& detail) {
  synthetic::Options opts;
  opts.seed = 4;
  const synthetic::History history = synthetic::make_history(opts);
  const ReplayConfig cfg = replay_config(ReplayMode::kJingo, 21);

  const std::string first = metrics_table(jingo::evaluation::replay(history.events, cfg));
  const std::string second = metrics_table(jingo::evaluation::replay(history.events, cfg));
  if (first != second) {
    detail = "metric tables differ between identical runs";
    return false;
  }
  detail = std::to_string(first.size()) + " bytes compared";
  return true;
}

}  // namespace

int main() {
  Runner runner;
  runner.criterion(1, "metric oracle equivalence", criterion_metric_oracle);
  runner.criterion(2, "ranking matches brute-force scorer", criterion_ranking_oracle);
  runner.criterion(3, "least squares matches pseudoinverse oracle", criterion_least_squares_oracle);
  runner.criterion(4, "online LDA two-topic recovery", criterion_lda_recovery);
  runner.criterion(5, "combined-distribution identities", criterion_combine_identities);
  runner.criterion(6, "readiness boundary at omega * max topics", criterion_readiness_boundary);
  runner.criterion(7, "replay causality under marker injection", criterion_replay_causality);
  runner.criterion(8, "end-to-end MRR improvement over baseline", criterion_improvement);
  runner.criterion(9, "single update at least 50x faster than rebuild", criterion_timing);
  runner.criterion(10, "co-change bucket similarity ordering", criterion_cochange_ordering);
  runner.criterion(11, "byte-identical metric tables across runs", criterion_determinism);
  return runner.finish();
}
