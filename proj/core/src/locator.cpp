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

#include "jingo/locator/locator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "jingo/corpus/methods.hpp"
#include "jingo/errors.hpp"

namespace jingo::locator {

namespace {

std::string simple_class_name(const std::string& path) {
  std::string name = path;
  const std::size_t slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  const std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return name;
}

}  // namespace

const std::vector<TopicDistribution>* SnapshotIndexCache::find(std::uint64_t model_version,
                                                               const std::string& path,
                                                               std::size_t content_hash) const {
  const auto it = entries_.find(path);
  if (it == entries_.end()) return nullptr;
  if (it->second.model_version != model_version || it->second.content_hash != content_hash) {
    return nullptr;
  }
  return &it->second.methods;
}

void SnapshotIndexCache::put(std::uint64_t model_version, const std::string& path,
                             std::size_t content_hash, std::vector<TopicDistribution> methods) {
  entries_[path] = Entry{model_version, content_hash, std::move(methods)};
}

SnapshotIndex build_snapshot_index(const std::map<std::string, std::string>& files,
                                   const topicmodel::TopicModel& cs_model,
                                   const corpus::PreprocessConfig& pre,
                                   SnapshotIndexCache* cache) {
  SnapshotIndex index;
  index.classes.reserve(files.size());

  for (const auto& [path, source] : files) {
    index.class_names.insert(simple_class_name(path));

    const std::size_t content_hash = std::hash<std::string>{}(source);
    if (cache != nullptr) {
      if (const auto* hit = cache->find(cs_model.update_count(), path, content_hash)) {
        index.classes.push_back(IndexedClass{path, *hit});
        continue;
      }
    }

    std::vector<TopicDistribution> methods;
    for (const std::string& unit : corpus::segment_methods(source)) {
      // An all-keyword unit yields the empty bag, which infers to the
      // uniform prior; every class keeps >= 1 method distribution.
      const corpus::Document doc = corpus::preprocess_code_text(path, unit, pre);
      methods.push_back(cs_model.infer(doc));
    }
    if (cache != nullptr) {
      cache->put(cs_model.update_count(), path, content_hash, methods);
    }
    index.classes.push_back(IndexedClass{path, std::move(methods)});
  }
  return index;
}

TopicDistribution combine(const TopicDistribution& dist_cs, const TopicDistribution& dist_co,
                          double lambda_ratio, double gamma) {
  if (dist_cs.size() != dist_co.size()) {
    throw DimensionMismatch("combine: distributions have different topic counts");
  }
  auto mass_of = [](const TopicDistribution& d) {
    double mass = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) mass += d[i];
    return mass;
  };
  // Collapse identities hold exactly: normalization is skipped when one side
  // has all the weight. translate() never emits a zero vector, but the guard
  // stays.
  if (lambda_ratio == 0.0) {
    if (!(mass_of(dist_co) > 0.0)) throw ZeroVector("combine: zero co-occurrence distribution");
    return dist_co;
  }
  if (lambda_ratio == 1.0) {
    if (!(mass_of(dist_cs) > 0.0)) throw ZeroVector("combine: zero changeset distribution");
    return dist_cs;
  }

  std::vector<double> weighted(dist_cs.size());
  const double cs_weight = lambda_ratio * gamma;
  const double co_weight = 1.0 - lambda_ratio;
  for (std::size_t i = 0; i < weighted.size(); ++i) {
    weighted[i] = dist_cs[i] * cs_weight + dist_co[i] * co_weight;
  }
  return TopicDistribution::normalized(std::move(weighted));
}

double cosine_distance(const TopicDistribution& a, const TopicDistribution& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("cosine_distance: vector lengths differ");
  }
  double dot = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    norm_a += a[i] * a[i];
    norm_b += b[i] * b[i];
  }
  if (!(norm_a > 0.0) || !(norm_b > 0.0)) {
    throw ZeroVector("cosine_distance: zero vector");
  }
  const double cosine = dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
  return 1.0 - cosine;
}

Ranking rank_classes(const TopicDistribution& query, const SnapshotIndex& index) {
  Ranking ranking;
  ranking.reserve(index.classes.size());
  for (const IndexedClass& cls : index.classes) {
    double best = 2.0;
    for (const TopicDistribution& method : cls.methods) {
      best = std::min(best, cosine_distance(query, method));
    }
    ranking.push_back(RankedClass{cls.path, best});
  }
  std::sort(ranking.begin(), ranking.end(), [](const RankedClass& x, const RankedClass& y) {
    if (x.distance != y.distance) return x.distance < y.distance;
    return x.path < y.path;
  });
  return ranking;
}

Ranking locate(const corpus::BugReport& br, const topicmodel::TopicModel& cs_model,
               const topicmodel::TopicModel& br_model, const translation::TranslationMatrix* t,
               const SnapshotIndex& index, const LocatorConfig& cfg,
               const corpus::PreprocessConfig& pre) {
  if (index.classes.empty()) {
    throw EmptyIndex("locate: snapshot index has no classes");
  }

  const corpus::Document doc = corpus::preprocess_bug_report(br, pre);
  const TopicDistribution dist_cs = cs_model.infer(doc);

  if (cfg.baseline_mode || t == nullptr) {
    return rank_classes(dist_cs, index);
  }

  const TopicDistribution dist_br = br_model.infer(doc);
  const TopicDistribution dist_co = translation::translate(*t, dist_br);
  const double lambda_ratio = corpus::code_token_ratio(br, index.class_names);
  const TopicDistribution query = combine(dist_cs, dist_co, lambda_ratio, cfg.gamma);
  return rank_classes(query, index);
}

}  // namespace jingo::locator
