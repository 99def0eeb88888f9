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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "jingo/topicmodel/online_lda.hpp"

using jingo::corpus::Document;
using jingo::topicmodel::LdaConfig;
using jingo::topicmodel::TopicModel;

namespace {

// Synthetic mixed-vocabulary documents sized like real changeset bags.
std::vector<Document> make_docs(std::size_t count, std::size_t vocab, std::size_t terms_per_doc) {
  std::mt19937_64 gen(12345);
  std::vector<Document> docs(count);
  for (std::size_t d = 0; d < count; ++d) {
    docs[d].source_id = "d" + std::to_string(d);
    for (std::size_t t = 0; t < terms_per_doc; ++t) {
      docs[d].add("term" + std::to_string(gen() % vocab), 1 + static_cast<int>(gen() % 3));
    }
  }
  return docs;
}

TopicModel warm_model(int k, const std::vector<Document>& docs) {
  TopicModel model(LdaConfig::with_topics(k, 0.75, 1));
  for (const Document& doc : docs) {
    model.expand_vocabulary(doc);
    model.update({doc});
  }
  return model;
}

void BM_UpdateSingleChangeset(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto docs = make_docs(256, 4000, 60);
  TopicModel model = warm_model(k, docs);

  std::size_t next = 0;
  for (auto _ : state) {
    model.update({docs[next % docs.size()]});
    ++next;
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_UpdateSingleChangeset)->Arg(50)->Arg(100);

void BM_Infer(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto docs = make_docs(256, 4000, 60);
  const TopicModel model = warm_model(k, docs);

  std::size_t next = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.infer(docs[next % docs.size()]));
    ++next;
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_Infer)->Arg(50)->Arg(100);

void BM_FullRebuild(benchmark::State& state) {
  const auto docs = make_docs(static_cast<std::size_t>(state.range(0)), 4000, 60);
  for (auto _ : state) {
    TopicModel model = warm_model(100, docs);
    benchmark::DoNotOptimize(model.update_count());
  }
}
BENCHMARK(BM_FullRebuild)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
