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

#include "jingo/locator/locator.hpp"
#include "jingo/translation/translation.hpp"

using jingo::locator::IndexedClass;
using jingo::locator::rank_classes;
using jingo::locator::SnapshotIndex;
using jingo::topicmodel::TopicDistribution;

namespace {

std::vector<double> simplex(std::mt19937_64& gen, std::size_t k) {
  std::vector<double> v(k);
  double sum = 0.0;
  for (double& x : v) {
    x = static_cast<double>(gen() >> 11) * 0x1.0p-53 + 1e-4;
    sum += x;
  }
  for (double& x : v) x /= sum;
  return v;
}

void BM_RankClasses(benchmark::State& state) {
  std::mt19937_64 gen(7);
  const std::size_t k = 100;
  SnapshotIndex index;
  for (std::int64_t c = 0; c < state.range(0); ++c) {
    IndexedClass cls;
    cls.path = "src/C" + std::to_string(c) + ".java";
    const std::size_t methods = 1 + gen() % 12;
    for (std::size_t m = 0; m < methods; ++m) {
      cls.methods.push_back(TopicDistribution{simplex(gen, k)});
    }
    index.classes.push_back(std::move(cls));
  }
  const TopicDistribution query{simplex(gen, k)};

  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_classes(query, index));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RankClasses)->Arg(100)->Arg(1000);

void BM_TranslationFit(benchmark::State& state) {
  std::mt19937_64 gen(9);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<double>> b(n);
  std::vector<std::vector<double>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = simplex(gen, 50);
    a[i] = simplex(gen, 100);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(jingo::translation::fit_least_squares(b, a, 50, 100, 1e-6));
  }
}
BENCHMARK(BM_TranslationFit)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
