// Copyright 2026 The Corn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>

#include "benchmark/benchmark.h"
#include "corn/backend/oracle.h"
#include "corn/backend/stub_backend.h"
#include "corn/casting/predictor.h"
#include "corn/curation/annotated_corpus.h"
#include "corn/curation/dataset.h"
#include "corn/curation/lexicon.h"
#include "corn/eval/gold.h"

namespace corn {
namespace {

std::string Data(const std::string& rel) { return std::string(CORN_BENCH_DATA_DIR) + "/" + rel; }

void BM_GenerateDataset(benchmark::State& state) {
  const auto corpus = curation::LoadAnnotatedCorpus(Data("curation/corpus.jsonl"));
  const auto lexicon = curation::LoadOpinionLexicon(Data("curation/positive.txt"),
                                                    Data("curation/negative.txt"));
  const auto seeds = curation::LoadSeedAspects(Data("curation/seeds.json"));
  curation::CurationConfig config;
  config.per_label_target = 300;
  config.workers = static_cast<size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(curation::GenerateDataset(corpus, seeds, lexicon, config));
  }
}
BENCHMARK(BM_GenerateDataset)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_PredictE2eOracle(benchmark::State& state) {
  const auto gold = eval::LoadGold(Data("eval/gold50.jsonl"));
  const casting::PromptConfig prompts;
  const auto oracle = backend::OracleFromGold(gold, prompts);
  for (auto _ : state) {
    for (const auto& g : gold) {
      benchmark::DoNotOptimize(casting::PredictE2e(g.ToTokenized(), prompts, oracle));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(gold.size()));
}
BENCHMARK(BM_PredictE2eOracle)->Unit(benchmark::kMillisecond);

void BM_PredictAeStub(benchmark::State& state) {
  const auto gold = eval::LoadGold(Data("eval/gold50.jsonl"));
  const backend::StubBackend stub;
  for (auto _ : state) {
    for (const auto& g : gold) {
      benchmark::DoNotOptimize(casting::PredictAe(g.ToTokenized(), casting::PromptConfig{}, stub));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(gold.size()));
}
BENCHMARK(BM_PredictAeStub)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace corn
