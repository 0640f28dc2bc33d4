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
#include "corn/text/clauses.h"
#include "corn/text/spans.h"
#include "corn/text/tokenizer.h"

namespace corn::text {
namespace {

std::string Sentence(int words) {
  std::string raw;
  for (int i = 0; i < words; ++i) {
    raw += i % 7 == 6 ? "but, " : "word" + std::to_string(i) + " ";
  }
  return raw + ".";
}

void BM_Tokenize(benchmark::State& state) {
  const std::string raw = Sentence(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Tokenize(raw));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(raw.size()));
}
BENCHMARK(BM_Tokenize)->Arg(10)->Arg(40)->Arg(160);

void BM_SegmentClauses(benchmark::State& state) {
  const auto sentence = Tokenize(Sentence(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(SegmentClauses(sentence));
}
BENCHMARK(BM_SegmentClauses)->Arg(10)->Arg(40)->Arg(160);

void BM_EnumerateSpans(benchmark::State& state) {
  const auto sentence = Tokenize(Sentence(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(DropDelimitedEdges(sentence, EnumerateSpans(sentence)));
  }
}
BENCHMARK(BM_EnumerateSpans)->Arg(10)->Arg(40)->Arg(160);

}  // namespace
}  // namespace corn::text
