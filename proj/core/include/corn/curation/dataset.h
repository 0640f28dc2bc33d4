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

#ifndef CORN_CURATION_DATASET_H_
#define CORN_CURATION_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "corn/curation/annotated_corpus.h"
#include "corn/curation/lexicon.h"
#include "corn/curation/polarity.h"
#include "corn/curation/rnli.h"
#include "corn/text/clauses.h"

namespace corn::curation {

struct CurationConfig {
  size_t per_category_cap = 50000;
  // Distinct clauses kept per (aspect, polarity) pair.
  size_t clause_cap = 10;
  size_t per_label_target = 100000;
  double train_fraction = 0.85;
  double valid_fraction = 0.05;  // the remainder goes to the holdout split
  uint64_t rng_seed = 0;
  size_t k_min = 6;
  size_t k_max = 10;
  size_t max_propagation_iters = 10;
  PolarityOptions polarity;
  text::DelimiterSet delimiters = text::DefaultClauseDelimiters();
  // Categories generated concurrently. Output does not depend on it.
  size_t workers = 1;
};

struct CategoryStats {
  size_t sentences = 0;
  size_t aspects = 0;
  size_t sentiment_clauses = 0;
  size_t capped_clauses = 0;
  size_t premises = 0;
  size_t generated = 0;  // before label balancing
  size_t kept = 0;       // after label balancing
  bool viable = false;
};

struct DatasetStats {
  uint64_t rng_seed = 0;
  size_t per_label = 0;
  std::map<std::string, size_t> labels;
  std::map<std::string, size_t> premise_polarity;  // includes "absent"
  std::map<std::string, size_t> hypothesis_polarity;
  std::map<std::string, size_t> splits;
  std::map<std::string, CategoryStats> categories;
};

struct RnliDataset {
  std::vector<RnliExample> train;
  std::vector<RnliExample> valid;
  std::vector<RnliExample> holdout;
  DatasetStats stats;

  size_t size() const { return train.size() + valid.size() + holdout.size(); }
};

// Full curation pipeline. Per category: aspect extraction seeded by that
// category's seeds, sentiment clauses, the per-(aspect, polarity) clause cap,
// then premises of k_min..k_max clauses paired with one hypothesis clause of
// the same category per wanted label. Each category draws from its own
// stream seeded by rng_seed ^ Fnv1a64(category). The reduce step downsamples
// every label to exactly min(per_label_target, smallest label count) and
// shuffles into train/valid/holdout.
//
// Throws Error(kNoViableCategory) when nothing can be generated.
RnliDataset GenerateDataset(std::span<const AnnotatedSentence> corpus,
                            const SeedAspectMap& seeds,
                            const OpinionLexicon& lexicon,
                            const CurationConfig& config);

// Writes rnli.train.jsonl, rnli.valid.jsonl, rnli.holdout.jsonl and
// stats.json into `dir`, creating it if needed.
void WriteDataset(const RnliDataset& dataset, const std::filesystem::path& dir);

std::string StatsToJson(const DatasetStats& stats);

std::vector<RnliExample> LoadRnliExamples(const std::filesystem::path& path);

}  // namespace corn::curation

#endif  // CORN_CURATION_DATASET_H_
