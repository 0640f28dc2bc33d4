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

#include "corn/curation/dataset.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <future>
#include <set>
#include <utility>

#include "corn/common/error.h"
#include "corn/common/rng.h"
#include "corn/curation/double_propagation.h"
#include "corn/curation/premise.h"
#include "corn/text/match.h"
#include "json.hpp"

namespace corn::curation {
namespace {

size_t LabelIndex(NliLabel label) { return static_cast<size_t>(label); }

struct CategoryOutput {
  CategoryStats stats;
  std::vector<RnliExample> examples;
};

// Dedupes clauses by text within each (aspect, polarity) group and keeps at
// most `cap` of them, chosen by shuffle.
std::vector<SentimentClause> CapClauses(std::vector<SentimentClause> clauses,
                                        size_t cap, Rng& rng) {
  std::map<std::pair<std::string, Polarity>, std::vector<size_t>> groups;
  std::set<std::tuple<std::string, Polarity, std::string>> seen;
  for (size_t i = 0; i < clauses.size(); ++i) {
    const SentimentClause& c = clauses[i];
    if (!seen.emplace(c.aspect, c.polarity, text::NormalizeTerm(c.clause.text)).second) {
      continue;
    }
    groups[{c.aspect, c.polarity}].push_back(i);
  }
  std::vector<SentimentClause> kept;
  for (auto& [key, members] : groups) {
    rng.Shuffle(members);
    if (members.size() > cap) members.resize(cap);
    std::sort(members.begin(), members.end());
    for (size_t i : members) kept.push_back(clauses[i]);
  }
  return kept;
}

CategoryOutput GenerateCategory(const std::string& category,
                                const std::vector<AnnotatedSentence>& sentences,
                                const SeedAspectSet& seeds,
                                const OpinionLexicon& lexicon,
                                const CurationConfig& config) {
  CategoryOutput out;
  out.stats.sentences = sentences.size();
  Rng rng(DeriveSeed(config.rng_seed, category));

  const PropagationResult aspects =
      ExtractAspects(sentences, seeds, lexicon, config.max_propagation_iters);
  out.stats.aspects = aspects.aspects.size();
  std::vector<SentimentClause> all = ExtractSentimentClauses(
      sentences, aspects.aspects, lexicon, config.polarity, config.delimiters);
  out.stats.sentiment_clauses = all.size();
  const std::vector<SentimentClause> clauses =
      CapClauses(std::move(all), config.clause_cap, rng);
  out.stats.capped_clauses = clauses.size();

  std::map<std::string, std::vector<size_t>> by_aspect;
  for (size_t i = 0; i < clauses.size(); ++i) by_aspect[clauses[i].aspect].push_back(i);
  if (by_aspect.size() < config.k_min) return out;
  out.stats.viable = true;

  std::array<size_t, 3> counts{};
  auto wanted = [&](size_t label) {
    return counts[label] < config.per_label_target &&
           out.examples.size() < config.per_category_cap;
  };
  auto any_wanted = [&] { return wanted(0) || wanted(1) || wanted(2); };

  std::set<std::pair<std::string, std::string>> emitted;
  size_t stale = 0;
  constexpr size_t kMaxStalePremises = 200;
  while (any_wanted() && out.stats.premises < config.per_category_cap &&
         stale < kMaxStalePremises) {
    // One clause per aspect, so the premise map is a function.
    std::vector<SentimentClause> pool;
    std::vector<size_t> pool_source;
    for (const auto& [aspect, members] : by_aspect) {
      const size_t pick = members[rng.Below(members.size())];
      pool.push_back(clauses[pick]);
      pool_source.push_back(pick);
    }
    const Premise premise =
        ComposePremise(pool, rng.Next(), config.k_min, config.k_max);
    ++out.stats.premises;

    std::set<size_t> used;
    std::vector<PremiseClauseMeta> premise_meta;
    for (size_t p : premise.pool_indices) {
      used.insert(pool_source[p]);
      premise_meta.push_back({pool[p].clause.text, pool[p].aspect, pool[p].polarity});
    }

    std::array<std::vector<size_t>, 3> candidates;
    for (size_t j = 0; j < clauses.size(); ++j) {
      if (used.count(j) > 0) continue;
      candidates[LabelIndex(LabelPair(premise.aspect_polarity, clauses[j]))].push_back(j);
    }

    bool progress = false;
    for (NliLabel label : kAllNliLabels) {
      const size_t li = LabelIndex(label);
      if (!wanted(li) || candidates[li].empty()) continue;
      const SentimentClause& hyp = clauses[candidates[li][rng.Below(candidates[li].size())]];
      if (!emitted.emplace(premise.text, hyp.clause.text).second) continue;

      RnliExample ex;
      ex.premise = premise.text;
      ex.hypothesis = hyp.clause.text;
      ex.label = label;
      ex.meta.category = category;
      ex.meta.hypothesis_aspect = hyp.aspect;
      const auto it = premise.aspect_polarity.find(hyp.aspect);
      if (it != premise.aspect_polarity.end()) ex.meta.premise_polarity = it->second;
      ex.meta.hypothesis_polarity = hyp.polarity;
      ex.meta.premise_clauses = premise_meta;
      out.examples.push_back(std::move(ex));
      ++counts[li];
      progress = true;
    }
    stale = progress ? 0 : stale + 1;
  }
  out.stats.generated = out.examples.size();
  return out;
}

std::string PolarityKey(const std::optional<Polarity>& p) {
  return p ? std::string(ToString(*p)) : "absent";
}

}  // namespace

RnliDataset GenerateDataset(std::span<const AnnotatedSentence> corpus,
                            const SeedAspectMap& seeds,
                            const OpinionLexicon& lexicon,
                            const CurationConfig& config) {
  if (config.train_fraction < 0 || config.valid_fraction < 0 ||
      config.train_fraction + config.valid_fraction > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "split fractions must lie in [0, 1]");
  }
  std::map<std::string, std::vector<AnnotatedSentence>> by_category;
  for (const AnnotatedSentence& s : corpus) by_category[s.category].push_back(s);
  if (by_category.empty()) throw Error(ErrorCode::kNoViableCategory, "empty corpus");

  std::vector<std::string> names;
  for (const auto& [name, _] : by_category) names.push_back(name);
  std::vector<CategoryOutput> outputs(names.size());

  auto run = [&](size_t i) {
    const auto seed_it = seeds.find(names[i]);
    const SeedAspectSet empty{names[i], {}};
    outputs[i] = GenerateCategory(names[i], by_category.at(names[i]),
                                  seed_it == seeds.end() ? empty : seed_it->second,
                                  lexicon, config);
  };
  const size_t workers = std::max<size_t>(1, config.workers);
  if (workers == 1) {
    for (size_t i = 0; i < names.size(); ++i) run(i);
  } else {
    for (size_t base = 0; base < names.size(); base += workers) {
      std::vector<std::future<void>> batch;
      for (size_t i = base; i < std::min(names.size(), base + workers); ++i) {
        batch.push_back(std::async(std::launch::async, run, i));
      }
      for (auto& f : batch) f.get();
    }
  }

  std::array<std::vector<const RnliExample*>, 3> by_label;
  for (const CategoryOutput& out : outputs) {
    for (const RnliExample& ex : out.examples) by_label[LabelIndex(ex.label)].push_back(&ex);
  }
  size_t available = by_label[0].size();
  for (const auto& v : by_label) available = std::min(available, v.size());
  const size_t per_label = std::min(config.per_label_target, available);
  if (per_label == 0) {
    std::string detail;
    for (NliLabel label : kAllNliLabels) {
      detail += " " + std::string(ToString(label)) + "=" +
                std::to_string(by_label[LabelIndex(label)].size());
    }
    throw Error(ErrorCode::kNoViableCategory,
                "no category yields all three labels (available:" + detail + ")");
  }

  Rng rng(config.rng_seed);
  std::vector<const RnliExample*> merged;
  for (auto& pool : by_label) {
    std::vector<size_t> picked = rng.Sample(pool.size(), per_label);
    std::sort(picked.begin(), picked.end());
    for (size_t i : picked) merged.push_back(pool[i]);
  }
  rng.Shuffle(merged);

  RnliDataset dataset;
  const size_t total = merged.size();
  const auto n_train = static_cast<size_t>(std::floor(total * config.train_fraction + 1e-9));
  const auto n_valid = static_cast<size_t>(std::floor(total * config.valid_fraction + 1e-9));
  for (size_t i = 0; i < total; ++i) {
    auto& split = i < n_train ? dataset.train
                  : i < n_train + n_valid ? dataset.valid
                                          : dataset.holdout;
    split.push_back(*merged[i]);
  }

  DatasetStats& stats = dataset.stats;
  stats.rng_seed = config.rng_seed;
  stats.per_label = per_label;
  for (size_t i = 0; i < names.size(); ++i) stats.categories[names[i]] = outputs[i].stats;
  for (const RnliExample* ex : merged) {
    ++stats.labels[std::string(ToString(ex->label))];
    ++stats.premise_polarity[PolarityKey(ex->meta.premise_polarity)];
    ++stats.hypothesis_polarity[std::string(ToString(ex->meta.hypothesis_polarity))];
    ++stats.categories[ex->meta.category].kept;
  }
  stats.splits = {{"train", dataset.train.size()},
                  {"valid", dataset.valid.size()},
                  {"holdout", dataset.holdout.size()}};
  return dataset;
}

std::string StatsToJson(const DatasetStats& stats) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["rng_seed"] = stats.rng_seed;
  doc["per_label"] = stats.per_label;
  doc["labels"] = stats.labels;
  doc["splits"] = stats.splits;
  doc["premise_polarity"] = stats.premise_polarity;
  doc["hypothesis_polarity"] = stats.hypothesis_polarity;
  ordered_json categories = ordered_json::object();
  for (const auto& [name, c] : stats.categories) {
    categories[name] = ordered_json{{"sentences", c.sentences},
                                    {"aspects", c.aspects},
                                    {"sentiment_clauses", c.sentiment_clauses},
                                    {"capped_clauses", c.capped_clauses},
                                    {"premises", c.premises},
                                    {"generated", c.generated},
                                    {"kept", c.kept},
                                    {"viable", c.viable}};
  }
  doc["categories"] = std::move(categories);
  return doc.dump(2) + "\n";
}

namespace {

void WriteLines(const std::filesystem::path& path,
                const std::vector<RnliExample>& examples) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
  for (const RnliExample& ex : examples) out << SerializeExample(ex) << '\n';
  if (!out) throw Error(ErrorCode::kIoError, "write failed for '" + path.string() + "'");
}

}  // namespace

void WriteDataset(const RnliDataset& dataset, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create '" + dir.string() + "'");
  WriteLines(dir / "rnli.train.jsonl", dataset.train);
  WriteLines(dir / "rnli.valid.jsonl", dataset.valid);
  WriteLines(dir / "rnli.holdout.jsonl", dataset.holdout);
  std::ofstream stats(dir / "stats.json", std::ios::binary | std::ios::trunc);
  if (!stats) throw Error(ErrorCode::kIoError, "cannot write stats.json in '" + dir.string() + "'");
  stats << StatsToJson(dataset.stats);
}

std::vector<RnliExample> LoadRnliExamples(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read '" + path.string() + "'");
  std::vector<RnliExample> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(ParseExample(line));
  }
  return out;
}

}  // namespace corn::curation
