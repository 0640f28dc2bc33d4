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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "corn/backend/oracle.h"
#include "corn/casting/label_mapping.h"
#include "corn/casting/predictor.h"
#include "corn/curation/annotated_corpus.h"
#include "corn/curation/dataset.h"
#include "corn/curation/lexicon.h"
#include "corn/curation/rnli.h"
#include "corn/eval/gold.h"
#include "corn/eval/metrics.h"
#include "corn/scl/scl.h"
#include "corn/text/spans.h"
#include "corn/text/tokenizer.h"
#include "oracles/scl_oracle.h"
#include "oracles/span_oracle.h"
#include "oracles/test_data.h"

namespace corn {
namespace {

using testing::DataPath;

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double budget_ms;
  std::function<Outcome()> check;
};

std::string Fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

// -- 1 ---------------------------------------------------------------------------

Outcome LabelMappingTotality() {
  using casting::CastTask;
  const std::vector<std::tuple<CastTask, NliLabel, std::string>> table = {
      {CastTask::kAe, NliLabel::kEntailment, "T"},
      {CastTask::kAe, NliLabel::kNeutral, "O"},
      {CastTask::kAe, NliLabel::kContradiction, "O"},
      {CastTask::kAsc, NliLabel::kEntailment, "POS"},
      {CastTask::kAsc, NliLabel::kNeutral, "NEU"},
      {CastTask::kAsc, NliLabel::kContradiction, "NEG"},
      {CastTask::kE2eStep2, NliLabel::kEntailment, "T-POS"},
      {CastTask::kE2eStep2, NliLabel::kNeutral, "T-NEU"},
      {CastTask::kE2eStep2, NliLabel::kContradiction, "T-NEG"},
  };
  size_t ok = 0;
  for (const auto& [task, label, expected] : table) {
    ok += casting::MapNli(task, label) == expected;
  }
  return {ok == 9, std::to_string(ok) + "/9 cells"};
}

// -- 2 ---------------------------------------------------------------------------

Outcome RnliMatrixFidelity() {
  using P = Polarity;
  using N = NliLabel;
  const curation::PremiseMap premise = {
      {"learning tool", P::kPos}, {"marketing plan", P::kNeu}, {"windows 8", P::kNeg}};
  const std::vector<std::tuple<std::string, P, N>> rows = {
      {"learning tool", P::kPos, N::kEntailment},   {"learning tool", P::kNeu, N::kEntailment},
      {"learning tool", P::kNeg, N::kContradiction}, {"marketing plan", P::kPos, N::kNeutral},
      {"marketing plan", P::kNeu, N::kEntailment},  {"marketing plan", P::kNeg, N::kNeutral},
      {"windows 8", P::kPos, N::kContradiction},     {"windows 8", P::kNeu, N::kEntailment},
      {"windows 8", P::kNeg, N::kEntailment},
  };
  size_t ok = 0;
  for (const auto& [aspect, hyp, expected] : rows) {
    ok += curation::LabelPair(premise, aspect, hyp) == expected;
  }
  return {ok == 9, std::to_string(ok) + "/9 rows"};
}

// -- 3 ---------------------------------------------------------------------------

Outcome OracleRoundTrip() {
  const auto gold = eval::LoadGold(DataPath("eval/gold50.jsonl"));
  size_t longest = 0;
  for (const auto& g : gold) {
    for (const auto& a : g.aspects) longest = std::max(longest, a.end - a.start);
  }
  const casting::PromptConfig prompts;
  const auto oracle = backend::OracleFromGold(gold, prompts, text::kDefaultMaxSpanLength,
                                              backend::OracleBackend::Mode::kStrict);
  std::vector<std::vector<BioLabel>> ae_pred, ae_gold;
  std::vector<std::vector<E2eLabel>> e2e_pred, e2e_gold;
  std::vector<Polarity> asc_pred, asc_gold;
  for (const auto& g : gold) {
    const auto sentence = g.ToTokenized();
    ae_pred.push_back(casting::PredictAe(sentence, prompts, oracle).labels);
    ae_gold.push_back(g.ae_labels);
    e2e_pred.push_back(casting::PredictE2e(sentence, prompts, oracle).labels);
    e2e_gold.push_back(g.e2e_labels);
    for (const auto& a : g.aspects) {
      asc_pred.push_back(casting::PredictAsc(sentence, a.term, prompts, oracle).label);
      asc_gold.push_back(a.polarity);
    }
  }
  const auto ae = eval::AeMetrics(ae_pred, ae_gold);
  const auto asc = eval::AscMetrics(asc_pred, asc_gold);
  const auto e2e = eval::E2eMetrics(e2e_pred, e2e_gold);
  const bool passed = gold.size() == 50 && longest <= 6 && *ae.accuracy == 1.0 &&
                      *ae.collapsed_accuracy == 1.0 && ae.macro_f1 == 1.0 &&
                      *asc.accuracy == 1.0 && asc.macro_f1 == 1.0 && e2e.macro_f1 == 1.0;
  return {passed, std::to_string(gold.size()) + " sentences, " +
                      std::to_string(asc_gold.size()) + " aspects; ae acc " +
                      Fmt("%.6f", *ae.accuracy) + " f1 " + Fmt("%.6f", ae.macro_f1) +
                      ", asc acc " + Fmt("%.6f", *asc.accuracy) + " f1 " +
                      Fmt("%.6f", asc.macro_f1) + ", e2e f1 " + Fmt("%.6f", e2e.macro_f1)};
}

// -- 4 ---------------------------------------------------------------------------

Outcome TwoStepTrace() {
  const std::string raw = "I was given a demonstration of Windows 8 .";
  const auto sentence = text::Tokenize(raw);
  const casting::PromptConfig prompts;
  backend::OracleBackend oracle(backend::OracleBackend::Mode::kLenient);
  for (const std::string span : {"demonstration", "Windows 8"}) {
    oracle.Set(raw, casting::BuildHypothesis(casting::HypothesisTask::kAe, prompts, span),
               NliLabel::kEntailment);
    oracle.Set(raw, casting::BuildHypothesis(casting::HypothesisTask::kAsc, prompts, span),
               NliLabel::kNeutral);
  }
  const auto pred = casting::PredictE2e(sentence, prompts, oracle).labels;
  using E = E2eLabel;
  const std::vector<E> printed = {E::kO, E::kO, E::kO, E::kO, E::kTNeu, E::kO,
                                  E::kTNeu, E::kTNeu, E::kO};
  const std::vector<E> truth = {E::kO, E::kO, E::kO, E::kO, E::kO, E::kO,
                                E::kTNeu, E::kTNeu, E::kO};
  const std::vector<std::vector<E>> p = {pred}, g = {truth};
  const double f1 = eval::E2eMetrics(p, g).macro_f1;
  // O: gold 7, predicted 6, correct 6. T-NEU: gold 2, predicted 3, correct 2.
  const double hand = (12.0 / 13.0 + 4.0 / 5.0 + 0.0 + 0.0) / 4.0;
  std::string seq;
  for (E l : pred) seq += std::string(seq.empty() ? "" : ",") + std::string(ToString(l));
  const bool passed = pred == printed && std::abs(f1 - 0.4308) <= 5e-4 &&
                      std::abs(f1 - hand) <= 1e-12;
  return {passed, "[" + seq + "], macro-F1 " + Fmt("%.6f", f1)};
}

// -- 5 ---------------------------------------------------------------------------

scl::EmbeddingBatch MakeBatch(uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<size_t> n_dist(2, 12), d_dist(2, 8);
  std::uniform_int_distribution<int> label_dist(0, 2);
  std::normal_distribution<double> normal(0.0, 1.0);
  const size_t n = n_dist(gen), d = d_dist(gen);
  scl::EmbeddingBatch batch{scl::Matrix(n, d), std::vector<int>(n)};
  for (size_t i = 0; i < n; ++i) {
    double norm = 0;
    for (size_t c = 0; c < d; ++c) {
      batch.vectors(i, c) = normal(gen);
      norm += batch.vectors(i, c) * batch.vectors(i, c);
    }
    for (size_t c = 0; c < d; ++c) batch.vectors(i, c) /= std::sqrt(norm);
    batch.labels[i] = label_dist(gen);
  }
  return batch;
}

std::vector<double> Flat(const scl::Matrix& m) { return {m.data().begin(), m.data().end()}; }

Outcome SclCorrectness() {
  double worst_loss = 0;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const auto b = MakeBatch(seed);
    const double want = static_cast<double>(testing::SclOracle(
        Flat(b.vectors), b.vectors.rows(), b.vectors.cols(), b.labels, 0.1));
    const double got = scl::SclLoss(b, {0.1});
    worst_loss = std::max(worst_loss, std::abs(got - want) / std::abs(want));
  }

  const scl::EmbeddingBatch three{scl::Matrix{{1, 0}, {1, 0}, {0, 1}}, {0, 0, 1}};
  const double closed = 2.0 / 3.0 * std::log1p(std::exp(-10.0));
  const double three_err = std::abs(scl::SclLoss(three, {0.1}) - closed) / closed;

  double worst_grad = 0;
  for (uint64_t seed = 1001; seed <= 1050; ++seed) {
    const auto b = MakeBatch(seed);
    const size_t n = b.vectors.rows(), d = b.vectors.cols();
    auto loss = [&](const std::vector<double>& x) {
      scl::EmbeddingBatch p{scl::Matrix(n, d), b.labels};
      std::copy(x.begin(), x.end(), p.vectors.data().begin());
      return scl::SclLoss(p, {});
    };
    const auto fd = testing::CentralDifferences(loss, Flat(b.vectors), 1e-5);
    const auto g = Flat(scl::SclGradient(b, {}));
    double diff = 0, scale = 0;
    for (size_t i = 0; i < g.size(); ++i) {
      diff = std::max(diff, std::abs(g[i] - fd[i]));
      scale = std::max({scale, std::abs(g[i]), std::abs(fd[i])});
    }
    worst_grad = std::max(worst_grad, scale < 1e-12 ? diff : diff / scale);
  }
  const bool passed = worst_loss <= 1e-9 && three_err <= 1e-9 && worst_grad <= 1e-4;
  return {passed, "loss rel err " + Fmt("%.2e", worst_loss) + " (20 batches), N=3 rel err " +
                      Fmt("%.2e", three_err) + ", gradient rel err " +
                      Fmt("%.2e", worst_grad) + " (50 batches)"};
}

// -- 6 ---------------------------------------------------------------------------

Outcome SpanEnumeration() {
  size_t cases = 0, bad = 0;
  for (size_t n = 1; n <= 60; ++n) {
    std::string raw;
    for (size_t i = 0; i < n; ++i) raw += (i ? " w" : "w") + std::to_string(i);
    const auto sentence = text::Tokenize(raw);
    for (size_t max_len = 1; max_len <= 8; ++max_len) {
      size_t formula = 0;
      for (size_t l = 1; l <= std::min(n, max_len); ++l) formula += n - l + 1;
      const size_t brute = testing::BruteForceSpanCount(n, max_len);
      ++cases;
      if (formula != brute || text::SpanCount(n, max_len) != brute ||
          text::EnumerateSpans(sentence, max_len).size() != brute) {
        ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(cases - bad) + "/" + std::to_string(cases) + " (n, max_len) pairs"};
}

// -- 7 ---------------------------------------------------------------------------

std::map<std::string, std::string> ReadDir(const std::filesystem::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(entry.path(), std::ios::binary);
    files[entry.path().filename().string()] = {std::istreambuf_iterator<char>(in), {}};
  }
  return files;
}

Outcome CurationDeterminism() {
  const auto corpus = curation::LoadAnnotatedCorpus(DataPath("curation/corpus.jsonl"));
  const auto lexicon = curation::LoadOpinionLexicon(DataPath("curation/positive.txt"),
                                                    DataPath("curation/negative.txt"));
  const auto seeds = curation::LoadSeedAspects(DataPath("curation/seeds.json"));
  curation::CurationConfig config;
  config.rng_seed = 7;
  config.per_label_target = 300;

  const auto root = std::filesystem::temp_directory_path() / "corn_acceptance_curation";
  std::filesystem::remove_all(root);
  const auto first = curation::GenerateDataset(corpus, seeds, lexicon, config);
  curation::WriteDataset(first, root / "a");
  curation::WriteDataset(curation::GenerateDataset(corpus, seeds, lexicon, config), root / "b");
  const auto files_a = ReadDir(root / "a");
  const bool identical = !files_a.empty() && files_a == ReadDir(root / "b");
  std::filesystem::remove_all(root);

  std::map<NliLabel, size_t> counts;
  std::map<std::pair<std::string, Polarity>, std::set<std::string>> clauses;
  size_t in_range = 0, total = 0;
  for (const auto* split : {&first.train, &first.valid, &first.holdout}) {
    for (const auto& ex : *split) {
      ++total;
      ++counts[ex.label];
      const size_t k = ex.meta.premise_clauses.size();
      in_range += k >= 6 && k <= 10;
      for (const auto& c : ex.meta.premise_clauses) clauses[{c.aspect, c.polarity}].insert(c.text);
      clauses[{ex.meta.hypothesis_aspect, ex.meta.hypothesis_polarity}].insert(ex.hypothesis);
    }
  }
  size_t cap = 0;
  for (const auto& [key, texts] : clauses) cap = std::max(cap, texts.size());
  const bool balanced = counts.size() == 3 &&
                        counts[NliLabel::kEntailment] == counts[NliLabel::kNeutral] &&
                        counts[NliLabel::kNeutral] == counts[NliLabel::kContradiction];
  const bool passed = identical && balanced && total > 0 && cap <= 10 && in_range == total;
  return {passed, std::string(identical ? "byte-identical" : "files differ") + ", labels " +
                      std::to_string(counts[NliLabel::kEntailment]) + "/" +
                      std::to_string(counts[NliLabel::kNeutral]) + "/" +
                      std::to_string(counts[NliLabel::kContradiction]) + ", max clauses per " +
                      "(aspect, polarity) " + std::to_string(cap) + ", premise size in [6,10] " +
                      std::to_string(in_range) + "/" + std::to_string(total)};
}

// -- 8 ---------------------------------------------------------------------------

Outcome MetricOracle() {
  using P = Polarity;
  using B = BioLabel;
  using E = E2eLabel;
  std::vector<std::pair<double, double>> pairs;  // (computed, hand)

  const std::vector<P> asc_pred = {P::kPos, P::kNeg, P::kNeu}, asc_gold = {P::kPos, P::kPos, P::kNeu};
  const auto asc = eval::AscMetrics(asc_pred, asc_gold);
  pairs.push_back({*asc.accuracy, 2.0 / 3.0});
  pairs.push_back({asc.macro_f1, 5.0 / 9.0});
  const std::vector<P> one_pred = {P::kPos, P::kPos, P::kPos}, one_gold = {P::kPos, P::kNeu, P::kNeg};
  const auto one = eval::AscMetrics(one_pred, one_gold);
  pairs.push_back({*one.accuracy, 1.0 / 3.0});
  pairs.push_back({one.macro_f1, 1.0 / 6.0});

  const std::vector<B> g = {B::kO, B::kO, B::kO, B::kB, B::kI};
  const std::vector<std::vector<B>> gold_ae = {g};
  const std::vector<std::vector<B>> same = {g};
  const std::vector<std::vector<B>> cut = {{B::kO, B::kO, B::kO, B::kB, B::kO}};
  const std::vector<std::vector<B>> swapped = {{B::kO, B::kO, B::kO, B::kI, B::kB}};
  const auto ae_same = eval::AeMetrics(same, gold_ae);
  const auto ae_cut = eval::AeMetrics(cut, gold_ae);
  const auto ae_swap = eval::AeMetrics(swapped, gold_ae);
  pairs.push_back({*ae_same.accuracy, 1.0});
  pairs.push_back({*ae_same.collapsed_accuracy, 1.0});
  pairs.push_back({*ae_cut.accuracy, 4.0 / 5.0});
  pairs.push_back({*ae_cut.collapsed_accuracy, 4.0 / 5.0});
  pairs.push_back({*ae_swap.accuracy, 3.0 / 5.0});
  pairs.push_back({*ae_swap.collapsed_accuracy, 1.0});

  const std::vector<std::vector<E>> e2e_pred = {
      {E::kO, E::kO, E::kO, E::kO, E::kTNeu, E::kO, E::kTNeu, E::kTNeu, E::kO}};
  const std::vector<std::vector<E>> e2e_gold = {
      {E::kO, E::kO, E::kO, E::kO, E::kO, E::kO, E::kTNeu, E::kTNeu, E::kO}};
  pairs.push_back({eval::E2eMetrics(e2e_pred, e2e_gold).macro_f1, (12.0 / 13.0 + 4.0 / 5.0) / 4.0});
  const std::vector<std::vector<E>> all_o = {{E::kO, E::kO, E::kO}};
  pairs.push_back({eval::E2eMetrics(all_o, all_o).macro_f1, 0.25});

  double worst = 0;
  for (const auto& [got, want] : pairs) worst = std::max(worst, std::abs(got - want));
  return {worst <= 1e-9, std::to_string(pairs.size()) + " values, max abs err " + Fmt("%.2e", worst)};
}

int Main() {
  const std::vector<Criterion> criteria = {
      {"label-mapping totality", 1.0, LabelMappingTotality},
      {"rnli matrix fidelity", 1.0, RnliMatrixFidelity},
      {"oracle round-trip", 5000.0, OracleRoundTrip},
      {"two-step e2e trace", 1000.0, TwoStepTrace},
      {"scl correctness", 10000.0, SclCorrectness},
      {"span enumeration", 1000.0, SpanEnumeration},
      {"curation determinism and balance", 60000.0, CurationDeterminism},
      {"metric oracle", 1000.0, MetricOracle},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_budget = ms < c.budget_ms;
    const bool passed = outcome.passed && in_budget;
    failures += !passed;
    std::printf("%s [%zu] %s: %s (%.3f ms, budget %.0f ms%s)\n", passed ? "PASS" : "FAIL", i + 1,
                c.name.c_str(), outcome.detail.c_str(), ms, c.budget_ms,
                in_budget ? "" : ", over budget");
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace corn

int main() { return corn::Main(); }
