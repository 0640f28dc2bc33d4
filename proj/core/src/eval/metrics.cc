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

#include "corn/eval/metrics.h"

#include "corn/common/error.h"

namespace corn::eval {
namespace {

double Ratio(size_t num, size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

template <typename Label>
void CheckSequences(std::span<const std::vector<Label>> preds,
                    std::span<const std::vector<Label>> gold) {
  if (gold.empty()) throw Error(ErrorCode::kEmptyInput, "no gold sequences");
  if (preds.size() != gold.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(preds.size()) + " predicted sequences for " +
                    std::to_string(gold.size()) + " gold sequences");
  }
  for (size_t i = 0; i < gold.size(); ++i) {
    if (preds[i].size() != gold[i].size()) {
      throw Error(ErrorCode::kLengthMismatch,
                  "sequence " + std::to_string(i) + ": " + std::to_string(preds[i].size()) +
                      " predicted labels for " + std::to_string(gold[i].size()) + " tokens");
    }
  }
}

template <typename Label, size_t N>
std::vector<std::string> Names(const std::array<Label, N>& all) {
  std::vector<std::string> names;
  for (Label l : all) names.emplace_back(ToString(l));
  return names;
}

}  // namespace

MetricReport ScoreClasses(std::string task, std::span<const std::string> labels,
                          std::span<const int> preds, std::span<const int> gold) {
  MetricReport report;
  report.task = std::move(task);
  report.total = gold.size();
  std::vector<ClassMetrics> classes(labels.size());
  for (size_t c = 0; c < labels.size(); ++c) classes[c].label = labels[c];
  for (size_t i = 0; i < gold.size(); ++i) {
    ++classes[gold[i]].support;
    ++classes[preds[i]].predicted;
    if (preds[i] == gold[i]) ++classes[gold[i]].correct;
  }
  for (ClassMetrics& m : classes) {
    m.precision = Ratio(m.correct, m.predicted);
    m.recall = Ratio(m.correct, m.support);
    m.f1 = m.correct == 0 ? 0.0 : 2.0 * m.correct / static_cast<double>(m.predicted + m.support);
    report.macro_precision += m.precision;
    report.macro_recall += m.recall;
    report.macro_f1 += m.f1;
  }
  const double k = static_cast<double>(labels.size());
  report.macro_precision /= k;
  report.macro_recall /= k;
  report.macro_f1 /= k;
  report.per_class = std::move(classes);
  return report;
}

MetricReport AscMetrics(std::span<const Polarity> preds, std::span<const Polarity> gold) {
  if (gold.empty()) throw Error(ErrorCode::kEmptyInput, "no gold labels");
  if (preds.size() != gold.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(preds.size()) + " predictions for " +
                    std::to_string(gold.size()) + " gold labels");
  }
  std::vector<int> p, g;
  for (size_t i = 0; i < gold.size(); ++i) {
    p.push_back(static_cast<int>(preds[i]));
    g.push_back(static_cast<int>(gold[i]));
  }
  const auto names = Names(kAllPolarities);
  MetricReport report = ScoreClasses("asc", names, p, g);
  size_t correct = 0;
  for (const auto& m : report.per_class) correct += m.correct;
  report.accuracy = Ratio(correct, report.total);
  return report;
}

MetricReport AeMetrics(std::span<const std::vector<BioLabel>> preds,
                       std::span<const std::vector<BioLabel>> gold) {
  CheckSequences(preds, gold);
  // Collapsed classes: 0 = T (B or I), 1 = O.
  std::vector<int> p, g;
  size_t bio_correct = 0;
  for (size_t s = 0; s < gold.size(); ++s) {
    for (size_t t = 0; t < gold[s].size(); ++t) {
      if (preds[s][t] == gold[s][t]) ++bio_correct;
      p.push_back(preds[s][t] == BioLabel::kO ? 1 : 0);
      g.push_back(gold[s][t] == BioLabel::kO ? 1 : 0);
    }
  }
  const std::vector<std::string> names = {"T", "O"};
  MetricReport report = ScoreClasses("ae", names, p, g);
  size_t collapsed_correct = 0;
  for (const auto& m : report.per_class) collapsed_correct += m.correct;
  report.accuracy = Ratio(bio_correct, report.total);
  report.collapsed_accuracy = Ratio(collapsed_correct, report.total);
  return report;
}

MetricReport E2eMetrics(std::span<const std::vector<E2eLabel>> preds,
                        std::span<const std::vector<E2eLabel>> gold) {
  CheckSequences(preds, gold);
  std::vector<int> p, g;
  for (size_t s = 0; s < gold.size(); ++s) {
    for (size_t t = 0; t < gold[s].size(); ++t) {
      p.push_back(static_cast<int>(preds[s][t]));
      g.push_back(static_cast<int>(gold[s][t]));
    }
  }
  const auto names = Names(kAllE2eLabels);
  return ScoreClasses("e2e", names, p, g);
}

}  // namespace corn::eval
