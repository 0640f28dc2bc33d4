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

#ifndef CORN_EVAL_METRICS_H_
#define CORN_EVAL_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corn/common/labels.h"

namespace corn::eval {

struct ClassMetrics {
  std::string label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  size_t support = 0;    // gold count
  size_t predicted = 0;  // predicted count
  size_t correct = 0;
};

// Macro scores average over a fixed class set. A class that never occurs in
// gold or predictions still counts, with P = R = F1 = 0.
struct MetricReport {
  std::string task;  // "asc", "ae" or "e2e"
  std::optional<double> accuracy;             // ASC labels; AE {B,I,O}
  std::optional<double> collapsed_accuracy;   // AE only, {T,O}
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  std::vector<ClassMetrics> per_class;  // ASC/E2E labels, or T/O for AE
  size_t total = 0;                     // items (ASC) or tokens
};

// Builds per-class and macro scores from parallel label-index vectors over
// `labels.size()` classes.
MetricReport ScoreClasses(std::string task, std::span<const std::string> labels,
                          std::span<const int> preds, std::span<const int> gold);

// Errors: kEmptyInput for an empty list, kLengthMismatch for unequal
// lengths (per sentence for the sequence tasks).
MetricReport AscMetrics(std::span<const Polarity> preds, std::span<const Polarity> gold);
MetricReport AeMetrics(std::span<const std::vector<BioLabel>> preds,
                       std::span<const std::vector<BioLabel>> gold);
MetricReport E2eMetrics(std::span<const std::vector<E2eLabel>> preds,
                        std::span<const std::vector<E2eLabel>> gold);

}  // namespace corn::eval

#endif  // CORN_EVAL_METRICS_H_
