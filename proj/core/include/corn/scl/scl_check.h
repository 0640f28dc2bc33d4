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

#ifndef CORN_SCL_SCL_CHECK_H_
#define CORN_SCL_SCL_CHECK_H_

#include <cstdint>
#include <string>
#include <vector>

#include "corn/scl/scl.h"

namespace corn::scl {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckOptions {
  uint64_t seed = 20230601;
  int oracle_batches = 20;
  int gradient_batches = 50;
  double oracle_tolerance = 1e-9;
  double gradient_tolerance = 1e-4;
  double fd_step = 1e-5;
};

// Extended-precision evaluation of the loss straight from the definition,
// independent of SclLossAndGradient. Used as a reference.
long double ReferenceLoss(const EmbeddingBatch& batch, long double temperature);

// Central finite differences of SclLoss with step h.
Matrix FiniteDifferenceGradient(const EmbeddingBatch& batch, const SclConfig& config,
                                double h);

// max|a - b| / max(max|a|, max|b|), or the absolute difference when both
// are below `floor`.
double RelativeMaxError(const Matrix& a, const Matrix& b, double floor = 1e-12);

// Random batch with N in [n_min, n_max], d in [d_min, d_max], unit-norm
// rows and labels drawn from `classes` classes.
EmbeddingBatch RandomBatch(uint64_t seed, size_t n_min, size_t n_max, size_t d_min,
                           size_t d_max, int classes = 3);

// Runs the property suite: reference agreement, the closed-form three-vector
// case, gradient vs finite differences, permutation invariance,
// non-negativity on normalized inputs, empty-positive handling and large
// logit stability.
std::vector<CheckResult> RunSclChecks(const CheckOptions& options = {});

}  // namespace corn::scl

#endif  // CORN_SCL_SCL_CHECK_H_
