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

#ifndef CORN_SCL_SCL_H_
#define CORN_SCL_SCL_H_

#include <vector>

#include "corn/scl/matrix.h"

namespace corn::scl {

struct EmbeddingBatch {
  Matrix vectors;           // N x d, row i is z_i
  std::vector<int> labels;  // N class ids
};

struct SclConfig {
  double temperature = 0.1;
};

// Supervised contrastive loss over a batch:
//
//   L = 1/N sum_i L_i
//   L_i = -1/|A_i| sum_{j in A_i} log( exp(s_ij) / sum_{k != i} exp(s_ik) )
//   s_ik = z_i . z_k / tau,   A_i = { j != i : y_j == y_i }
//
// Rows with empty A_i contribute 0 but still count in N. Vectors are used
// as given, without normalization.
//
// Errors: kDegenerateBatch for N < 2 or d == 0, kInvalidArgument for
// tau <= 0 or a label count that differs from N, kNonFinite for non-finite
// entries.
double SclLoss(const EmbeddingBatch& batch, const SclConfig& config = {});

// dL/dZ, same shape as batch.vectors.
Matrix SclGradient(const EmbeddingBatch& batch, const SclConfig& config = {});

// Both at once, sharing the similarity computation.
double SclLossAndGradient(const EmbeddingBatch& batch, const SclConfig& config,
                          Matrix* gradient);

}  // namespace corn::scl

#endif  // CORN_SCL_SCL_H_
