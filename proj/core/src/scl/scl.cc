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

#include "corn/scl/scl.h"

#include <cmath>

#include "corn/common/error.h"

namespace corn::scl {
namespace {

void Validate(const EmbeddingBatch& batch, const SclConfig& config) {
  const size_t n = batch.vectors.rows();
  if (n < 2 || batch.vectors.cols() == 0) {
    throw Error(ErrorCode::kDegenerateBatch,
                "batch needs at least 2 vectors of positive dimension");
  }
  if (batch.labels.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "label count differs from vector count");
  }
  if (!(config.temperature > 0.0) || !std::isfinite(config.temperature)) {
    throw Error(ErrorCode::kInvalidArgument, "temperature must be positive and finite");
  }
  if (!batch.vectors.AllFinite()) {
    throw Error(ErrorCode::kNonFinite, "embedding batch has non-finite entries");
  }
}

}  // namespace

double SclLossAndGradient(const EmbeddingBatch& batch, const SclConfig& config,
                          Matrix* gradient) {
  Validate(batch, config);
  const Matrix& z = batch.vectors;
  const size_t n = z.rows();
  const size_t d = z.cols();
  const double inv_tau = 1.0 / config.temperature;
  const double inv_n = 1.0 / static_cast<double>(n);

  // coeff(i, k) = dL/ds_ik.
  Matrix coeff(n, n);
  std::vector<double> logits(n);
  double loss = 0.0;
  for (size_t i = 0; i < n; ++i) {
    size_t positives = 0;
    for (size_t k = 0; k < n; ++k) {
      if (k != i && batch.labels[k] == batch.labels[i]) ++positives;
    }
    if (positives == 0) continue;

    // Shifted log-sum-exp. The max term contributes exactly 1, so the sum is
    // 1 + rest and log1p keeps precision when the other terms are tiny.
    size_t arg_max = i == 0 ? 1 : 0;
    for (size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      logits[k] = Dot(z.Row(i), z.Row(k)) * inv_tau;
      if (logits[k] > logits[arg_max]) arg_max = k;
    }
    const double row_max = logits[arg_max];
    double rest = 0.0;
    for (size_t k = 0; k < n; ++k) {
      if (k != i && k != arg_max) rest += std::exp(logits[k] - row_max);
    }
    const double log_sum = std::log1p(rest);

    const double inv_pos = 1.0 / static_cast<double>(positives);
    double row_loss = 0.0;
    for (size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      const bool positive = batch.labels[k] == batch.labels[i];
      const double log_p = (logits[k] - row_max) - log_sum;
      if (positive) row_loss -= log_p * inv_pos;
      coeff(i, k) = (std::exp(log_p) - (positive ? inv_pos : 0.0)) * inv_n;
    }
    loss += row_loss;
  }
  loss *= inv_n;

  if (gradient != nullptr) {
    // dL/dz_i = 1/tau * sum_k (coeff(i,k) + coeff(k,i)) z_k.
    Matrix g(n, d);
    for (size_t i = 0; i < n; ++i) {
      auto gi = g.Row(i);
      for (size_t k = 0; k < n; ++k) {
        const double c = (coeff(i, k) + coeff(k, i)) * inv_tau;
        if (c == 0.0) continue;
        const auto zk = z.Row(k);
        for (size_t c_idx = 0; c_idx < d; ++c_idx) gi[c_idx] += c * zk[c_idx];
      }
    }
    *gradient = std::move(g);
  }
  if (!std::isfinite(loss)) throw Error(ErrorCode::kNonFinite, "loss overflowed");
  return loss;
}

double SclLoss(const EmbeddingBatch& batch, const SclConfig& config) {
  return SclLossAndGradient(batch, config, nullptr);
}

Matrix SclGradient(const EmbeddingBatch& batch, const SclConfig& config) {
  Matrix g;
  SclLossAndGradient(batch, config, &g);
  return g;
}

}  // namespace corn::scl
