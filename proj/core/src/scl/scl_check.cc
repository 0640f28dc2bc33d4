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

#include "corn/scl/scl_check.h"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "corn/common/rng.h"

namespace corn::scl {
namespace {

std::string Format(const char* fmt, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

double RelativeError(double got, double want) {
  if (got == want) return 0.0;
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

EmbeddingBatch Permute(const EmbeddingBatch& batch, const std::vector<size_t>& order) {
  EmbeddingBatch out{Matrix(batch.vectors.rows(), batch.vectors.cols()), {}};
  for (size_t r = 0; r < order.size(); ++r) {
    auto src = batch.vectors.Row(order[r]);
    std::copy(src.begin(), src.end(), out.vectors.Row(r).begin());
    out.labels.push_back(batch.labels[order[r]]);
  }
  return out;
}

}  // namespace

long double ReferenceLoss(const EmbeddingBatch& batch, long double temperature) {
  const Matrix& z = batch.vectors;
  const size_t n = z.rows();
  auto sim = [&](size_t i, size_t k) {
    long double s = 0.0L;
    for (size_t c = 0; c < z.cols(); ++c) {
      s += static_cast<long double>(z(i, c)) * static_cast<long double>(z(k, c));
    }
    return s / temperature;
  };
  long double total = 0.0L;
  for (size_t i = 0; i < n; ++i) {
    std::vector<size_t> positives;
    for (size_t j = 0; j < n; ++j) {
      if (j != i && batch.labels[j] == batch.labels[i]) positives.push_back(j);
    }
    if (positives.empty()) continue;
    long double shift = -INFINITY;
    for (size_t k = 0; k < n; ++k) {
      if (k != i) shift = std::max(shift, sim(i, k));
    }
    long double denom = 0.0L;
    for (size_t k = 0; k < n; ++k) {
      if (k != i) denom += std::exp(sim(i, k) - shift);
    }
    long double li = 0.0L;
    const long double log_denom = std::log(denom);
    for (size_t j : positives) li -= (sim(i, j) - shift) - log_denom;
    total += li / static_cast<long double>(positives.size());
  }
  return total / static_cast<long double>(n);
}

Matrix FiniteDifferenceGradient(const EmbeddingBatch& batch, const SclConfig& config,
                                double h) {
  EmbeddingBatch work = batch;
  Matrix g(batch.vectors.rows(), batch.vectors.cols());
  for (size_t r = 0; r < g.rows(); ++r) {
    for (size_t c = 0; c < g.cols(); ++c) {
      const double orig = work.vectors(r, c);
      work.vectors(r, c) = orig + h;
      const double up = SclLoss(work, config);
      work.vectors(r, c) = orig - h;
      const double down = SclLoss(work, config);
      work.vectors(r, c) = orig;
      g(r, c) = (up - down) / (2.0 * h);
    }
  }
  return g;
}

double RelativeMaxError(const Matrix& a, const Matrix& b, double floor) {
  double diff = 0.0;
  for (size_t i = 0; i < a.data().size(); ++i) {
    diff = std::max(diff, std::abs(a.data()[i] - b.data()[i]));
  }
  const double scale = std::max(a.MaxAbs(), b.MaxAbs());
  return scale < floor ? diff : diff / scale;
}

EmbeddingBatch RandomBatch(uint64_t seed, size_t n_min, size_t n_max, size_t d_min,
                           size_t d_max, int classes) {
  Rng rng(seed);
  const size_t n = rng.Between(n_min, n_max);
  const size_t d = rng.Between(d_min, d_max);
  EmbeddingBatch batch{Matrix(n, d), {}};
  for (size_t r = 0; r < n; ++r) {
    auto row = batch.vectors.Row(r);
    double norm = 0.0;
    while (norm < 1e-3) {
      for (double& v : row) v = 2.0 * rng.Uniform() - 1.0;
      norm = std::sqrt(Dot(row, row));
    }
    for (double& v : row) v /= norm;
    batch.labels.push_back(static_cast<int>(rng.Below(static_cast<uint64_t>(classes))));
  }
  return batch;
}

std::vector<CheckResult> RunSclChecks(const CheckOptions& options) {
  std::vector<CheckResult> results;
  const double taus[] = {0.05, 0.1, 1.0};

  {
    double worst = 0.0;
    for (int b = 0; b < options.oracle_batches; ++b) {
      const EmbeddingBatch batch = RandomBatch(options.seed + b, 2, 16, 2, 8);
      const double tau = taus[b % 3];
      const double got = SclLoss(batch, {tau});
      const double want = static_cast<double>(ReferenceLoss(batch, tau));
      worst = std::max(worst, RelativeError(got, want));
    }
    results.push_back({"loss_vs_reference", worst <= options.oracle_tolerance,
                       std::to_string(options.oracle_batches) +
                           Format(" batches, max relative error %.3g", worst)});
  }

  {
    const EmbeddingBatch batch{Matrix{{1, 0}, {1, 0}, {0, 1}}, {0, 0, 1}};
    const double got = SclLoss(batch, {0.1});
    const double want = (2.0 / 3.0) * std::log1p(std::exp(-10.0));
    const double err = RelativeError(got, want);
    results.push_back({"three_vector_closed_form", err <= options.oracle_tolerance,
                       Format("loss %.12g, expected %.12g", got, want)});
  }

  {
    double worst = 0.0;
    for (int b = 0; b < options.gradient_batches; ++b) {
      const EmbeddingBatch batch = RandomBatch(options.seed + 1000 + b, 2, 16, 2, 8);
      const SclConfig config{taus[b % 3]};
      const Matrix analytic = SclGradient(batch, config);
      const Matrix numeric = FiniteDifferenceGradient(batch, config, options.fd_step);
      worst = std::max(worst, RelativeMaxError(analytic, numeric));
    }
    results.push_back({"gradient_vs_finite_differences",
                       worst <= options.gradient_tolerance,
                       std::to_string(options.gradient_batches) +
                           Format(" batches, max relative error %.3g", worst)});
  }

  {
    double worst_loss = 0.0;
    double worst_grad = 0.0;
    for (int b = 0; b < 10; ++b) {
      const EmbeddingBatch batch = RandomBatch(options.seed + 2000 + b, 2, 16, 2, 8);
      std::vector<size_t> order(batch.labels.size());
      std::iota(order.begin(), order.end(), size_t{0});
      Rng(options.seed + b).Shuffle(order);
      const EmbeddingBatch permuted = Permute(batch, order);
      worst_loss = std::max(worst_loss,
                            RelativeError(SclLoss(permuted), SclLoss(batch)));
      const Matrix g = SclGradient(batch);
      const Matrix gp = SclGradient(permuted);
      const Matrix g_reordered = Permute({g, batch.labels}, order).vectors;
      worst_grad = std::max(worst_grad, RelativeMaxError(gp, g_reordered));
    }
    results.push_back({"permutation_invariance", worst_loss <= 1e-12 && worst_grad <= 1e-12,
                       Format("loss %.3g, gradient %.3g", worst_loss, worst_grad)});
  }

  {
    double min_loss = INFINITY;
    for (int b = 0; b < 20; ++b) {
      const EmbeddingBatch batch = RandomBatch(options.seed + 3000 + b, 2, 16, 2, 8);
      min_loss = std::min(min_loss, SclLoss(batch, {taus[b % 3]}));
    }
    results.push_back({"non_negative_on_unit_vectors", min_loss >= 0.0,
                       Format("minimum loss %.6g", min_loss)});
  }

  {
    const EmbeddingBatch batch{Matrix{{0.3, -1.2}, {2.0, 0.5}, {-0.7, 0.1}}, {0, 1, 2}};
    const double loss = SclLoss(batch);
    const double gmax = SclGradient(batch).MaxAbs();
    results.push_back({"empty_positive_sets", loss == 0.0 && gmax == 0.0,
                       Format("loss %.3g, max gradient %.3g", loss, gmax)});
  }

  {
    // Scale rows so the largest logit reaches 1e4.
    EmbeddingBatch batch = RandomBatch(options.seed + 4000, 8, 8, 4, 4);
    const double scale = std::sqrt(1e4 * 0.1);
    for (double& v : batch.vectors.data()) v *= scale;
    const double got = SclLoss(batch, {0.1});
    const double want = static_cast<double>(ReferenceLoss(batch, 0.1L));
    const double err = RelativeError(got, want);
    results.push_back({"large_logit_stability", std::isfinite(got) && err <= 1e-6,
                       Format("loss %.9g, relative error %.3g", got, err)});
  }
  return results;
}

}  // namespace corn::scl
