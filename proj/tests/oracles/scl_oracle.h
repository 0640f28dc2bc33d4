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

#ifndef CORN_TESTS_ORACLES_SCL_ORACLE_H_
#define CORN_TESTS_ORACLES_SCL_ORACLE_H_

// Reference values for the supervised contrastive loss, computed in 50-digit
// decimal arithmetic straight from the definition. No shifting or other
// numerical care is applied; the precision makes it unnecessary.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace corn::testing {

using BigFloat = boost::multiprecision::cpp_dec_float_50;

// vectors: row-major N x d.
inline BigFloat SclOracle(const std::vector<double>& vectors, size_t n, size_t d,
                          const std::vector<int>& labels, double temperature) {
  const BigFloat tau(temperature);
  auto sim = [&](size_t i, size_t k) {
    BigFloat s = 0;
    for (size_t c = 0; c < d; ++c) {
      s += BigFloat(vectors[i * d + c]) * BigFloat(vectors[k * d + c]);
    }
    return s / tau;
  };
  BigFloat total = 0;
  for (size_t i = 0; i < n; ++i) {
    BigFloat denom = 0;
    for (size_t k = 0; k < n; ++k) {
      if (k != i) denom += exp(sim(i, k));
    }
    BigFloat li = 0;
    size_t positives = 0;
    for (size_t j = 0; j < n; ++j) {
      if (j == i || labels[j] != labels[i]) continue;
      li -= log(exp(sim(i, j)) / denom);
      ++positives;
    }
    if (positives > 0) total += li / BigFloat(positives);
  }
  return total / BigFloat(n);
}

// Central differences of an arbitrary scalar function of a flat vector.
template <typename F>
std::vector<double> CentralDifferences(F loss, std::vector<double> x, double h) {
  std::vector<double> g(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    const double orig = x[i];
    x[i] = orig + h;
    const double up = loss(x);
    x[i] = orig - h;
    const double down = loss(x);
    x[i] = orig;
    g[i] = (up - down) / (2 * h);
  }
  return g;
}

}  // namespace corn::testing

#endif  // CORN_TESTS_ORACLES_SCL_ORACLE_H_
