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

#ifndef CORN_BACKEND_BACKEND_H_
#define CORN_BACKEND_BACKEND_H_

#include <span>
#include <string>
#include <vector>

#include "corn/common/labels.h"

namespace corn::backend {

// Probability triple over the NLI labels.
struct NliDistribution {
  double entailment = 0.0;
  double neutral = 0.0;
  double contradiction = 0.0;

  static NliDistribution OneHot(NliLabel label);

  double operator[](NliLabel label) const;

  // Each component in [0, 1] and the sum within `tolerance` of 1.
  bool IsValid(double tolerance = 1e-6) const;

  // Highest component; ties resolve entailment > neutral > contradiction.
  NliLabel Argmax() const;

  bool operator==(const NliDistribution&) const = default;
};

// Throws Error(kMalformedResponse) describing the violation.
void ValidateDistribution(const NliDistribution& distribution);

struct NliQuery {
  std::string premise;
  std::string hypothesis;

  bool operator==(const NliQuery&) const = default;
};

struct ModelInput {
  std::string formatted;
};

// "[CLS] premise [SEP] hypothesis [SEP]". Text is inserted verbatim, so a
// literal "[SEP]" inside the premise is not escaped. Empty premise or
// hypothesis is Error(kInvalidArgument).
ModelInput FormatModelInput(const NliQuery& query);

// An NLI classifier. Implementations are shared across threads and must be
// safe to call concurrently; identical input gives identical output for the
// deterministic backends.
class NliBackend {
 public:
  virtual ~NliBackend() = default;

  // One distribution per query, in order. An empty batch is
  // Error(kInvalidArgument).
  virtual std::vector<NliDistribution> ClassifyBatch(
      std::span<const NliQuery> queries) const = 0;

  virtual std::string Name() const = 0;
};

}  // namespace corn::backend

#endif  // CORN_BACKEND_BACKEND_H_
