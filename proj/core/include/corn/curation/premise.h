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

#ifndef CORN_CURATION_PREMISE_H_
#define CORN_CURATION_PREMISE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "corn/common/labels.h"
#include "corn/curation/polarity.h"

namespace corn::curation {

using PremiseMap = std::map<std::string, Polarity, std::less<>>;

struct Premise {
  std::string text;
  PremiseMap aspect_polarity;
  std::vector<size_t> pool_indices;  // sampled clauses, in premise order
};

// Draws k uniformly from [k_min, min(k_max, pool.size())], then k clauses
// without replacement, and joins their texts with ". " plus a final period.
// Deterministic in (pool, rng_seed).
//
// Throws Error(kPoolTooSmall) when pool.size() < k_min and
// Error(kInvalidArgument) when two pool clauses share an aspect.
Premise ComposePremise(std::span<const SentimentClause> pool, uint64_t rng_seed,
                       size_t k_min = 6, size_t k_max = 10);

}  // namespace corn::curation

#endif  // CORN_CURATION_PREMISE_H_
