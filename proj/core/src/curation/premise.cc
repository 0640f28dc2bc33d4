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

#include "corn/curation/premise.h"

#include <algorithm>
#include <set>

#include "corn/common/error.h"
#include "corn/common/rng.h"

namespace corn::curation {

Premise ComposePremise(std::span<const SentimentClause> pool, uint64_t rng_seed,
                       size_t k_min, size_t k_max) {
  if (k_min == 0 || k_min > k_max) {
    throw Error(ErrorCode::kInvalidArgument, "need 0 < k_min <= k_max");
  }
  if (pool.size() < k_min) {
    throw Error(ErrorCode::kPoolTooSmall,
                "pool has " + std::to_string(pool.size()) +
                    " clauses, premise needs at least " + std::to_string(k_min));
  }
  std::set<std::string_view> seen;
  for (const SentimentClause& c : pool) {
    if (!seen.insert(c.aspect).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "premise pool repeats aspect '" + c.aspect + "'");
    }
  }

  Rng rng(rng_seed);
  const size_t k = rng.Between(k_min, std::min(k_max, pool.size()));
  Premise premise;
  premise.pool_indices = rng.Sample(pool.size(), k);
  for (size_t i = 0; i < premise.pool_indices.size(); ++i) {
    const SentimentClause& c = pool[premise.pool_indices[i]];
    if (i > 0) premise.text += ". ";
    premise.text += c.clause.text;
    premise.aspect_polarity.emplace(c.aspect, c.polarity);
  }
  premise.text += ".";
  return premise;
}

}  // namespace corn::curation
