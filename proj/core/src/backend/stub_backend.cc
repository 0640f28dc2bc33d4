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

#include "corn/backend/stub_backend.h"

#include "corn/common/error.h"
#include "corn/common/rng.h"

namespace corn::backend {

std::vector<NliDistribution> StubBackend::ClassifyBatch(
    std::span<const NliQuery> queries) const {
  if (queries.empty()) throw Error(ErrorCode::kInvalidArgument, "empty batch");
  std::vector<NliDistribution> out;
  out.reserve(queries.size());
  for (const NliQuery& q : queries) {
    Rng rng(Fnv1a64(q.premise) * 31 + Fnv1a64(q.hypothesis));
    const double e = 1.0 + static_cast<double>(rng.Below(1000));
    const double n = 1.0 + static_cast<double>(rng.Below(1000));
    const double c = 1.0 + static_cast<double>(rng.Below(1000));
    const double total = e + n + c;
    out.push_back({e / total, n / total, c / total});
  }
  return out;
}

}  // namespace corn::backend
