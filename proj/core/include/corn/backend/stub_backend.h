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

#ifndef CORN_BACKEND_STUB_BACKEND_H_
#define CORN_BACKEND_STUB_BACKEND_H_

#include "corn/backend/backend.h"

namespace corn::backend {

// Deterministic pseudo-distribution derived from a hash of the pair. Used by
// the bundled fixture server for protocol conformance runs.
class StubBackend : public NliBackend {
 public:
  std::vector<NliDistribution> ClassifyBatch(
      std::span<const NliQuery> queries) const override;
  std::string Name() const override { return "stub"; }
};

}  // namespace corn::backend

#endif  // CORN_BACKEND_STUB_BACKEND_H_
