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

#ifndef CORN_BACKEND_HTTP_BACKEND_H_
#define CORN_BACKEND_HTTP_BACKEND_H_

#include <chrono>
#include <cstddef>
#include <string>

#include "corn/backend/backend.h"

namespace corn::backend {

struct HttpBackendOptions {
  std::string url;  // "http://host:port" with an optional path prefix
  size_t batch_size = 32;
  int max_retries = 3;
  std::chrono::milliseconds initial_backoff{100};
  std::chrono::milliseconds timeout{30000};

  // Reads CORN_HTTP_TIMEOUT_MS into `timeout` when set.
  static HttpBackendOptions FromEnv(std::string url);
};

// Client for the batch classification protocol:
//
//   POST {prefix}/v1/classify
//     {"pairs": [{"premise": "...", "hypothesis": "..."}, ...]}
//   200 {"predictions": [{"entailment": x, "neutral": y, "contradiction": z}]}
//
// Queries are sent in chunks of batch_size. Connection failures and 5xx
// answers are retried max_retries times with doubling backoff, after which
// the call fails with Error(kBackendUnavailable). 4xx answers, wrong
// prediction counts and invalid distributions are Error(kMalformedResponse).
class HttpBackend : public NliBackend {
 public:
  explicit HttpBackend(HttpBackendOptions options);

  std::vector<NliDistribution> ClassifyBatch(
      std::span<const NliQuery> queries) const override;
  std::string Name() const override { return options_.url; }

  // GET {prefix}/v1/health; returns the reported model name.
  std::string Health() const;

 private:
  std::vector<NliDistribution> PostChunk(std::span<const NliQuery> chunk) const;

  HttpBackendOptions options_;
  std::string origin_;  // scheme://host:port
  std::string prefix_;  // path prefix without trailing slash
};

// Request/response bodies of the protocol, shared with the server.
std::string EncodeClassifyRequest(std::span<const NliQuery> queries);
std::vector<NliDistribution> DecodeClassifyResponse(const std::string& body,
                                                    size_t expected);

}  // namespace corn::backend

#endif  // CORN_BACKEND_HTTP_BACKEND_H_
