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

#include "corn/backend/http_backend.h"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "corn/common/error.h"
#include "httplib.h"
#include "json.hpp"

namespace corn::backend {

HttpBackendOptions HttpBackendOptions::FromEnv(std::string url) {
  HttpBackendOptions options;
  options.url = std::move(url);
  if (const char* env = std::getenv("CORN_HTTP_TIMEOUT_MS")) {
    char* end = nullptr;
    const long ms = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && ms > 0) {
      options.timeout = std::chrono::milliseconds(ms);
    }
  }
  return options;
}

HttpBackend::HttpBackend(HttpBackendOptions options) : options_(std::move(options)) {
  if (options_.batch_size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "batch size must be positive");
  }
  const std::string& url = options_.url;
  const size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos || url.substr(0, scheme_end) != "http") {
    throw Error(ErrorCode::kInvalidArgument, "expected an http:// URL, got '" + url + "'");
  }
  const size_t path_start = url.find('/', scheme_end + 3);
  origin_ = url.substr(0, path_start);
  if (path_start != std::string::npos) {
    prefix_ = url.substr(path_start);
    while (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
  }
}

std::string EncodeClassifyRequest(std::span<const NliQuery> queries) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const NliQuery& q : queries) {
    pairs.push_back({{"premise", q.premise}, {"hypothesis", q.hypothesis}});
  }
  return nlohmann::json{{"pairs", std::move(pairs)}}.dump();
}

std::vector<NliDistribution> DecodeClassifyResponse(const std::string& body,
                                                    size_t expected) {
  using nlohmann::json;
  std::vector<NliDistribution> out;
  try {
    const json doc = json::parse(body);
    const json& predictions = doc.at("predictions");
    if (!predictions.is_array() || predictions.size() != expected) {
      throw Error(ErrorCode::kMalformedResponse,
                  "expected " + std::to_string(expected) + " predictions");
    }
    for (const json& p : predictions) {
      NliDistribution d{p.at("entailment").get<double>(), p.at("neutral").get<double>(),
                        p.at("contradiction").get<double>()};
      ValidateDistribution(d);
      out.push_back(d);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedResponse, std::string("classify response: ") + e.what());
  }
  return out;
}

std::vector<NliDistribution> HttpBackend::PostChunk(std::span<const NliQuery> chunk) const {
  const std::string body = EncodeClassifyRequest(chunk);
  std::string last_error;
  auto backoff = options_.initial_backoff;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    httplib::Client client(origin_);
    client.set_connection_timeout(options_.timeout);
    client.set_read_timeout(options_.timeout);
    client.set_write_timeout(options_.timeout);
    const httplib::Result res =
        client.Post(prefix_ + "/v1/classify", body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status == 200) return DecodeClassifyResponse(res->body, chunk.size());
    if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    throw Error(ErrorCode::kMalformedResponse,
                "server rejected request with HTTP " + std::to_string(res->status) +
                    ": " + res->body);
  }
  throw Error(ErrorCode::kBackendUnavailable,
              options_.url + " unavailable after " + std::to_string(options_.max_retries) +
                  " retries (" + last_error + ")");
}

std::vector<NliDistribution> HttpBackend::ClassifyBatch(
    std::span<const NliQuery> queries) const {
  if (queries.empty()) throw Error(ErrorCode::kInvalidArgument, "empty batch");
  std::vector<NliDistribution> out;
  out.reserve(queries.size());
  for (size_t start = 0; start < queries.size(); start += options_.batch_size) {
    const size_t len = std::min(options_.batch_size, queries.size() - start);
    auto part = PostChunk(queries.subspan(start, len));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string HttpBackend::Health() const {
  httplib::Client client(origin_);
  client.set_connection_timeout(options_.timeout);
  client.set_read_timeout(options_.timeout);
  const httplib::Result res = client.Get(prefix_ + "/v1/health");
  if (!res || res->status != 200) {
    throw Error(ErrorCode::kBackendUnavailable, options_.url + " health check failed");
  }
  try {
    return nlohmann::json::parse(res->body).at("model").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedResponse, std::string("health response: ") + e.what());
  }
}

}  // namespace corn::backend
