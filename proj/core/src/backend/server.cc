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

#include "corn/backend/server.h"

#include "corn/backend/http_backend.h"
#include "corn/common/error.h"
#include "httplib.h"
#include "json.hpp"

namespace corn::backend {
namespace {

HttpReply ErrorReply(int status, const std::string& message) {
  return {status, nlohmann::json{{"error", message}}.dump()};
}

}  // namespace

HttpReply HandleClassify(const NliBackend* backend, std::string_view body) {
  using nlohmann::json;
  if (backend == nullptr) return ErrorReply(503, "model not loaded");

  std::vector<NliQuery> queries;
  try {
    const json doc = json::parse(body);
    if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array()) {
      return ErrorReply(400, "request must be an object with a 'pairs' array");
    }
    for (const json& pair : doc["pairs"]) {
      if (!pair.is_object() || !pair.contains("premise") || !pair.contains("hypothesis") ||
          !pair["premise"].is_string() || !pair["hypothesis"].is_string()) {
        return ErrorReply(400, "each pair needs string 'premise' and 'hypothesis'");
      }
      NliQuery q{pair["premise"].get<std::string>(), pair["hypothesis"].get<std::string>()};
      if (q.premise.empty() || q.hypothesis.empty()) {
        return ErrorReply(400, "premise and hypothesis must be non-empty");
      }
      queries.push_back(std::move(q));
    }
  } catch (const json::exception& e) {
    return ErrorReply(400, std::string("invalid JSON: ") + e.what());
  }
  if (queries.empty()) return ErrorReply(400, "'pairs' is empty");

  std::vector<NliDistribution> predictions;
  try {
    predictions = backend->ClassifyBatch(queries);
    for (const auto& d : predictions) ValidateDistribution(d);
  } catch (const Error& e) {
    return ErrorReply(e.code() == ErrorCode::kBackendUnavailable ? 503 : 500, e.what());
  }
  json out = json::array();
  for (const NliDistribution& d : predictions) {
    out.push_back({{"entailment", d.entailment},
                   {"neutral", d.neutral},
                   {"contradiction", d.contradiction}});
  }
  return {200, json{{"predictions", std::move(out)}}.dump()};
}

HttpReply HandleHealth(const NliBackend* backend, std::string_view model_name) {
  if (backend == nullptr) {
    return {503, nlohmann::json{{"status", "loading"}, {"model", model_name}}.dump()};
  }
  return {200, nlohmann::json{{"status", "ok"}, {"model", model_name}}.dump()};
}

NliServer::NliServer(std::shared_ptr<const NliBackend> backend, std::string model_name)
    : backend_(std::move(backend)),
      model_name_(std::move(model_name)),
      server_(std::make_unique<httplib::Server>()) {
  // httplib's default sets SO_REUSEPORT, which lets a second server share an
  // occupied port. Keep SO_REUSEADDR only so such a bind fails.
  server_->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  server_->Post("/v1/classify", [this](const httplib::Request& req, httplib::Response& res) {
    const auto model = this->backend();
    const HttpReply reply = HandleClassify(model.get(), req.body);
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  });
  server_->Get("/v1/health", [this](const httplib::Request&, httplib::Response& res) {
    const auto model = this->backend();
    const HttpReply reply = HandleHealth(model.get(), model_name_);
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  });
}

NliServer::~NliServer() { Stop(); }

int NliServer::Bind(const std::string& host, int port) {
  if (port == 0) {
    port_ = server_->bind_to_any_port(host);
  } else {
    port_ = server_->bind_to_port(host, port) ? port : -1;
  }
  if (port_ < 0) {
    throw Error(ErrorCode::kIoError,
                "cannot bind " + host + ":" + std::to_string(port));
  }
  return port_;
}

void NliServer::Start() {
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
}

void NliServer::Run() { server_->listen_after_bind(); }

void NliServer::Stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

void NliServer::SetBackend(std::shared_ptr<const NliBackend> backend) {
  std::lock_guard<std::mutex> lock(mu_);
  backend_ = std::move(backend);
}

std::shared_ptr<const NliBackend> NliServer::backend() const {
  std::lock_guard<std::mutex> lock(mu_);
  return backend_;
}

}  // namespace corn::backend
