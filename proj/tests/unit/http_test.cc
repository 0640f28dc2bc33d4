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

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "corn/backend/http_backend.h"
#include "corn/backend/server.h"
#include "corn/backend/stub_backend.h"
#include "corn/common/error.h"
#include "gtest/gtest.h"
#include "httplib.h"
#include "json.hpp"
#include "oracles/test_data.h"

namespace corn::backend {
namespace {

using json = nlohmann::json;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

std::string Url(int port) { return "http://127.0.0.1:" + std::to_string(port); }

HttpBackendOptions FastOptions(int port) {
  HttpBackendOptions o;
  o.url = Url(port);
  o.initial_backoff = std::chrono::milliseconds(1);
  o.timeout = std::chrono::milliseconds(2000);
  return o;
}

// Raw httplib server with a scripted /v1/classify handler.
class ScriptedServer {
 public:
  explicit ScriptedServer(httplib::Server::Handler handler) {
    server_.Post("/v1/classify", [this, handler](const httplib::Request& req,
                                                 httplib::Response& res) {
      ++requests_;
      handler(req, res);
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~ScriptedServer() {
    server_.stop();
    thread_.join();
  }
  int port() const { return port_; }
  int requests() const { return requests_; }

 private:
  httplib::Server server_;
  std::thread thread_;
  std::atomic<int> requests_{0};
  int port_ = -1;
};

// A port that refuses connections: bound once to learn a free number, then
// closed without listening.
int UnusedPort() {
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = 0;
  ::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr));
  socklen_t len = sizeof(addr);
  ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  ::close(fd);
  return ntohs(addr.sin_port);
}

TEST(CodecTest, EncodeRequest) {
  const std::vector<NliQuery> q = {{"p1", "h1"}, {"p\"2", "h2"}};
  const json body = json::parse(EncodeClassifyRequest(q));
  ASSERT_EQ(body["pairs"].size(), 2u);
  EXPECT_EQ(body["pairs"][1]["premise"], "p\"2");
  EXPECT_EQ(body["pairs"][0]["hypothesis"], "h1");
}

TEST(CodecTest, DecodeResponse) {
  const auto d = DecodeClassifyResponse(
      R"({"predictions":[{"entailment":0.5,"neutral":0.25,"contradiction":0.25}]})", 1);
  EXPECT_EQ(d[0], (NliDistribution{0.5, 0.25, 0.25}));
  for (const std::string bad :
       {"not json", R"({"predictions":[]})", R"({"other":1})",
        R"({"predictions":[{"entailment":0.5,"neutral":0.25}]})",
        R"({"predictions":[{"entailment":0.9,"neutral":0.25,"contradiction":0.25}]})",
        R"({"predictions":[{"entailment":"a","neutral":0.5,"contradiction":0.5}]})"}) {
    EXPECT_EQ(CodeOf([&] { DecodeClassifyResponse(bad, 1); }), ErrorCode::kMalformedResponse)
        << bad;
  }
}

TEST(HandlerTest, ClassifyAndHealth) {
  const StubBackend stub;
  const auto ok = HandleClassify(&stub, R"({"pairs":[{"premise":"a","hypothesis":"b"}]})");
  EXPECT_EQ(ok.status, 200);
  EXPECT_EQ(DecodeClassifyResponse(ok.body, 1).size(), 1u);
  EXPECT_EQ(HandleClassify(nullptr, R"({"pairs":[{"premise":"a","hypothesis":"b"}]})").status,
            503);
  EXPECT_EQ(HandleClassify(&stub, "{").status, 400);
  const auto health = HandleHealth(&stub, "stub-model");
  EXPECT_EQ(health.status, 200);
  EXPECT_EQ(json::parse(health.body)["model"], "stub-model");
  EXPECT_EQ(HandleHealth(nullptr, "x").status, 503);
}

TEST(ServerTest, RoundTripOfRandomPairs) {
  auto stub = std::make_shared<StubBackend>();
  NliServer server(stub, "stub");
  const int port = server.Bind("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  server.Start();

  std::vector<NliQuery> queries;
  for (int i = 0; i < 100; ++i) {
    queries.push_back({"premise number " + std::to_string(i * 13),
                       "hypothesis " + std::to_string(i) + " is great."});
  }
  auto options = FastOptions(port);
  options.batch_size = 7;
  const HttpBackend client(options);
  const auto remote = client.ClassifyBatch(queries);
  const auto local = stub->ClassifyBatch(queries);
  ASSERT_EQ(remote.size(), 100u);
  for (size_t i = 0; i < remote.size(); ++i) {
    EXPECT_NEAR(remote[i].entailment + remote[i].neutral + remote[i].contradiction, 1.0, 1e-6);
    EXPECT_NEAR(remote[i].entailment, local[i].entailment, 1e-12);
    EXPECT_NEAR(remote[i].contradiction, local[i].contradiction, 1e-12);
  }
  EXPECT_EQ(client.Health(), "stub");
  server.Stop();
}

TEST(ServerTest, SwapsBackendWhileServing) {
  NliServer server(nullptr, "stub");
  const int port = server.Bind("127.0.0.1", 0);
  server.Start();
  const HttpBackend client(FastOptions(port));
  const std::vector<NliQuery> q = {{"a", "b"}};
  EXPECT_EQ(CodeOf([&] { client.ClassifyBatch(q); }), ErrorCode::kBackendUnavailable);
  server.SetBackend(std::make_shared<StubBackend>());
  EXPECT_EQ(client.ClassifyBatch(q).size(), 1u);
  server.Stop();
}

TEST(ServerTest, BindFailureIsIoError) {
  NliServer first(std::make_shared<StubBackend>(), "stub");
  const int port = first.Bind("127.0.0.1", 0);
  NliServer second(std::make_shared<StubBackend>(), "stub");
  EXPECT_EQ(CodeOf([&] { second.Bind("127.0.0.1", port); }), ErrorCode::kIoError);
}

TEST(ConformanceTest, Vectors) {
  std::ifstream in(testing::DataPath("backend/conformance.json"));
  const json doc = json::parse(in);
  ASSERT_EQ(doc["cases"].size(), 15u);
  for (const json& c : doc["cases"]) {
    SCOPED_TRACE(c["name"].get<std::string>());
    std::shared_ptr<const NliBackend> model;
    if (c["model_loaded"].get<bool>()) model = std::make_shared<StubBackend>();
    NliServer server(model, "stub");
    const int port = server.Bind("127.0.0.1", 0);
    server.Start();
    httplib::Client http("127.0.0.1", port);
    httplib::Result res;
    if (c["method"] == "GET") {
      res = http.Get(c["path"].get<std::string>());
    } else {
      const std::string body =
          c.contains("raw_body") ? c["raw_body"].get<std::string>() : c["body"].dump();
      res = http.Post(c["path"].get<std::string>(), body, "application/json");
    }
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, c["status"].get<int>());
    if (c.contains("predictions")) {
      const json reply = json::parse(res->body);
      ASSERT_EQ(reply["predictions"].size(), c["predictions"].get<size_t>());
      for (const json& p : reply["predictions"]) {
        const double e = p["entailment"], n = p["neutral"], x = p["contradiction"];
        EXPECT_NEAR(e + n + x, 1.0, 1e-6);
        for (double v : {e, n, x}) {
          EXPECT_GE(v, 0.0);
          EXPECT_LE(v, 1.0);
        }
      }
    }
    if (c.contains("health_status")) {
      EXPECT_EQ(json::parse(res->body)["status"], c["health_status"]);
    }
    server.Stop();
  }
}

TEST(HttpBackendTest, UnreachableAfterRetries) {
  const HttpBackend client(FastOptions(UnusedPort()));
  const std::vector<NliQuery> q = {{"a", "b"}};
  const auto start = std::chrono::steady_clock::now();
  EXPECT_EQ(CodeOf([&] { client.ClassifyBatch(q); }), ErrorCode::kBackendUnavailable);
  // Refused connections fail fast; only the backoff (1 + 2 + 4 ms) is spent.
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(1));
}

TEST(HttpBackendTest, ServerErrorsRetriedThenUnavailable) {
  ScriptedServer server([](const httplib::Request&, httplib::Response& res) {
    res.status = 500;
  });
  const HttpBackend client(FastOptions(server.port()));
  const std::vector<NliQuery> q = {{"a", "b"}};
  EXPECT_EQ(CodeOf([&] { client.ClassifyBatch(q); }), ErrorCode::kBackendUnavailable);
  EXPECT_EQ(server.requests(), 4);  // one attempt plus three retries
}

TEST(HttpBackendTest, TransientErrorRecovers) {
  std::atomic<int> calls{0};
  ScriptedServer server([&](const httplib::Request& req, httplib::Response& res) {
    if (calls++ == 0) {
      res.status = 503;
      return;
    }
    const StubBackend stub;
    res.set_content(HandleClassify(&stub, req.body).body, "application/json");
  });
  const HttpBackend client(FastOptions(server.port()));
  const std::vector<NliQuery> q = {{"a", "b"}};
  EXPECT_EQ(client.ClassifyBatch(q).size(), 1u);
  EXPECT_EQ(server.requests(), 2);
}

TEST(HttpBackendTest, ClientErrorIsMalformedWithoutRetry) {
  ScriptedServer server([](const httplib::Request&, httplib::Response& res) {
    res.status = 400;
    res.set_content(R"({"error":"bad"})", "application/json");
  });
  const HttpBackend client(FastOptions(server.port()));
  const std::vector<NliQuery> q = {{"a", "b"}};
  EXPECT_EQ(CodeOf([&] { client.ClassifyBatch(q); }), ErrorCode::kMalformedResponse);
  EXPECT_EQ(server.requests(), 1);
}

TEST(HttpBackendTest, WrongCountIsMalformed) {
  ScriptedServer server([](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"predictions":[]})", "application/json");
  });
  const HttpBackend client(FastOptions(server.port()));
  const std::vector<NliQuery> q = {{"a", "b"}};
  EXPECT_EQ(CodeOf([&] { client.ClassifyBatch(q); }), ErrorCode::kMalformedResponse);
}

TEST(HttpBackendTest, ChunksByBatchSize) {
  std::vector<size_t> sizes;
  std::mutex mu;
  ScriptedServer server([&](const httplib::Request& req, httplib::Response& res) {
    {
      std::lock_guard<std::mutex> lock(mu);
      sizes.push_back(json::parse(req.body)["pairs"].size());
    }
    const StubBackend stub;
    res.set_content(HandleClassify(&stub, req.body).body, "application/json");
  });
  auto options = FastOptions(server.port());
  options.batch_size = 4;
  const HttpBackend client(options);
  std::vector<NliQuery> q(10, NliQuery{"p", "h"});
  EXPECT_EQ(client.ClassifyBatch(q).size(), 10u);
  EXPECT_EQ(sizes, (std::vector<size_t>{4, 4, 2}));
}

TEST(HttpBackendTest, OptionValidation) {
  EXPECT_EQ(CodeOf([] { HttpBackend({.url = "ftp://host:1"}); }), ErrorCode::kInvalidArgument);
  HttpBackendOptions zero;
  zero.url = "http://localhost:1";
  zero.batch_size = 0;
  EXPECT_EQ(CodeOf([&] { HttpBackend b(zero); }), ErrorCode::kInvalidArgument);
  const HttpBackend client(FastOptions(1));
  EXPECT_EQ(CodeOf([&] { client.ClassifyBatch({}); }), ErrorCode::kInvalidArgument);
}

TEST(HttpBackendTest, TimeoutFromEnvironment) {
  setenv("CORN_HTTP_TIMEOUT_MS", "1234", 1);
  EXPECT_EQ(HttpBackendOptions::FromEnv("http://x:1").timeout.count(), 1234);
  unsetenv("CORN_HTTP_TIMEOUT_MS");
  EXPECT_EQ(HttpBackendOptions::FromEnv("http://x:1").timeout.count(), 30000);
}

}  // namespace
}  // namespace corn::backend
