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

#ifndef CORN_BACKEND_SERVER_H_
#define CORN_BACKEND_SERVER_H_

#include <atomic>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>

#include "corn/backend/backend.h"

namespace httplib {
class Server;
}

namespace corn::backend {

struct HttpReply {
  int status = 200;
  std::string body;
};

// Protocol handlers, usable without a socket. A null backend means "model
// not loaded": classify answers 503. Malformed requests answer 400.
HttpReply HandleClassify(const NliBackend* backend, std::string_view body);
HttpReply HandleHealth(const NliBackend* backend, std::string_view model_name);

// Serves any NliBackend over the classification protocol.
class NliServer {
 public:
  NliServer(std::shared_ptr<const NliBackend> backend, std::string model_name);
  ~NliServer();

  NliServer(const NliServer&) = delete;
  NliServer& operator=(const NliServer&) = delete;

  // Binds to host:port; port 0 picks a free port. Returns the bound port.
  // Throws Error(kIoError) on failure.
  int Bind(const std::string& host, int port);

  // Serves on a background thread until Stop().
  void Start();
  // Serves on the calling thread until Stop() from elsewhere.
  void Run();
  void Stop();

  // Swap the model in or out (nullptr -> 503) while serving.
  void SetBackend(std::shared_ptr<const NliBackend> backend);

  int port() const { return port_; }

 private:
  std::shared_ptr<const NliBackend> backend() const;

  mutable std::mutex mu_;
  std::shared_ptr<const NliBackend> backend_;
  std::string model_name_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = -1;
};

}  // namespace corn::backend

#endif  // CORN_BACKEND_SERVER_H_
