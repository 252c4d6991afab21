// Copyright 2026 The natprog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NATPROG_SERVICE_HPP_
#define NATPROG_SERVICE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "natprog/diagnostic.hpp"
#include "natprog/pipeline.hpp"

namespace httplib {
class Server;
}

namespace natprog {

inline constexpr std::size_t kMaxRequestBody = 1 << 20;
inline constexpr int kDefaultPort = 8080;
// Requested step limits above this are clamped.
inline constexpr std::uint64_t kMaxServiceStepLimit = kDefaultStepLimit;

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// Stateless JSON API; every response is a pure function of the request.
//   GET  /api/templates  -> catalog JSON
//   POST /api/generate   {templateInstance, context?}
//   POST /api/compile    {source}
//   POST /api/run        {source, inputs, stepLimit?}
// 400 for malformed requests, 413 over the body cap, 422 when the program
// or template data has errors.
HttpResponse handle_request(std::string_view method, std::string_view path,
                            std::string_view body);

// Registers the API routes (and optionally static UI files) on `server`.
void mount_routes(httplib::Server& server,
                  const std::optional<std::string>& static_dir = std::nullopt);

// Blocks serving until the process exits. False if the port could not be
// bound.
bool serve(const std::string& host, int port,
           const std::optional<std::string>& static_dir = std::nullopt);

void to_json(nlohmann::json& j, const Diagnostic& d);
nlohmann::json to_json(const CompileResponse& r);
nlohmann::json to_json(const RunResponse& r);
nlohmann::json to_json(const GenerateResponse& r);

}  // namespace natprog

#endif  // NATPROG_SERVICE_HPP_
