// Copyright 2026 The MapForge Authors
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

#include "mapforge/inference.h"

#include <chrono>
#include <cmath>
#include <cstdlib>

#include "httplib.h"

namespace mapforge {
namespace {

struct SplitUrl {
  std::string scheme_host_port;
  std::string path_prefix;
};

SplitUrl SplitBaseUrl(const std::string& url) {
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw InvalidArgument("endpoint URL needs a scheme: " + url);
  }
  const std::size_t path_start = url.find('/', scheme_end + 3);
  SplitUrl out;
  out.scheme_host_port = url.substr(0, path_start);
  if (path_start != std::string::npos) out.path_prefix = url.substr(path_start);
  while (!out.path_prefix.empty() && out.path_prefix.back() == '/') {
    out.path_prefix.pop_back();
  }
  return out;
}

std::optional<std::string> ResolveApiKey(const ModelEndpoint& endpoint) {
  if (endpoint.api_key) return endpoint.api_key;
  if (const char* env = std::getenv(std::string(kApiKeyEnvVar).c_str());
      env != nullptr && *env != '\0') {
    return std::string(env);
  }
  return std::nullopt;
}

}  // namespace

void ModelEndpoint::Validate() const {
  if (base_url.empty()) throw InvalidArgument("endpoint base_url is empty");
  if (!base_url.starts_with("http://") && !base_url.starts_with("https://")) {
    throw InvalidArgument("endpoint base_url must be http:// or https://");
  }
  if (model_name.empty()) throw InvalidArgument("endpoint model is empty");
  if (!(timeout_seconds > 0)) {
    throw InvalidArgument("endpoint timeout must be positive");
  }
  if (!params.is_object()) {
    throw InvalidArgument("endpoint params must be an object");
  }
}

std::string_view InferenceErrorKindName(InferenceError::Kind kind) {
  switch (kind) {
    case InferenceError::Kind::kNetwork: return "network";
    case InferenceError::Kind::kHttpStatus: return "http-status";
    case InferenceError::Kind::kTimeout: return "timeout";
    case InferenceError::Kind::kBadResponse: return "bad-response";
  }
  return "?";
}

InferenceResult RunInference(const ModelEndpoint& endpoint,
                             std::string_view prompt) {
  endpoint.Validate();
  const SplitUrl url = SplitBaseUrl(endpoint.base_url);

  httplib::Client client(url.scheme_host_port);
  if (!client.is_valid()) {
    throw InferenceError(InferenceError::Kind::kNetwork,
                         "cannot create a client for " + endpoint.base_url);
  }
  const auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::duration<double>(endpoint.timeout_seconds));
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  if (auto key = ResolveApiKey(endpoint)) client.set_bearer_token_auth(*key);

  nlohmann::json body = endpoint.params;
  body["model"] = endpoint.model_name;
  body["messages"] = nlohmann::json::array(
      {{{"role", "user"}, {"content", std::string(prompt)}}});
  if (!body.contains("stream")) body["stream"] = false;

  const auto start = std::chrono::steady_clock::now();
  auto res = client.Post(url.path_prefix + "/chat/completions", body.dump(),
                         "application/json");
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  if (!res) {
    const httplib::Error err = res.error();
    // A read that hit the deadline surfaces as a plain read error.
    const bool timed_out =
        err == httplib::Error::ConnectionTimeout ||
        (err == httplib::Error::Read &&
         elapsed >= 0.95 * endpoint.timeout_seconds);
    throw InferenceError(
        timed_out ? InferenceError::Kind::kTimeout
                  : InferenceError::Kind::kNetwork,
        (timed_out ? "request timed out after " + std::to_string(elapsed) +
                         " s: "
                   : std::string("request failed: ")) +
            httplib::to_string(err));
  }
  if (res->status < 200 || res->status >= 300) {
    std::string excerpt = res->body.substr(0, 200);
    throw InferenceError(InferenceError::Kind::kHttpStatus,
                         "HTTP " + std::to_string(res->status) + ": " + excerpt);
  }

  nlohmann::json reply;
  try {
    reply = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::parse_error& e) {
    throw InferenceError(InferenceError::Kind::kBadResponse,
                         std::string("response is not JSON: ") + e.what());
  }
  const nlohmann::json* content = nullptr;
  if (reply.contains("choices") && reply["choices"].is_array() &&
      !reply["choices"].empty()) {
    const auto& choice = reply["choices"][0];
    if (choice.contains("message") && choice["message"].contains("content")) {
      content = &choice["message"]["content"];
    }
  }
  if (content == nullptr || !content->is_string()) {
    throw InferenceError(InferenceError::Kind::kBadResponse,
                         "response has no choices[0].message.content string");
  }
  return InferenceResult{content->get<std::string>(), elapsed};
}

}  // namespace mapforge
