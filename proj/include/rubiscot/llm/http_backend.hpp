#pragma once

#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "rubiscot/llm/backend.hpp"

namespace rubiscot {

struct HttpResponse {
  int status = 0;
  std::string body;
};

// Performs one POST of `body` to `url` with the given Authorization header
// value. Throws on connection failure.
using HttpTransport =
    std::function<HttpResponse(const std::string& url, const std::string& auth_header,
                               const std::string& body)>;

// cpp-httplib based transport (http:// and https://).
HttpTransport default_http_transport();

// Chat-completion style JSON adapter. The API key travels only in the
// Authorization header; the transport log keeps bodies and redacts the key.
// One complete() call makes at most config.retry_limit + 1 transport
// attempts and then throws BackendUnavailable.
class HttpBackend : public LlmBackend {
public:
  HttpBackend(std::string endpoint_url, std::string api_key,
              HttpTransport transport = default_http_transport());

  Completion complete(const PromptRequest& request, const GenerationConfig& config) override;
  std::string id() const override { return "http"; }

  struct LogEntry {
    std::string url;
    std::string request_body;
    int status = 0;
    std::string response_body;
    std::string error;  // transport exception text, if any
  };
  std::vector<LogEntry> transport_log() const;

  static nlohmann::json build_request_body(const PromptRequest& request,
                                           const GenerationConfig& config);

private:
  std::string endpoint_url_;
  std::string api_key_;
  HttpTransport transport_;
  mutable std::mutex mutex_;
  std::vector<LogEntry> log_;
};

}  // namespace rubiscot
