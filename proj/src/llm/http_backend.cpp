#include "rubiscot/llm/http_backend.hpp"

#include "rubiscot/error.hpp"

#if defined(RUBISCOT_HAVE_OPENSSL)
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include "httplib.h"

namespace rubiscot {

namespace {

// Splits "https://host:port/path" into client base and path.
std::pair<std::string, std::string> split_url(const std::string& url) {
  std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::ConfigError, "endpoint URL needs a scheme: " + url);
  }
  std::size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

HttpTransport default_http_transport() {
  return [](const std::string& url, const std::string& auth_header,
            const std::string& body) -> HttpResponse {
    auto [base, path] = split_url(url);
    httplib::Client client(base);
    client.set_connection_timeout(30);
    client.set_read_timeout(120);
    httplib::Headers headers;
    if (!auth_header.empty()) headers.emplace("Authorization", auth_header);
    auto result = client.Post(path, headers, body, "application/json");
    if (!result) {
      throw std::runtime_error("connection failed: " + httplib::to_string(result.error()));
    }
    return HttpResponse{result->status, result->body};
  };
}

HttpBackend::HttpBackend(std::string endpoint_url, std::string api_key, HttpTransport transport)
    : endpoint_url_(std::move(endpoint_url)),
      api_key_(std::move(api_key)),
      transport_(std::move(transport)) {}

nlohmann::json HttpBackend::build_request_body(const PromptRequest& request,
                                               const GenerationConfig& config) {
  std::string user_content = request.user_text;
  for (const Attachment& a : request.attachments) {
    user_content += "\n\n[attachment: " + a.name + "]\n" + a.text;
  }
  return nlohmann::json{
      {"model", config.model_id},
      {"temperature", config.temperature},
      {"max_tokens", config.max_output_tokens},
      {"messages",
       {{{"role", "system"}, {"content", request.system_text}},
        {{"role", "user"}, {"content", user_content}}}},
  };
}

Completion HttpBackend::complete(const PromptRequest& request, const GenerationConfig& config) {
  validate_request(request, config);
  std::string body = build_request_body(request, config).dump();
  std::string auth = api_key_.empty() ? "" : "Bearer " + api_key_;

  std::string last_error;
  int attempts = config.retry_limit + 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    LogEntry entry;
    entry.url = endpoint_url_;
    entry.request_body = body;
    try {
      HttpResponse response = transport_(endpoint_url_, auth, body);
      entry.status = response.status;
      entry.response_body = response.body;
      {
        std::lock_guard<std::mutex> lock(mutex_);
        log_.push_back(entry);
      }
      if (response.status == 200) {
        nlohmann::json parsed = nlohmann::json::parse(response.body, nullptr, false);
        if (parsed.is_discarded() || !parsed.contains("choices") || parsed["choices"].empty()) {
          last_error = "malformed completion body";
          continue;
        }
        Completion completion;
        completion.text =
            parsed["choices"][0].at("message").at("content").get<std::string>();
        completion.backend_id = id();
        if (parsed.contains("usage")) {
          TokenUsage usage;
          usage.prompt_tokens = parsed["usage"].value("prompt_tokens", std::int64_t{0});
          usage.completion_tokens = parsed["usage"].value("completion_tokens", std::int64_t{0});
          completion.usage = usage;
        }
        return completion;
      }
      last_error = "HTTP status " + std::to_string(response.status);
    } catch (const std::exception& e) {
      entry.error = e.what();
      std::lock_guard<std::mutex> lock(mutex_);
      log_.push_back(entry);
      last_error = e.what();
    }
  }
  throw Error(ErrorCode::BackendUnavailable,
              "after " + std::to_string(attempts) + " attempts: " + last_error);
}

std::vector<HttpBackend::LogEntry> HttpBackend::transport_log() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return log_;
}

}  // namespace rubiscot
