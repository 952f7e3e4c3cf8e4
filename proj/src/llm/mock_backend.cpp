#include "rubiscot/llm/mock_backend.hpp"

#include "json.hpp"
#include "rubiscot/error.hpp"

namespace rubiscot {

void MockBackend::register_stage(StageId stage, std::string response) {
  std::lock_guard<std::mutex> lock(mutex_);
  for (auto& [key, matcher] : by_stage_) {
    if (key == stage) {
      matcher.responses.push_back(std::move(response));
      return;
    }
  }
  by_stage_.push_back({stage, Matcher{{std::move(response)}, 0}});
}

void MockBackend::register_fingerprint(std::string fingerprint, std::string response) {
  std::lock_guard<std::mutex> lock(mutex_);
  for (auto& [key, matcher] : by_fingerprint_) {
    if (key == fingerprint) {
      matcher.responses.push_back(std::move(response));
      return;
    }
  }
  by_fingerprint_.push_back({std::move(fingerprint), Matcher{{std::move(response)}, 0}});
}

void MockBackend::load_script(const std::string& json_text) {
  nlohmann::json script = nlohmann::json::parse(json_text);
  if (!script.is_array()) {
    throw Error(ErrorCode::ConfigError, "mock script must be a JSON array");
  }
  for (const nlohmann::json& entry : script) {
    std::string response = entry.at("response").get<std::string>();
    if (entry.contains("fingerprint")) {
      register_fingerprint(entry.at("fingerprint").get<std::string>(), std::move(response));
    } else if (entry.contains("stage_id")) {
      register_stage(stage_from_string(entry.at("stage_id").get<std::string>()),
                     std::move(response));
    } else {
      throw Error(ErrorCode::ConfigError, "mock script entry needs stage_id or fingerprint");
    }
  }
}

std::string MockBackend::take(Matcher& matcher) {
  std::size_t i = std::min(matcher.next, matcher.responses.size() - 1);
  ++matcher.next;
  return matcher.responses[i];
}

Completion MockBackend::complete(const PromptRequest& request, const GenerationConfig& config) {
  validate_request(request, config);
  std::string fingerprint = prompt_fingerprint(request);

  std::lock_guard<std::mutex> lock(mutex_);
  std::string response;
  bool matched = false;
  for (auto& [key, matcher] : by_fingerprint_) {
    if (key == fingerprint) {
      response = take(matcher);
      matched = true;
      break;
    }
  }
  if (!matched) {
    for (auto& [key, matcher] : by_stage_) {
      if (key == request.stage_id) {
        response = take(matcher);
        matched = true;
        break;
      }
    }
  }
  if (!matched) {
    throw Error(ErrorCode::UnscriptedPrompt,
                std::string("no scripted response for stage ") + to_string(request.stage_id) +
                    " (fingerprint " + fingerprint + ")");
  }

  calls_.push_back({request, response});
  return Completion{response, id(), std::nullopt};
}

std::vector<MockBackend::CallRecord> MockBackend::calls() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return calls_;
}

std::size_t MockBackend::call_count() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return calls_.size();
}

}  // namespace rubiscot
