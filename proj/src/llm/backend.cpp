#include "rubiscot/llm/backend.hpp"

#include "rubiscot/error.hpp"
#include "rubiscot/util.hpp"

namespace rubiscot {

const char* const kBasePrompt =
    "Please provide responses focusing on coherent and straightforward information where "
    "creativity is less valued.";

void validate_request(const PromptRequest& request, const GenerationConfig& config) {
  if (request.user_text.empty()) {
    throw Error(ErrorCode::PreconditionViolation, "request user_text is empty");
  }
  std::size_t total = request.system_text.size() + request.user_text.size();
  for (const Attachment& a : request.attachments) total += a.name.size() + a.text.size();
  if (total > config.context_budget_chars) {
    throw Error(ErrorCode::ContextOverflow,
                "request of " + std::to_string(total) + " chars exceeds budget of " +
                    std::to_string(config.context_budget_chars));
  }
}

std::string prompt_fingerprint(StageId stage_id, const std::string& user_text) {
  std::string key = std::string(to_string(stage_id)) + "\x1f" + collapse_whitespace(user_text);
  return to_hex(fnv1a(key));
}

std::string prompt_fingerprint(const PromptRequest& request) {
  return prompt_fingerprint(request.stage_id, request.user_text);
}

void to_json(nlohmann::json& j, const Attachment& a) {
  j = nlohmann::json{{"name", a.name}, {"text", a.text}};
}

void from_json(const nlohmann::json& j, Attachment& a) {
  a.name = j.at("name").get<std::string>();
  a.text = j.at("text").get<std::string>();
}

void to_json(nlohmann::json& j, const PromptRequest& r) {
  j = nlohmann::json{{"stage_id", to_string(r.stage_id)},
                     {"system_text", r.system_text},
                     {"user_text", r.user_text},
                     {"attachments", r.attachments}};
}

void from_json(const nlohmann::json& j, PromptRequest& r) {
  r.stage_id = stage_from_string(j.at("stage_id").get<std::string>());
  r.system_text = j.at("system_text").get<std::string>();
  r.user_text = j.at("user_text").get<std::string>();
  r.attachments = j.at("attachments").get<std::vector<Attachment>>();
}

void to_json(nlohmann::json& j, const Completion& c) {
  j = nlohmann::json{{"text", c.text}, {"backend_id", c.backend_id}};
  if (c.usage) {
    j["usage"] = {{"prompt_tokens", c.usage->prompt_tokens},
                  {"completion_tokens", c.usage->completion_tokens}};
  }
}

void from_json(const nlohmann::json& j, Completion& c) {
  c.text = j.at("text").get<std::string>();
  c.backend_id = j.at("backend_id").get<std::string>();
  if (j.contains("usage")) {
    TokenUsage usage;
    usage.prompt_tokens = j.at("usage").at("prompt_tokens").get<std::int64_t>();
    usage.completion_tokens = j.at("usage").at("completion_tokens").get<std::int64_t>();
    c.usage = usage;
  }
}

void to_json(nlohmann::json& j, const GenerationConfig& c) {
  j = nlohmann::json{{"temperature", c.temperature},
                     {"max_output_tokens", c.max_output_tokens},
                     {"base_prompt", c.base_prompt},
                     {"model_id", c.model_id},
                     {"retry_limit", c.retry_limit},
                     {"context_budget_chars", c.context_budget_chars}};
}

void from_json(const nlohmann::json& j, GenerationConfig& c) {
  c.temperature = j.at("temperature").get<double>();
  c.max_output_tokens = j.at("max_output_tokens").get<int>();
  c.base_prompt = j.at("base_prompt").get<std::string>();
  c.model_id = j.at("model_id").get<std::string>();
  c.retry_limit = j.at("retry_limit").get<int>();
  c.context_budget_chars = j.at("context_budget_chars").get<std::size_t>();
}

}  // namespace rubiscot
