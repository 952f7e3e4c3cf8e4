#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rubiscot/core/types.hpp"

namespace rubiscot {

// System-level instruction biasing the model toward precise, low-creativity
// responses; sent with every request.
extern const char* const kBasePrompt;

struct GenerationConfig {
  double temperature = 0.0;
  int max_output_tokens = 2048;
  std::string base_prompt = kBasePrompt;
  std::string model_id = "default";
  int retry_limit = 2;
  // Upper bound on the total rendered request size, in characters.
  std::size_t context_budget_chars = 200000;

  bool operator==(const GenerationConfig&) const = default;
};

struct Attachment {
  std::string name;
  std::string text;
  bool operator==(const Attachment&) const = default;
};

struct PromptRequest {
  StageId stage_id = StageId::Preliminary;
  std::string system_text;
  std::string user_text;
  std::vector<Attachment> attachments;

  bool operator==(const PromptRequest&) const = default;
};

struct TokenUsage {
  std::int64_t prompt_tokens = 0;
  std::int64_t completion_tokens = 0;
  bool operator==(const TokenUsage&) const = default;
};

struct Completion {
  std::string text;  // verbatim backend output, never post-edited here
  std::string backend_id;
  std::optional<TokenUsage> usage;

  bool operator==(const Completion&) const = default;
};

// Throws PreconditionViolation for an empty user_text and ContextOverflow
// when the rendered request exceeds config.context_budget_chars. Called by
// every backend before doing any work; oversized requests are never
// silently truncated.
void validate_request(const PromptRequest& request, const GenerationConfig& config);

// Stable request identity: hash of (stage_id, user_text with whitespace
// collapsed). Lets mock fixtures survive cosmetic template edits.
std::string prompt_fingerprint(const PromptRequest& request);
std::string prompt_fingerprint(StageId stage_id, const std::string& user_text);

class LlmBackend {
public:
  virtual ~LlmBackend() = default;
  // One logical completion call. Transport-level retries (HTTP) happen
  // inside; config.retry_limit bounds them.
  virtual Completion complete(const PromptRequest& request, const GenerationConfig& config) = 0;
  virtual std::string id() const = 0;
};

void to_json(nlohmann::json& j, const Attachment& a);
void from_json(const nlohmann::json& j, Attachment& a);
void to_json(nlohmann::json& j, const PromptRequest& r);
void from_json(const nlohmann::json& j, PromptRequest& r);
void to_json(nlohmann::json& j, const Completion& c);
void from_json(const nlohmann::json& j, Completion& c);
void to_json(nlohmann::json& j, const GenerationConfig& c);
void from_json(const nlohmann::json& j, GenerationConfig& c);

}  // namespace rubiscot
