#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "rubiscot/llm/backend.hpp"

namespace rubiscot {

// Deterministic scripted backend for offline runs and tests.
//
// Matching order: an entry registered for the request's fingerprint wins
// over one registered for its stage id; an unmatched request raises
// UnscriptedPrompt (a fixture gap, never retried). Registering the same
// matcher repeatedly builds a response sequence: the n-th matching request
// receives the n-th response, and the last response repeats once the
// sequence is exhausted. Completions are therefore a pure function of the
// request sequence.
class MockBackend : public LlmBackend {
public:
  void register_stage(StageId stage, std::string response);
  void register_fingerprint(std::string fingerprint, std::string response);

  // Script file: JSON array of {"stage_id": ..., "response": ...} or
  // {"fingerprint": ..., "response": ...} entries, applied in order.
  void load_script(const std::string& json_text);

  Completion complete(const PromptRequest& request, const GenerationConfig& config) override;
  std::string id() const override { return "mock"; }

  struct CallRecord {
    PromptRequest request;
    std::string response;
  };
  std::vector<CallRecord> calls() const;
  std::size_t call_count() const;

private:
  struct Matcher {
    std::vector<std::string> responses;
    std::size_t next = 0;
  };

  std::string take(Matcher& matcher);

  mutable std::mutex mutex_;
  std::vector<std::pair<std::string, Matcher>> by_fingerprint_;
  std::vector<std::pair<StageId, Matcher>> by_stage_;
  std::vector<CallRecord> calls_;
};

}  // namespace rubiscot
