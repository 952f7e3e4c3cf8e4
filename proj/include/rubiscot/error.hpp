#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace rubiscot {

enum class ErrorCode {
  EmptyDocument,
  BackendUnavailable,
  ContextOverflow,
  UnscriptedPrompt,
  MissingBinding,
  InvalidChunkParams,
  ZeroVector,
  DimensionMismatch,
  EmptyStore,
  UnparseableResponse,
  MissingCriterion,
  ValidationFailed,
  OutOfRange,
  IncompleteRun,
  PreconditionViolation,
  ConfigError,
};

const char* to_string(ErrorCode code);

// Single exception type for all contract violations and runtime failures.
// `detail` carries structured context when a caller needs more than the
// message (e.g. which evaluation pass failed, or the preserved first-pass
// result).
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Error(ErrorCode code, const std::string& message, nlohmann::json detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const nlohmann::json& detail() const { return detail_; }

private:
  ErrorCode code_;
  nlohmann::json detail_;
};

}  // namespace rubiscot
