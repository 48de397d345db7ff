#pragma once

#include <stdexcept>
#include <string>

namespace mp4 {

// The category decides the CLI exit code.
enum class ErrorCategory { validation, unsupported, schema };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string code, const std::string& message)
      : std::runtime_error(message), category_(category), code_(std::move(code)) {}

  ErrorCategory category() const { return category_; }
  // Short machine name such as "ReciprocityViolation".
  const std::string& code() const { return code_; }

 private:
  ErrorCategory category_;
  std::string code_;
};

inline Error validation_error(const std::string& code, const std::string& message) {
  return Error(ErrorCategory::validation, code, message);
}

inline Error unsupported_error(const std::string& code, const std::string& message) {
  return Error(ErrorCategory::unsupported, code, message);
}

inline Error schema_error(const std::string& message) {
  return Error(ErrorCategory::schema, "SchemaError", message);
}

}  // namespace mp4
