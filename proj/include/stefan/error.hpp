#pragma once

#include <stdexcept>
#include <string>

namespace stefan {

enum class ErrorKind {
  InvalidInput,    // bad model, boundary data or settings
  NonConvergence,  // inner Picard iteration exhausted max_iter
  NoRoot,          // no sign change found for an outer equation
  Overflow,        // kernel exponent beyond the representable range
};

/// Every failure names the stage that raised it and the offending quantity
/// in its message.
class StefanError : public std::runtime_error {
 public:
  StefanError(ErrorKind kind, std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), kind_(kind), stage_(std::move(stage)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }

 private:
  ErrorKind kind_;
  std::string stage_;
};

}  // namespace stefan
