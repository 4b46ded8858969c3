#pragma once

#include <stdexcept>
#include <string>

namespace zeroleak {

/// Raised when an input violates an operation's domain (empty graph, bad
/// dimensions, inadmissible budget, ...). `code()` is a stable snake_case tag
/// surfaced verbatim by the CLI.
class DomainError : public std::invalid_argument {
 public:
  DomainError(std::string code, const std::string& message)
      : std::invalid_argument(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Raised when an enumeration or search exceeds its configured work budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string budget, const std::string& message)
      : std::runtime_error(message), budget_(std::move(budget)) {}

  /// Name of the exhausted budget, e.g. "mis_work".
  const std::string& budget() const noexcept { return budget_; }

 private:
  std::string budget_;
};

}  // namespace zeroleak
