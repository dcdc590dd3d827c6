#pragma once

#include <stdexcept>
#include <string>

namespace subdens {

/// A violated precondition on user-supplied data. The CLI maps these to
/// exit status 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based; 0 when the error is not tied
/// to a line.
class ParseError : public DomainError {
 public:
  ParseError(int line, const std::string& what)
      : DomainError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A size or work cap was exceeded. `cap()` names the cap.
class CapExceeded : public DomainError {
 public:
  CapExceeded(std::string cap, const std::string& what)
      : DomainError(cap + " exceeded: " + what), cap_(std::move(cap)) {}

  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

}  // namespace subdens
