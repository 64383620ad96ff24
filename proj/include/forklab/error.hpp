#pragma once

#include <stdexcept>
#include <string>

namespace forklab {

// Raised for inputs outside an operation's domain. The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Structural problems in a fork description (dangling ids, several roots).
class StructureError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The enumeration oracle refuses strings longer than its configured cap.
class CapError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace forklab
