#pragma once

#include <stdexcept>
#include <string>

namespace posalg {

/// Operand shapes do not fit the operation (non-square, size mismatch).
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input violates a mathematical precondition (negative entry, not idempotent, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed external input (JSON, words, CLI arguments).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A self-check that cannot fail for valid input did fail.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace posalg
