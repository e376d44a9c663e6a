#pragma once

#include <stdexcept>
#include <string>

namespace bessel {

enum class ErrorKind {
  dimension_mismatch,
  degenerate_reference,
  parameter,
  precondition,
  construction,
  malformed_input,
};

/// Library-wide exception. The kind lets front-ends map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bessel
