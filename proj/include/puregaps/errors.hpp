#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace puregaps {

enum class ErrorKind {
  TooSmall,
  NotPrimePower,
  NotDivisor,
  NotCoprime,
  BadArity,
  Overflow,
  NotInteger,
  PreconditionFailed,
  UnsupportedSupport,
  BoxTooLarge,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace puregaps
