#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace higgs {

enum class ErrorKind {
  ArityMismatch,
  DivisionByZero,
  NotDivisible,
  TruncationExceeded,
  NotAUnit,
  NonzeroConstant,
  CapExceeded,
  InvalidArgument,
  ResourceLimit,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// All failures raised by the library carry a kind so callers (the CLI in
/// particular) can map them to exit statuses without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace higgs
