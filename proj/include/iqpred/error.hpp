#pragma once

#include <stdexcept>
#include <string>

namespace iqpred {

enum class ErrorCode {
  DegenerateInput,
  TooManySlots,
  UnsupportedLength,
  MalformedStream,
  DomainError,
  InvalidArgument,
  Io,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace iqpred
