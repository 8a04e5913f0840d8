#include "iqpred/error.hpp"

namespace iqpred {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "degenerate input";
    case ErrorCode::TooManySlots: return "too many slots";
    case ErrorCode::UnsupportedLength: return "unsupported length";
    case ErrorCode::MalformedStream: return "malformed stream";
    case ErrorCode::DomainError: return "domain error";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Io: return "i/o error";
  }
  return "unknown";
}

}  // namespace iqpred
