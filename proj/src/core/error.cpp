#include "error.hpp"

namespace coincalc {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::Parse: return "parse_error";
    case ErrorKind::Invariant: return "invariant_violation";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::TooLarge: return "too_large";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Unknown: return "unknown";
  }
  return "error";
}

}  // namespace coincalc
