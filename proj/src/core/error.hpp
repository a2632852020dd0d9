#pragma once

#include <stdexcept>
#include <string>

namespace coincalc {

enum class ErrorKind {
  InvalidArgument,  // caller passed something malformed
  Parse,            // database or request text did not parse
  Invariant,        // data violates a structural invariant
  Overflow,         // checked 64-bit arithmetic overflowed
  TooLarge,         // enumeration above the configured cap
  Unsupported,      // outside the families/ranges the calculator handles
  Unknown,          // a database gap blocks the computation
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace coincalc
