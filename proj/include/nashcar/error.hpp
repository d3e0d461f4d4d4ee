#pragma once

#include <stdexcept>
#include <string>

namespace nashcar {

enum class ErrorKind {
  validation,   // input rejected (malformed, non-isolated, bad weights, ...)
  truncation,   // answer could depend on terms beyond the truncation bound
  undecided,    // a decision was demanded but only "unknown" is available
  argument,     // precondition of an operation violated by the caller
  internal,     // an internal consistency check failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace nashcar
