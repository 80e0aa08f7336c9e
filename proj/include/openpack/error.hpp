#pragma once

#include <stdexcept>
#include <string>

namespace openpack {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  cap_exceeded,
  undefined,
  hypothesis,
  io_error,
  internal,
};

/// Base exception for every failure raised by the library. The code survives
/// the trip across the C API as a status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace openpack
