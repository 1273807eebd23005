#pragma once

#include <stdexcept>
#include <string>

namespace loglim {

enum class ErrorCode {
  InvalidArgument,
  IndexOutOfRange,
  DuplicateEdge,
  CapExceeded,
  NotConverged,
  Parse,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception; the C API maps
// the code onto a loglim_status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

// Raised when a configured size limit would be exceeded. The message names
// the cap and the offending size.
[[noreturn]] void fail_cap(const std::string& cap_name, double requested,
                           double limit);

}  // namespace loglim
