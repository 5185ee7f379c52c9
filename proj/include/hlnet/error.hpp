#pragma once

#include <stdexcept>
#include <string>

namespace hlnet {

enum class ErrorCode {
  invalid_argument,
  not_index_two,
  io,
  budget,
};

/// Library exception. The C API maps `code()` onto its status values.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail_argument(const std::string &what) {
  throw Error(ErrorCode::invalid_argument, what);
}

} // namespace hlnet
