#pragma once

#include <stdexcept>
#include <string>

namespace attrib {

// Exit-code classes for the CLI: validation errors map to exit 1,
// runtime errors (I/O, remote failures) to exit 2.
enum class ErrorKind { validation, runtime };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_validation(const std::string& message) {
  throw Error(ErrorKind::validation, message);
}

[[noreturn]] inline void fail_runtime(const std::string& message) {
  throw Error(ErrorKind::runtime, message);
}

}  // namespace attrib
