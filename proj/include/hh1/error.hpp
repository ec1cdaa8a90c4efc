#pragma once

#include <stdexcept>
#include <string>

namespace hh1 {

enum class ErrorKind {
  InvalidInput,  // malformed data handed to the library
  CapExceeded,   // input is well formed but above a size limit
  Precondition,  // operation called outside its domain
  Io,            // file system failure
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

}  // namespace hh1
