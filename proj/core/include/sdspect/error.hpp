#pragma once

#include <stdexcept>
#include <string>

namespace sdspect {

// Error taxonomy shared across the library. The CLI maps kinds onto exit
// codes (config -> 2, io -> 3, everything data-shaped -> 4).
enum class ErrorKind {
  config,     // invalid configuration value or argument
  io,         // filesystem / stream failure
  format,     // malformed or corrupted file contents
  version,    // file format version mismatch
  shape,      // tensor or architecture shape mismatch
  pairing,    // paired reports do not share a window set
  data,       // dataset-level precondition violation
  nonfinite,  // NaN or infinity where finite values are required
  range,      // value outside its documented range
};

const char* error_kind_name(ErrorKind kind);

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

inline void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

}  // namespace sdspect
