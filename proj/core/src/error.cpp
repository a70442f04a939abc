#include "sdspect/error.hpp"

namespace sdspect {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::config: return "config";
    case ErrorKind::io: return "io";
    case ErrorKind::format: return "format";
    case ErrorKind::version: return "version";
    case ErrorKind::shape: return "shape";
    case ErrorKind::pairing: return "pairing";
    case ErrorKind::data: return "data";
    case ErrorKind::nonfinite: return "nonfinite";
    case ErrorKind::range: return "range";
  }
  return "unknown";
}

}  // namespace sdspect
