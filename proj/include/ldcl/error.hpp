#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ldcl {

enum class ErrorKind {
  kAlphabet,     // digit outside the alphabet of a stage
  kParse,        // malformed run-length token
  kDomain,       // argument outside an operation's mathematical domain
  kValidation,   // structurally invalid value or field out of range
  kIo,           // read/write failure on a stream or file
  kUnsupported,  // bad magic or unknown version
  kCorruption,   // checksum mismatch
  kTruncation,   // stream ended early
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kAlphabet: return "alphabet violation";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kDomain: return "domain error";
    case ErrorKind::kValidation: return "validation error";
    case ErrorKind::kIo: return "I/O error";
    case ErrorKind::kUnsupported: return "unsupported format";
    case ErrorKind::kCorruption: return "corruption";
    case ErrorKind::kTruncation: return "truncated stream";
  }
  return "unknown error";
}

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (notably the CLI) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ldcl
