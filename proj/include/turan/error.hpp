#pragma once

#include <stdexcept>
#include <string>

namespace turan {

enum class ErrorKind {
  InvalidSizes,            // nonpositive or missing part sizes
  PartViolation,           // intra-part edge / same-part query
  DegenerateParts,         // operation would empty a part
  Parse,                   // malformed graph text or resume file
  InvalidParameter,        // out-of-domain formula or search argument
  InfeasibleConstruction,  // Z cannot be placed (class too small)
  CapExceeded,             // host larger than the configured search cap
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace turan
