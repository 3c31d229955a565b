#pragma once

#include <stdexcept>
#include <string>

namespace gseq {

// User-facing failure: bad input, unsatisfied precondition, refused check.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Violation of an invariant the library itself guarantees (delta^2 != 0,
// failed exactness audit, chain-map audit). Maps to exit code 3 in the CLI.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gseq
