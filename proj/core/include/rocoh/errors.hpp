#pragma once

#include <stdexcept>
#include <string>

namespace rocoh {

/// Input that violates a documented precondition (bad prime, malformed
/// complex, degree mismatch, ...). The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent computations disagree. Always a bug; the CLI maps this
/// to exit code 1.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rocoh
