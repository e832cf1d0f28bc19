#pragma once

#include <stdexcept>
#include <string>

namespace helly {

/// Raised for precondition violations and malformed inputs.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive routine is asked to exceed its size gate.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace helly
