#pragma once

#include <stdexcept>
#include <string>

namespace hyp3f2 {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument sits on (or within the guard radius of) a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Result is outside the double range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Argument is outside the region where the requested quantity is defined.
class DomainViolationError : public Error {
 public:
  using Error::Error;
};

class InvalidCaseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyp3f2
