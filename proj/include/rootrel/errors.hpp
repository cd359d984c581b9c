#pragma once

#include <stdexcept>
#include <string>

namespace rootrel {

// Malformed or out-of-contract input (zero polynomial, composite order, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A consistency check that cannot fail for valid input did fail.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Certified numerics could not reach the required accuracy below the
// precision ceiling. Retrying with a higher ceiling may succeed.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The prime divides the leading coefficient; callers pick another prime.
class BadPrime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("deadline exceeded") {}
};

}  // namespace rootrel
