#ifndef RSPBC_ERRORS_HPP
#define RSPBC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rspbc {

// Base error carrying a stable machine-parsable reason slug next to the
// human-readable message. CLI layers map these onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string reason, const std::string& message)
      : std::runtime_error(message), reason_(std::move(reason)) {}

  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

// Bad input: malformed files, violated preconditions, unusable parameters.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Numerical failure: singular systems, underflow-disconnected walks,
// non-finite scores.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rspbc

#endif
