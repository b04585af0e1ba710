#pragma once

#include <stdexcept>
#include <string>

namespace fracmeas {

// Error taxonomy shared by the core and the C API layer.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Caller passed something outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured memory/size budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A certified comparison hit the precision cap before separating its
// operands.  Must be treated as failure by callers, never as a tie.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(const std::string& what, int bits)
      : Error(what), bits_(bits) {}
  int bits() const noexcept { return bits_; }

 private:
  int bits_;
};

// A quantity the theory pins down exactly came out different; always a bug,
// either here or in the claimed formula.
class CheckFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace fracmeas
