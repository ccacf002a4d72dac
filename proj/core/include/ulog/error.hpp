#pragma once

#include <stdexcept>
#include <string>

namespace ulog {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different carriers.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// A size limit (carrier, powerset materialization, enumeration) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownElement : public Error {
 public:
  using Error::Error;
};

/// A value does not satisfy the axioms its type requires.
class AxiomViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ulog
