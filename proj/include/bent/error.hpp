#pragma once

#include <stdexcept>
#include <string>

namespace bent {

// Base for every error raised by the library. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument values: zero order, empty factor list, length mismatch,
// non-coprime root, wrong parity.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// Unknown name in the named-group catalog.
class CatalogError : public Error {
 public:
  using Error::Error;
};

// The requested operation is not defined for this group (e.g. a spectrum on
// a nonabelian group, or a character table for an arbitrary nonabelian
// Cayley table).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// The class-sum eigenproblem did not separate the characters.
class NumericDegeneracy : public Error {
 public:
  using Error::Error;
};

// Pointwise data that is not constant on a conjugacy class.
class ClassConstancyError : public Error {
 public:
  using Error::Error;
};

// A self-check that must hold failed: computed tables disagree with the
// built-in references, or a construction did not certify itself.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace bent
