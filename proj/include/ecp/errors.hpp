#pragma once

#include <stdexcept>
#include <string>

namespace ecp {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (cycle notation, element words, group spec files).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A configured limit was exceeded (enumeration cap, lattice budget).
class BudgetError : public Error {
public:
  using Error::Error;
};

/// Invalid arguments: bad construction parameters, elements from a foreign
/// group, preconditions not met.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

} // namespace ecp
