#pragma once

#include <stdexcept>
#include <string>

namespace lietools {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A type label or rank that violates the family constraints.
class InvalidTypeError : public Error {
public:
  using Error::Error;
};

// Input outside a documented size cap (oracle matrices, enumeration limits).
class CapacityError : public Error {
public:
  using Error::Error;
};

// A 64-bit count would overflow.
class OverflowError : public Error {
public:
  using Error::Error;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

// An iterated derivation did not vanish within the iteration cap.
class NotNilpotentError : public Error {
public:
  using Error::Error;
};

// A caller-side precondition that the library checks (kernel membership etc.).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// (G, R) pair or type outside the analysed case list.
class UnsupportedCaseError : public Error {
public:
  using Error::Error;
};

// Two independent routes disagreed, or a verdict that must hold failed.
// Always an implementation bug.
class InconsistencyError : public Error {
public:
  using Error::Error;
};

// Malformed polynomial or type text.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace lietools
