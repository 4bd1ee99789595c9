#pragma once

#include <stdexcept>
#include <string>

namespace germ {

/// Base of every domain error raised by the library. The CLI maps these to
/// exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (set literals, distance lists, rationals).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A bounded search would exceed its configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace germ
