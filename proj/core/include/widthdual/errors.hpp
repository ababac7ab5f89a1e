#pragma once

#include <stdexcept>
#include <string>

namespace widthdual {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition or invariant violation in caller-supplied data.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exponential routine was asked to work beyond its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace widthdual
