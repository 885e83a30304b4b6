#pragma once

#include <stdexcept>
#include <string>

namespace racklab {

// Base of every error the library raises. The CLI maps these to exit code 2
// except NonMemberError, which is a verdict on a certificate.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NonMemberError : public Error {
 public:
  using Error::Error;
};

}  // namespace racklab
