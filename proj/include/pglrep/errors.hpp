#pragma once

#include <stdexcept>
#include <string>

namespace pglrep {

// Root of every error raised by the library. Each subclass corresponds to one
// failure mode; callers that only care about "something went wrong" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BadDimension : public Error {
 public:
  using Error::Error;
};

class BadInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotAVersor : public Error {
 public:
  using Error::Error;
};

class NotVectorPreserving : public Error {
 public:
  using Error::Error;
};

class NotInKernel : public Error {
 public:
  using Error::Error;
};

class NotOrthogonal : public Error {
 public:
  using Error::Error;
};

class RelationViolated : public Error {
 public:
  using Error::Error;
};

class Delta1NotZero : public Error {
 public:
  using Error::Error;
};

class InvalidClass : public Error {
 public:
  using Error::Error;
};

class ActionNotDescending : public Error {
 public:
  using Error::Error;
};

class TargetInvalidForClass : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

}  // namespace pglrep
