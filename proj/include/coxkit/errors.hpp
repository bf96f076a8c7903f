#pragma once

#include <stdexcept>
#include <string>

namespace coxkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: system documents, words, expressions, graphs.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured cap (ball size, braid-class size) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class InfiniteParabolic : public Error {
 public:
  using Error::Error;
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

class NotRightAngled : public Error {
 public:
  using Error::Error;
};

class MixedSystems : public Error {
 public:
  MixedSystems() : Error("operands belong to different Coxeter systems") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace coxkit
