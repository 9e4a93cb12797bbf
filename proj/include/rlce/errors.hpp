#pragma once

#include <stdexcept>
#include <string>

namespace rlce {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedDegree : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

struct InvalidParameters : Error {
  using Error::Error;
};

struct UnknownLevel : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

struct FormatError : Error {
  using Error::Error;
};

struct KeyMismatch : Error {
  using Error::Error;
};

}  // namespace rlce
