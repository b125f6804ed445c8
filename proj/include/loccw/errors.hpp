#pragma once

#include <stdexcept>

namespace loccw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct MalformedInput : Error {
  using Error::Error;
};

struct UnsupportedDimensions : Error {
  using Error::Error;
};

struct NonOrthogonalInput : Error {
  using Error::Error;
};

struct CompletionFailure : Error {
  using Error::Error;
};

struct NotABasis : Error {
  using Error::Error;
};

struct TrivialSpace : Error {
  using Error::Error;
};

}  // namespace loccw
