#pragma once

#include <stdexcept>
#include <string>

namespace qcol {

// Base for every error raised by the library. The CLI maps any qcol::Error to
// a non-zero exit code and prints what().
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed (two independent routes disagreed,
// a proven invariant did not hold). Always indicates a bug or bad input data.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcol
