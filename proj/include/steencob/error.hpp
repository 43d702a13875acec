#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace steencob {

// Root of the library's error hierarchy. The CLI maps each subclass to an
// exit code: ParseError -> 2, InvalidArgument/PreconditionError/
// UnsupportedDimension -> 3, InvariantViolation -> 4.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

// A documented precondition of an operation does not hold
// (e.g. asking for an Adem relation on an admissible pair).
class PreconditionError : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

class UnsupportedDimension : public Error {
  public:
    using Error::Error;
};

// Something that the mathematics guarantees did not happen: a degenerate
// Poincare pairing on a catalog model, a singular generator matrix, Adem
// reduction exceeding its fuel bound.
class InvariantViolation : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    // offset is 1-based: it names the column of the offending character,
    // or one past the last character when input ended early.
    ParseError(std::string message, std::size_t offset, std::vector<std::string> expected = {});

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

  private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

}  // namespace steencob
