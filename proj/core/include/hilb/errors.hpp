#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilb {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text; `pos` is a byte offset into the source string.
struct SyntaxError : Error {
  SyntaxError(std::size_t pos, const std::string& msg)
      : Error("syntax error at position " + std::to_string(pos) + ": " + msg),
        pos(pos), reason(msg) {}
  std::size_t pos;
  std::string reason;
};

/// Structurally valid input that violates a presentation invariant.
struct ValidationError : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotASubspace : Error {
  using Error::Error;
};

struct TruncationTooSmall : Error {
  using Error::Error;
};

/// Configured cap exceeded (basis size, retry budget, schedule length).
struct ResourceLimit : Error {
  using Error::Error;
};

struct OrderOutOfRange : Error {
  using Error::Error;
};

struct ZeroElement : Error {
  using Error::Error;
};

struct NoStabilization : Error {
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.  Always a bug
/// or an untrusted truncation window; never ignored.
struct CrossCheckFailure : Error {
  using Error::Error;
};

struct NoSuperficialFound : Error {
  using Error::Error;
};

struct WrongDimension : Error {
  using Error::Error;
};

struct NotCohenMacaulay : Error {
  using Error::Error;
};

struct InconsistentBPolynomial : Error {
  using Error::Error;
};

struct ConversionOverflow : Error {
  using Error::Error;
};

struct IncompleteReport : Error {
  using Error::Error;
};

}  // namespace hilb
