#pragma once

#include <stdexcept>
#include <string>

namespace ncomm {

/// A value combination violates a structural precondition (mixed variable
/// sets, duplicate letters, slot/length mismatch, non-uniform arity).
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An index or scalar argument lies outside its documented range.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// The request exceeds a hard resource budget (word width, expansion size).
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

/// A term rewrite step does not apply at the addressed position.
struct RewriteError : std::logic_error {
  using std::logic_error::logic_error;
};

/// The argument is outside the mathematical domain of the operation
/// (odd arity where even is required, composite modulus, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Malformed textual input.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace ncomm
