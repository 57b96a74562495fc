#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gfan {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or mathematically inadmissible input.
struct InvalidInput : Error {
  using Error::Error;
};

struct NonSkewSymmetrizable : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct DimensionMismatch : InvalidInput {
  using InvalidInput::InvalidInput;
};

// A search ran out of its explicit budget without reaching a verdict.
// Deliberately an exception: an indeterminate outcome must never be
// mistaken for an answer.
struct BudgetExceeded : Error {
  BudgetExceeded(const std::string& what, std::size_t visited_count)
      : Error(what), visited(visited_count) {}
  std::size_t visited;
};

// Invariant violations that indicate a bug upstream, not bad user input.
struct InternalError : Error {
  using Error::Error;
};

struct RaysDependent : InternalError {
  using InternalError::InternalError;
};

// A cone handed to fan transport has rays on both strict sides of the
// bending hyperplane; valid g-cones never do.
struct ConeStraddlesWall : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct FiniteTypeNoLimit : InvalidInput {
  using InvalidInput::InvalidInput;
};

}  // namespace gfan
