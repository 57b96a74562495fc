#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gfan/matrix.hpp"

namespace gfan {

inline constexpr std::size_t kDefaultClassBudget = 1'000'000;

// Outcome of the finite-type decision. An Infinite verdict carries a
// replayable mutation path: applying the path's mutations to the input
// produces a matrix whose (i, j) / (j, i) entry product has absolute
// value at least 4.
struct FiniteTypeVerdict {
  enum class Kind { Finite, Infinite };

  Kind kind = Kind::Finite;
  std::size_t class_size = 0;                          // Finite only
  std::vector<std::size_t> violation_path;             // Infinite only, 0-based
  std::pair<std::size_t, std::size_t> violation_pair{0, 0};  // Infinite only

  bool finite() const { return kind == Kind::Finite; }
};

// Breadth-first search over the mutation class with exact-equality
// deduplication, children explored in index order. The first matrix found
// with |b_ij b_ji| >= 4 yields an Infinite verdict whose path is shortest
// by construction; exhausting the class yields Finite with its size.
// Throws BudgetExceeded when the class outgrows the budget with no
// violation found.
FiniteTypeVerdict decide_finite_type(const ExchangeMatrix& b,
                                     std::size_t budget = kDefaultClassBudget);

// First (i, j), scanning rows then columns, with |b_ij b_ji| >= 4.
std::optional<std::pair<std::size_t, std::size_t>> two_finiteness_violation(
    const IntMatrix& b);

}  // namespace gfan
