#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gfan/numbers.hpp"

namespace gfan {

// Dense integer matrix, row-major. Comparison is lexicographic on
// (rows, cols, entries) so matrices can key ordered containers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVec column(std::size_t j) const;
  std::vector<IntVec> to_rows() const;
  const IntVec& data() const { return data_; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  IntVec data_;
};

// Mutation in direction k (0-based): entries in row or column k are negated,
// every other entry picks up b_ik [b_kj]_+ + [-b_ik]_+ b_kj. Defined for any
// m x n matrix with k < n <= m; the input is left untouched.
IntMatrix mutate(const IntMatrix& m, std::size_t k);

// Minimal positive integer diagonal d with d_i b_ij = -d_j b_ji, or nullopt
// when no such diagonal exists. Ratios are propagated along a spanning
// forest of the nonzero pattern and every remaining edge is re-checked.
std::optional<IntVec> find_skew_symmetrizer(const IntMatrix& b);

// Square integer matrix admitting a positive skew-symmetrizer. The minimal
// symmetrizer (entrywise gcd 1) is computed on construction.
class ExchangeMatrix {
 public:
  explicit ExchangeMatrix(IntMatrix entries);

  std::size_t rank() const { return entries_.rows(); }
  const IntMatrix& entries() const { return entries_; }
  const IntVec& skew_symmetrizer() const { return symmetrizer_; }

  ExchangeMatrix mutated(std::size_t k) const;

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.entries_ < b.entries_;
  }

 private:
  IntMatrix entries_;
  IntVec symmetrizer_;
};

// 2n x n integer matrix whose upper square part is a valid exchange matrix.
class ExtendedMatrix {
 public:
  explicit ExtendedMatrix(IntMatrix entries);

  std::size_t rank() const { return entries_.cols(); }
  const IntMatrix& entries() const { return entries_; }
  IntMatrix upper() const;
  IntMatrix lower() const;

  ExtendedMatrix mutated(std::size_t k) const;

  friend bool operator==(const ExtendedMatrix& a, const ExtendedMatrix& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const ExtendedMatrix& a, const ExtendedMatrix& b) {
    return a.entries_ < b.entries_;
  }

 private:
  IntMatrix entries_;
};

// The 2n x n matrix with upper part B and lower part the identity.
ExtendedMatrix framed(const ExchangeMatrix& b);

// Determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

// Classical adjugate: adjugate(m) * m = determinant(m) * identity.
IntMatrix adjugate(const IntMatrix& m);

}  // namespace gfan
