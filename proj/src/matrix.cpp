#include "gfan/matrix.hpp"

#include <utility>
#include <vector>

#include "gfan/errors.hpp"

namespace gfan {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) throw InvalidInput("matrix: no rows");
  const std::size_t cols = rows[0].size();
  if (cols == 0) throw InvalidInput("matrix: empty row");
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw InvalidInput("matrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::column(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<IntVec> IntMatrix::to_rows() const {
  std::vector<IntVec> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    rows[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  return rows;
}

IntMatrix mutate(const IntMatrix& m, std::size_t k) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (k >= cols)
    throw DimensionMismatch("mutate: direction index out of range");
  if (rows < cols)
    throw DimensionMismatch("mutate: fewer rows than columns");
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (i == k || j == k) {
        out.at(i, j) = -m.at(i, j);
      } else {
        out.at(i, j) = m.at(i, j) + m.at(i, k) * pos_part(m.at(k, j)) +
                       pos_part(-m.at(i, k)) * m.at(k, j);
      }
    }
  }
  return out;
}

std::optional<IntVec> find_skew_symmetrizer(const IntMatrix& b) {
  const std::size_t n = b.rows();
  if (n == 0 || b.cols() != n) return std::nullopt;

  // Entrywise sign condition. It also forces a zero diagonal.
  for (std::size_t i = 0; i < n; ++i) {
    if (b.at(i, i) != 0) return std::nullopt;
    for (std::size_t j = i + 1; j < n; ++j) {
      const int si = sign_of(b.at(i, j));
      const int sj = sign_of(b.at(j, i));
      if (si == 0 && sj == 0) continue;
      if (si == 0 || sj == 0 || si == sj) return std::nullopt;
    }
  }

  // Propagate d_j / d_i = -b_ij / b_ji along a spanning forest of the
  // nonzero pattern, then re-check every edge.
  std::vector<Rat> d(n, Rat(0));
  std::vector<std::size_t> component(n, 0);
  std::size_t component_count = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    ++component_count;
    d[root] = 1;
    component[root] = component_count;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (b.at(i, j) == 0 || d[j] != 0) continue;
        d[j] = d[i] * make_rat(-b.at(i, j), b.at(j, i));
        component[j] = component_count;
        stack.push_back(j);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (b.at(i, j) == 0) continue;
      if (d[i] * Rat(b.at(i, j)) != -d[j] * Rat(b.at(j, i))) return std::nullopt;
    }
  }

  // Clear denominators and reduce per connected component, so the result is
  // the minimal positive vector with gcd 1.
  IntVec out(n);
  for (std::size_t comp = 1; comp <= component_count; ++comp) {
    Int scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] == comp) scale = lcm(scale, denominator(d[i]));
    }
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] != comp) continue;
      out[i] = numerator(d[i]) * (scale / denominator(d[i]));
      g = gcd(g, out[i]);
    }
    if (g > 1) {
      for (std::size_t i = 0; i < n; ++i) {
        if (component[i] == comp) out[i] /= g;
      }
    }
  }
  return out;
}

ExchangeMatrix::ExchangeMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
    throw InvalidInput("exchange matrix: must be square and nonempty");
  auto d = find_skew_symmetrizer(entries_);
  if (!d)
    throw NonSkewSymmetrizable("exchange matrix: no positive skew-symmetrizer");
  symmetrizer_ = std::move(*d);
}

ExchangeMatrix ExchangeMatrix::mutated(std::size_t k) const {
  return ExchangeMatrix(mutate(entries_, k));
}

ExtendedMatrix::ExtendedMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.cols();
  if (n == 0 || entries_.rows() != 2 * n)
    throw InvalidInput("extended matrix: must be 2n x n");
  IntMatrix top(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) top.at(i, j) = entries_.at(i, j);
  if (!find_skew_symmetrizer(top))
    throw NonSkewSymmetrizable("extended matrix: upper part not skew-symmetrizable");
}

IntMatrix ExtendedMatrix::upper() const {
  const std::size_t n = rank();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entries_.at(i, j);
  return m;
}

IntMatrix ExtendedMatrix::lower() const {
  const std::size_t n = rank();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entries_.at(n + i, j);
  return m;
}

ExtendedMatrix ExtendedMatrix::mutated(std::size_t k) const {
  return ExtendedMatrix(mutate(entries_, k));
}

ExtendedMatrix framed(const ExchangeMatrix& b) {
  const std::size_t n = b.rank();
  IntMatrix m(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = b.entries().at(i, j);
  for (std::size_t i = 0; i < n; ++i) m.at(n + i, i) = 1;
  return ExtendedMatrix(std::move(m));
}

Int determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DimensionMismatch("determinant: not square");
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    if (a.at(col, col) == 0) {
      std::size_t pivot = col + 1;
      while (pivot < n && a.at(pivot, col) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(col, j), a.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        // Bareiss step: the division is exact.
        a.at(i, j) =
            (a.at(i, j) * a.at(col, col) - a.at(i, col) * a.at(col, j)) / prev;
      }
      a.at(i, col) = 0;
    }
    prev = a.at(col, col);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DimensionMismatch("adjugate: not square");
  IntMatrix adj(n, n);
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t mi = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::size_t mj = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mi, mj) = m.at(r, c);
          ++mj;
        }
        ++mi;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj.at(j, i) = cof;
    }
  }
  return adj;
}

}  // namespace gfan
