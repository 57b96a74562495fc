#pragma once

#include "gfan/numbers.hpp"

namespace gfan {

// Exact element a + b*sqrt(D) of a real quadratic extension, with rational
// a, b and a fixed nonnegative integer radicand D. Sign queries square the
// radical away, so every comparison is exact; no floating point.
class QuadraticNumber {
 public:
  QuadraticNumber(Rat rational_part, Rat radical_coeff, Int radicand);

  const Rat& rational_part() const { return rational_; }
  const Rat& radical_coeff() const { return radical_; }
  const Int& radicand() const { return radicand_; }

  int sign() const;
  int compare(const QuadraticNumber& other) const;
  int compare(const Rat& r) const;

  QuadraticNumber operator-() const;
  friend QuadraticNumber operator+(const QuadraticNumber& a,
                                   const QuadraticNumber& b);
  friend QuadraticNumber operator-(const QuadraticNumber& a,
                                   const QuadraticNumber& b);

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.compare(b) == 0;
  }
  friend bool operator<(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.compare(b) < 0;
  }
  friend bool operator<=(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.compare(b) <= 0;
  }

  double to_double() const;

 private:
  Rat rational_;
  Rat radical_;
  Int radicand_;
};

}  // namespace gfan
