#include "gfan/quadratic.hpp"

#include <cmath>

#include "gfan/errors.hpp"

namespace gfan {

QuadraticNumber::QuadraticNumber(Rat rational_part, Rat radical_coeff, Int radicand)
    : rational_(std::move(rational_part)),
      radical_(std::move(radical_coeff)),
      radicand_(std::move(radicand)) {
  if (radicand_ < 0)
    throw InvalidInput("quadratic number: negative radicand");
  if (radicand_ == 0) radical_ = 0;
}

int QuadraticNumber::sign() const {
  if (radical_.is_zero()) return rational_.sign();
  if (rational_.is_zero()) return radical_.sign();
  const int sx = rational_.sign();
  const int sy = radical_.sign();
  if (sx == sy) return sx;
  // Mixed signs: compare a^2 against b^2 D; the larger magnitude wins.
  const Rat lhs = rational_ * rational_;
  const Rat rhs = radical_ * radical_ * Rat(radicand_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sx : sy;
}

int QuadraticNumber::compare(const QuadraticNumber& other) const {
  return (*this - other).sign();
}

int QuadraticNumber::compare(const Rat& r) const {
  return QuadraticNumber(rational_ - r, radical_, radicand_).sign();
}

QuadraticNumber QuadraticNumber::operator-() const {
  return QuadraticNumber(-rational_, -radical_, radicand_);
}

QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (a.radicand_ != b.radicand_ && !a.radical_.is_zero() && !b.radical_.is_zero())
    throw InvalidInput("quadratic number: mixed radicands");
  const Int& radicand = a.radical_.is_zero() ? b.radicand_ : a.radicand_;
  return QuadraticNumber(a.rational_ + b.rational_, a.radical_ + b.radical_,
                         radicand);
}

QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
  return a + (-b);
}

double QuadraticNumber::to_double() const {
  return rational_.convert_to<double>() +
         radical_.convert_to<double>() *
             std::sqrt(radicand_.convert_to<double>());
}

}  // namespace gfan
