#include "gfan/numbers.hpp"

#include <boost/multiprecision/integer.hpp>

#include "gfan/errors.hpp"

namespace gfan {

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g < 0 ? Int(-g) : g;
}

IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g == 0) throw InvalidInput("primitive: zero vector has no direction");
  if (g != 1) {
    for (Int& x : v) x /= g;
  }
  return v;
}

RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

bool is_integral(const RatVec& v) {
  for (const Rat& x : v) {
    if (denominator(x) != 1) return false;
  }
  return true;
}

IntVec to_integral(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const Rat& x : v) {
    if (denominator(x) != 1) throw InvalidInput("to_integral: non-integer entry");
    out.push_back(numerator(x));
  }
  return out;
}

}  // namespace gfan
