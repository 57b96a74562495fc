#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace gfan {

// All arithmetic is exact. Entries of mutated matrices grow without bound
// in infinite type, so fixed-width integers are not an option.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// [a]_+ = max(a, 0)
inline Int pos_part(const Int& a) { return a > 0 ? a : Int(0); }

// min(a, 0)
inline Int neg_part(const Int& a) { return a < 0 ? a : Int(0); }

inline int sign_of(const Int& a) { return a.sign(); }
inline int sign_of(const Rat& a) { return a.sign(); }

// cpp_rational's (num, den) constructor rejects negative denominators;
// division normalizes.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num);
  r /= Rat(den);
  return r;
}

// gcd of absolute values; 0 for the zero vector.
Int content(const IntVec& v);

// v divided by its content. Throws InvalidInput on the zero vector.
IntVec primitive(IntVec v);

RatVec to_rational(const IntVec& v);

// Exact IntVec image of a rational vector if all entries are integral.
bool is_integral(const RatVec& v);
IntVec to_integral(const RatVec& v);

}  // namespace gfan
