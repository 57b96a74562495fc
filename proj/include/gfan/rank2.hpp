#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "gfan/fan.hpp"
#include "gfan/matrix.hpp"
#include "gfan/quadratic.hpp"

namespace gfan {

// Parameters (b, c) of the 2 x 2 exchange matrix [[0, c], [-b, 0]],
// normalized to b, c > 0 by the simultaneous index swap, which is an exact
// symmetry of the construction. Finite type iff bc <= 3.
struct Rank2Params {
  Int b;
  Int c;

  static Rank2Params from_pair(Int b, Int c);
  // Reads (b, c) off a rank-2 exchange matrix; second component reports
  // whether the indices were swapped to make c = b_12 positive.
  static std::pair<Rank2Params, bool> from_matrix(const ExchangeMatrix& m);

  Int product() const { return b * c; }
  bool finite() const { return product() <= 3; }
  ExchangeMatrix matrix() const;
};

// Complete fan (bc <= 3) or a truncation with max_cones maximal cones built
// from the two alternating mutation sequences (bc >= 4), flagged Incomplete.
Fan rank2_fan(const Rank2Params& p, std::size_t max_cones = 17);

// The slopes (-bc +- sqrt(bc(bc-4)))/(2c) of the limiting rays, as exact
// quadratic numbers (first s_-, then s_+). Throws FiniteTypeNoLimit for
// bc <= 3.
std::pair<QuadraticNumber, QuadraticNumber> limiting_slopes(const Rank2Params& p);

// The lattice point (-2, b), which lies outside the fan's support whenever
// bc >= 4.
IntVec badlands_lattice_point(const Rank2Params& p);

// New rays produced by the alternating mutation sequences (1,2,1,...) and
// (2,1,2,...), in order of appearance, per_side rays each.
struct Rank2RaySequences {
  std::vector<IntVec> first_side;
  std::vector<IntVec> second_side;
};
Rank2RaySequences rank2_ray_sequences(const Rank2Params& p, std::size_t per_side);

// Slope y/x of a ray, or nullopt for vertical rays.
std::optional<Rat> ray_slope(const IntVec& ray);

}  // namespace gfan
