#include "gfan/rank2.hpp"

#include <algorithm>

#include "gfan/errors.hpp"
#include "gfan/seed.hpp"

namespace gfan {

Rank2Params Rank2Params::from_pair(Int b, Int c) {
  if (b * c <= 0)
    throw InvalidInput("rank-2 parameters: bc must be positive");
  if (b < 0) {
    // Swapping the two indices sends [[0,c],[-b,0]] to [[0,-b],[c,0]].
    Int nb = -c, nc = -b;
    b = std::move(nb);
    c = std::move(nc);
  }
  return Rank2Params{std::move(b), std::move(c)};
}

std::pair<Rank2Params, bool> Rank2Params::from_matrix(const ExchangeMatrix& m) {
  if (m.rank() != 2) throw InvalidInput("rank-2 parameters: matrix must be 2 x 2");
  const Int& c = m.entries().at(0, 1);
  const Int b = -m.entries().at(1, 0);
  if (b * c <= 0)
    throw InvalidInput("rank-2 parameters: matrix is zero or not sign-coherent");
  const bool swapped = c < 0;
  return {from_pair(b, c), swapped};
}

ExchangeMatrix Rank2Params::matrix() const {
  IntMatrix m(2, 2);
  m.at(0, 1) = c;
  m.at(1, 0) = -b;
  return ExchangeMatrix(std::move(m));
}

Fan rank2_fan(const Rank2Params& p, std::size_t max_cones) {
  if (max_cones == 0) throw InvalidInput("rank2_fan: zero cone budget");
  const ExchangeMatrix b = p.matrix();

  if (p.finite()) {
    Fan fan = build_fan(enumerate_seeds(b));
    fan.set_completeness(Fan::Completeness::Complete);
    return fan;
  }

  // Truncation: walk the two alternating mutation sequences, interleaved,
  // collecting each freshly created g-cone. For bc >= 4 no cone ever
  // repeats, so the budget is met exactly.
  std::vector<SimplicialCone> cones;
  auto push_cone = [&cones](const GVectorSeed& s) {
    std::vector<IntVec> rays = s.g_tuple;
    std::sort(rays.begin(), rays.end());
    cones.push_back(SimplicialCone{std::move(rays)});
  };

  GVectorSeed start = initial_seed(b);
  push_cone(start);
  GVectorSeed chain[2] = {start, start};
  std::size_t next_k[2] = {0, 1};
  std::size_t side = 0;
  while (cones.size() < max_cones) {
    chain[side] = mutate_seed(chain[side], next_k[side]);
    next_k[side] ^= 1;
    push_cone(chain[side]);
    side ^= 1;
  }
  return Fan(2, std::move(cones), Fan::Completeness::Incomplete);
}

std::pair<QuadraticNumber, QuadraticNumber> limiting_slopes(const Rank2Params& p) {
  const Int bc = p.product();
  if (bc <= 3)
    throw FiniteTypeNoLimit("limiting_slopes: finite type (bc <= 3) has no limiting rays");
  const Int disc = bc * (bc - 4);
  const Rat mid = make_rat(-bc, 2 * p.c);
  const Rat half = make_rat(1, 2 * p.c);
  return {QuadraticNumber(mid, -half, disc), QuadraticNumber(mid, half, disc)};
}

IntVec badlands_lattice_point(const Rank2Params& p) {
  if (p.product() < 4)
    throw InvalidInput("badlands_lattice_point: requires bc >= 4");
  return IntVec{Int(-2), p.b};
}

Rank2RaySequences rank2_ray_sequences(const Rank2Params& p, std::size_t per_side) {
  const ExchangeMatrix b = p.matrix();
  Rank2RaySequences out;
  for (int side = 0; side < 2; ++side) {
    std::vector<IntVec>& rays = side == 0 ? out.first_side : out.second_side;
    GVectorSeed seed = initial_seed(b);
    std::size_t k = side == 0 ? 0 : 1;
    for (std::size_t step = 0; step < per_side; ++step) {
      seed = mutate_seed(seed, k);
      rays.push_back(seed.g_tuple[k]);
      k ^= 1;
    }
  }
  return out;
}

std::optional<Rat> ray_slope(const IntVec& ray) {
  if (ray.size() != 2) throw DimensionMismatch("ray_slope: rank-2 rays only");
  if (ray[0] == 0) return std::nullopt;
  return make_rat(ray[1], ray[0]);
}

}  // namespace gfan
