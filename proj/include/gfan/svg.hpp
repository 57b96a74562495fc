#pragma once

#include <cstddef>
#include <string>

#include "gfan/rank2.hpp"

namespace gfan {

// SVG plot of a rank-2 g-fan: rays drawn as unit-height segments from the
// origin, limiting rays highlighted in red for bc >= 4. depth_per_side
// controls how many rays of each alternating sequence are drawn for
// infinite fans; finite fans are drawn whole.
std::string rank2_fan_svg(const Rank2Params& p, std::size_t depth_per_side = 8);

}  // namespace gfan
