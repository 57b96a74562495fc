#pragma once

#include <cstddef>
#include <vector>

#include "gfan/fan.hpp"
#include "gfan/matrix.hpp"

namespace gfan {

enum class TransitionDirection { Forward, Inverse };

// The piecewise-linear change of coordinates between the g-fans of B and
// mu_k(B): coordinate k flips sign, coordinate i picks up
// [b_ik]_+ v_k - b_ik min(v_k, 0). Linear on each of the half-spaces
// v_k >= 0 and v_k <= 0, bijective on Z^n. The inverse direction is the
// forward map of (mu_k(B), k); composing the two is the identity.
struct TransitionMap {
  ExchangeMatrix base;
  std::size_t k = 0;
  TransitionDirection direction = TransitionDirection::Forward;
};

IntVec apply_transition(const TransitionMap& t, const IntVec& v);
RatVec apply_transition(const TransitionMap& t, const RatVec& v);

// Pushes a fan through the forward map ray by ray. Every cone must lie in
// one linearity domain (all rays with v_k >= 0, or all with v_k <= 0);
// a cone with strictly mixed signs raises ConeStraddlesWall.
Fan transport_fan(const Fan& f, const ExchangeMatrix& b, std::size_t k);

// Composes transitions along a mutation path. Forward maps toward
// mu_{k_m} ... mu_{k_1}(B); Inverse maps a point expressed in those
// coordinates back. Integer inputs yield integer outputs.
IntVec transport_point_along_path(const IntVec& v, const ExchangeMatrix& b,
                                  const std::vector<std::size_t>& path,
                                  TransitionDirection direction);

}  // namespace gfan
