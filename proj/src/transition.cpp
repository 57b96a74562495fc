#include "gfan/transition.hpp"

#include <algorithm>

#include "gfan/errors.hpp"

namespace gfan {

namespace {

template <typename Scalar>
std::vector<Scalar> apply_forward(const ExchangeMatrix& base, std::size_t k,
                                  const std::vector<Scalar>& v) {
  const std::size_t n = base.rank();
  if (k >= n) throw DimensionMismatch("transition: direction index out of range");
  if (v.size() != n) throw DimensionMismatch("transition: wrong vector dimension");

  std::vector<Scalar> out = v;
  const Scalar& vk = v[k];
  const Scalar zero{};
  const Scalar vk_neg = std::min(vk, zero);  // min(v_k, 0)
  out[k] = -vk;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    const Int& bik = base.entries().at(i, k);
    out[i] = v[i] + Scalar(pos_part(bik)) * vk - Scalar(bik) * vk_neg;
  }
  return out;
}

template <typename Scalar>
std::vector<Scalar> apply_impl(const TransitionMap& t, const std::vector<Scalar>& v) {
  if (t.direction == TransitionDirection::Forward)
    return apply_forward(t.base, t.k, v);
  return apply_forward(t.base.mutated(t.k), t.k, v);
}

}  // namespace

IntVec apply_transition(const TransitionMap& t, const IntVec& v) {
  return apply_impl(t, v);
}

RatVec apply_transition(const TransitionMap& t, const RatVec& v) {
  return apply_impl(t, v);
}

Fan transport_fan(const Fan& f, const ExchangeMatrix& b, std::size_t k) {
  const std::size_t n = f.dim();
  if (b.rank() != n) throw DimensionMismatch("transport_fan: rank mismatch");
  if (k >= n) throw DimensionMismatch("transport_fan: direction index out of range");

  std::vector<SimplicialCone> images;
  images.reserve(f.max_cones().size());
  for (std::size_t c = 0; c < f.max_cones().size(); ++c) {
    SimplicialCone cone = f.cone(c);
    bool has_pos = false, has_neg = false;
    for (const IntVec& r : cone.rays) {
      const int s = sign_of(r[k]);
      has_pos |= s > 0;
      has_neg |= s < 0;
    }
    if (has_pos && has_neg)
      throw ConeStraddlesWall(
          "transport_fan: cone has rays on both strict sides of coordinate " +
          std::to_string(k + 1) + "; not a valid g-fan");
    std::vector<IntVec> mapped;
    mapped.reserve(cone.rays.size());
    for (const IntVec& r : cone.rays) mapped.push_back(apply_forward(b, k, r));
    images.push_back(SimplicialCone::from_rays(std::move(mapped)));
  }
  return Fan(n, std::move(images), f.completeness());
}

IntVec transport_point_along_path(const IntVec& v, const ExchangeMatrix& b,
                                  const std::vector<std::size_t>& path,
                                  TransitionDirection direction) {
  if (direction == TransitionDirection::Forward) {
    IntVec cur = v;
    ExchangeMatrix base = b;
    for (std::size_t k : path) {
      cur = apply_forward(base, k, cur);
      base = base.mutated(k);
    }
    return cur;
  }

  // Inverse: the inverse of step t is the forward map of (B_{t+1}, k_t),
  // applied in reverse path order.
  std::vector<ExchangeMatrix> stages{b};
  stages.reserve(path.size() + 1);
  for (std::size_t k : path) stages.push_back(stages.back().mutated(k));
  IntVec cur = v;
  for (std::size_t t = path.size(); t-- > 0;)
    cur = apply_forward(stages[t + 1], path[t], cur);
  return cur;
}

}  // namespace gfan
