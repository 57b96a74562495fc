#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gfan/matrix.hpp"
#include "gfan/seed.hpp"

namespace gfan {

// Full-dimensional simplicial cone given by primitive integer ray
// generators in lexicographic order.
struct SimplicialCone {
  std::vector<IntVec> rays;

  // Normalizes arbitrary nonzero generators: primitive, sorted, distinct.
  static SimplicialCone from_rays(std::vector<IntVec> rays);

  friend bool operator==(const SimplicialCone&, const SimplicialCone&) = default;
  friend bool operator<(const SimplicialCone& a, const SimplicialCone& b) {
    return a.rays < b.rays;
  }
};

// Per-cone cache: ray matrix G (rays as columns), its adjugate and
// determinant. A point p lies in the cone iff every coordinate of
// adj(G) p has the sign of det(G) or is zero.
struct ConeGeometry {
  IntMatrix ray_matrix;
  IntMatrix adj;
  Int det;
};

// Simplicial fan: deduplicated global ray list plus maximal cones as
// sorted ray-index sets, both in canonical lexicographic order. Faces are
// implicit. Equality compares rays and cones, not the completeness flag.
class Fan {
 public:
  enum class Completeness { Complete, Incomplete, Unknown };

  Fan() = default;
  Fan(std::size_t dim, std::vector<SimplicialCone> cones,
      Completeness flag = Completeness::Unknown);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<std::vector<std::size_t>>& max_cones() const {
    return cones_;
  }
  SimplicialCone cone(std::size_t idx) const;
  const ConeGeometry& geometry(std::size_t idx) const { return geometry_[idx]; }

  Completeness completeness() const { return flag_; }
  void set_completeness(Completeness flag) { flag_ = flag; }

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.cones_ == b.cones_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<IntVec> rays_;
  std::vector<std::vector<std::size_t>> cones_;
  std::vector<ConeGeometry> geometry_;
  Completeness flag_ = Completeness::Unknown;
};

// Collects the distinct g-cones of an enumeration. Each g-tuple must be
// unimodular; a dependent tuple means the seeds are corrupt and raises
// RaysDependent.
Fan build_fan(const SeedEnumeration& seeds);

struct MembershipReport {
  bool inside = false;
  std::size_t cone_index = 0;  // valid when inside
  RatVec coefficients;         // solution of G a = p for that cone
};

// Exact membership in the fan's support: solves G a = p over the rationals
// cone by cone and reports the first cone, in canonical order, with all
// coefficients nonnegative.
MembershipReport contains_point(const Fan& f, const RatVec& p);

// Membership in a single cone.
bool cone_contains(const Fan& f, std::size_t cone_idx, const RatVec& p);
bool cone_contains(const Fan& f, std::size_t cone_idx, const IntVec& p);

struct CompletenessReport {
  bool complete = false;
  // A facet occurring in a number of maximal cones other than two,
  // as the sorted ray-index set; absent when pairing succeeded but the
  // adjacency graph is disconnected.
  std::optional<std::vector<std::size_t>> unmatched_facet;
  std::size_t facet_count = 0;
};

// Facet-pairing completeness test: the fan is complete iff every
// (n-1)-facet lies in exactly two maximal cones and the facet-adjacency
// graph is connected. Exact and integer-only.
CompletenessReport check_complete(const Fan& f);

struct LatticeCoverReport {
  bool covered = false;
  std::optional<IntVec> missing;  // first missing point, lexicographically
  unsigned long long points_checked = 0;
};

// Scans every lattice point of [-radius, radius]^n in lexicographic order.
LatticeCoverReport lattice_cover(const Fan& f, long radius);

}  // namespace gfan
