#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gfan/classify.hpp"
#include "gfan/matrix.hpp"
#include "gfan/rank2.hpp"

namespace gfan {

// Certificate that a lattice point avoids the support of the g-fan of an
// infinite-type matrix: a mutation path to a matrix B' with a rank-2 block
// of infinite type, the point (-2, b) placed in that block's coordinates,
// and its pull-back to the input's coordinates.
struct WitnessCertificate {
  ExchangeMatrix input_b;
  std::vector<std::size_t> path;                 // 0-based mutation indices
  std::pair<std::size_t, std::size_t> index_pair;  // oriented: entry (i,j) of B' positive
  Rank2Params rank2;
  IntVec witness_at_bprime;
  IntVec witness;
};

using WitnessOutcome = std::variant<FiniteTypeVerdict, WitnessCertificate>;

// Decides finite type; for infinite type builds the certificate from the
// shortest violation path. Deterministic. Throws BudgetExceeded when the
// decision itself is indeterminate.
WitnessOutcome find_witness(const ExchangeMatrix& b,
                            std::size_t budget = kDefaultClassBudget);

struct WitnessCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Depth-bounded empirical verification plus the exact rank-2 argument.
// Non-membership in an infinite fan cannot be decided by enumeration; the
// report states its depth bound instead of pretending otherwise.
struct WitnessVerification {
  std::vector<WitnessCheck> checks;
  std::size_t depth = 0;
  std::size_t cones_examined = 0;
  bool depth_bounded = true;

  bool all_passed() const;
};

// Checks, each reported separately:
//   replay            - the path reproduces B' and its rank-2 block (b, c),
//                       and the stored block point is (-2, b) on (i, j)
//                       with zeros elsewhere;
//   transport-roundtrip - forward transport of the witness equals the block
//                       point, and inverse transport returns it;
//   no-cone-contains  - no g-cone enumerated to the given depth contains
//                       the witness;
//   badlands-slope    - exactly, in quadratic arithmetic: the transported
//                       point projects into the closed cone between the
//                       limiting rays.
WitnessVerification verify_witness(const WitnessCertificate& cert,
                                   std::size_t depth);

}  // namespace gfan
