#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "gfan/matrix.hpp"

namespace gfan {

inline constexpr std::size_t kDefaultSeedBudget = 1'000'000;

// A 2n x n coefficient matrix together with an ordered n-tuple of integer
// g-vectors. All seeds of one enumeration share the ambient exchange
// matrix: the mutation rule's correction term reads columns of the
// *initial* B, never of the current upper part, and sharing it by pointer
// makes that mistake unrepresentable.
struct GVectorSeed {
  std::shared_ptr<const ExchangeMatrix> ambient;
  ExtendedMatrix c_matrix;
  std::vector<IntVec> g_tuple;

  friend bool operator==(const GVectorSeed& a, const GVectorSeed& b) {
    return a.c_matrix == b.c_matrix && a.g_tuple == b.g_tuple;
  }
  friend bool operator<(const GVectorSeed& a, const GVectorSeed& b) {
    if (a.c_matrix == b.c_matrix) return a.g_tuple < b.g_tuple;
    return a.c_matrix < b.c_matrix;
  }
};

GVectorSeed initial_seed(std::shared_ptr<const ExchangeMatrix> ambient);
GVectorSeed initial_seed(const ExchangeMatrix& ambient);

// Replaces g_k by -g_k + sum_i [c_ik]_+ g_i - sum_j [c_{n+j,k}]_+ b_j with
// all c entries read from the pre-mutation coefficient matrix, and mutates
// the coefficient matrix itself.
GVectorSeed mutate_seed(const GVectorSeed& seed, std::size_t k);

struct SeedMutationEdge {
  std::size_t from;
  std::size_t k;
  std::size_t to;

  friend bool operator==(const SeedMutationEdge&, const SeedMutationEdge&) = default;
};

enum class ChildOrder { Ascending, Descending };

struct SeedEnumeration {
  std::shared_ptr<const ExchangeMatrix> ambient;
  std::vector<GVectorSeed> seeds;  // discovery order; seeds[0] is initial
  std::vector<std::size_t> depths;
  std::vector<SeedMutationEdge> edges;  // each unordered edge listed once
  bool exhausted = false;  // true when closed under all mutations
};

// Breadth-first closure of the initial seed under mutation, deduplicating
// on exact (c_matrix, g_tuple) equality. Terminates exactly when the
// ambient matrix is of finite type; otherwise throws BudgetExceeded.
SeedEnumeration enumerate_seeds(const ExchangeMatrix& b,
                                std::size_t budget = kDefaultSeedBudget,
                                ChildOrder order = ChildOrder::Ascending);

// Same search truncated at a fixed BFS depth; the safety budget still
// applies. exhausted is true only if closure happened within the depth.
SeedEnumeration enumerate_seeds_to_depth(const ExchangeMatrix& b,
                                         std::size_t max_depth,
                                         std::size_t budget = kDefaultSeedBudget,
                                         ChildOrder order = ChildOrder::Ascending);

// Number of distinct g-vector tuples when tuples differing by reordering
// are identified.
std::size_t count_unordered_g_tuples(const SeedEnumeration& e);

}  // namespace gfan
