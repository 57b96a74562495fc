#include "gfan/seed.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "gfan/errors.hpp"

namespace gfan {

GVectorSeed initial_seed(std::shared_ptr<const ExchangeMatrix> ambient) {
  if (!ambient) throw InvalidInput("initial_seed: null ambient matrix");
  const std::size_t n = ambient->rank();
  std::vector<IntVec> g(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
  return GVectorSeed{ambient, framed(*ambient), std::move(g)};
}

GVectorSeed initial_seed(const ExchangeMatrix& ambient) {
  return initial_seed(std::make_shared<const ExchangeMatrix>(ambient));
}

GVectorSeed mutate_seed(const GVectorSeed& seed, std::size_t k) {
  const std::size_t n = seed.ambient->rank();
  if (k >= n) throw DimensionMismatch("mutate_seed: direction index out of range");

  const IntMatrix& c = seed.c_matrix.entries();
  const IntMatrix& b = seed.ambient->entries();

  IntVec new_gk(n);
  for (std::size_t t = 0; t < n; ++t) new_gk[t] = -seed.g_tuple[k][t];
  for (std::size_t i = 0; i < n; ++i) {
    const Int coeff = pos_part(c.at(i, k));
    if (coeff == 0) continue;
    for (std::size_t t = 0; t < n; ++t) new_gk[t] += coeff * seed.g_tuple[i][t];
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Int coeff = pos_part(c.at(n + j, k));
    if (coeff == 0) continue;
    for (std::size_t t = 0; t < n; ++t) new_gk[t] -= coeff * b.at(t, j);
  }

  GVectorSeed out{seed.ambient, seed.c_matrix.mutated(k), seed.g_tuple};
  out.g_tuple[k] = std::move(new_gk);
  return out;
}

namespace {

IntVec seed_key(const GVectorSeed& s) {
  IntVec key = s.c_matrix.entries().data();
  for (const IntVec& g : s.g_tuple) key.insert(key.end(), g.begin(), g.end());
  return key;
}

SeedEnumeration enumerate_impl(const ExchangeMatrix& b, std::size_t budget,
                               bool depth_bounded, std::size_t max_depth,
                               ChildOrder order) {
  if (budget == 0) throw InvalidInput("enumerate_seeds: zero budget");

  SeedEnumeration out;
  out.ambient = std::make_shared<const ExchangeMatrix>(b);
  const std::size_t n = b.rank();

  std::map<IntVec, std::size_t> index_of;
  std::deque<std::size_t> frontier;

  out.seeds.push_back(initial_seed(out.ambient));
  out.depths.push_back(0);
  index_of.emplace(seed_key(out.seeds[0]), 0);
  frontier.push_back(0);

  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> edge_seen;
  bool truncated = false;

  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop_front();

    const bool at_depth_limit = depth_bounded && out.depths[cur] >= max_depth;

    for (std::size_t step = 0; step < n; ++step) {
      const std::size_t k =
          order == ChildOrder::Ascending ? step : n - 1 - step;
      GVectorSeed child = mutate_seed(out.seeds[cur], k);
      IntVec key = seed_key(child);
      auto it = index_of.find(key);
      std::size_t child_idx;
      if (it != index_of.end()) {
        child_idx = it->second;
      } else if (at_depth_limit) {
        truncated = true;
        continue;
      } else {
        if (out.seeds.size() >= budget)
          throw BudgetExceeded(
              "enumerate_seeds: seed budget " + std::to_string(budget) +
                  " exhausted; the matrix may be of infinite type",
              out.seeds.size());
        child_idx = out.seeds.size();
        index_of.emplace(std::move(key), child_idx);
        out.seeds.push_back(std::move(child));
        out.depths.push_back(out.depths[cur] + 1);
        frontier.push_back(child_idx);
      }
      const auto canon = std::make_tuple(std::min(cur, child_idx),
                                         std::max(cur, child_idx), k);
      if (edge_seen.insert(canon).second)
        out.edges.push_back({cur, k, child_idx});
    }
  }

  out.exhausted = !truncated;
  return out;
}

}  // namespace

SeedEnumeration enumerate_seeds(const ExchangeMatrix& b, std::size_t budget,
                                ChildOrder order) {
  return enumerate_impl(b, budget, false, 0, order);
}

SeedEnumeration enumerate_seeds_to_depth(const ExchangeMatrix& b,
                                         std::size_t max_depth,
                                         std::size_t budget, ChildOrder order) {
  return enumerate_impl(b, budget, true, max_depth, order);
}

std::size_t count_unordered_g_tuples(const SeedEnumeration& e) {
  std::set<std::vector<IntVec>> tuples;
  for (const GVectorSeed& s : e.seeds) {
    std::vector<IntVec> sorted = s.g_tuple;
    std::sort(sorted.begin(), sorted.end());
    tuples.insert(std::move(sorted));
  }
  return tuples.size();
}

}  // namespace gfan
