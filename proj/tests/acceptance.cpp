// Acceptance suite. Each criterion prints exactly one PASS/FAIL line;
// the process exits nonzero if any criterion fails. Everything is exact:
// no tolerances anywhere.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "enumeration_oracle.hpp"
#include "gfan/classify.hpp"
#include "gfan/errors.hpp"
#include "gfan/fan.hpp"
#include "gfan/rank2.hpp"
#include "gfan/seed.hpp"
#include "gfan/transition.hpp"
#include "gfan/witness.hpp"
#include "test_helpers.hpp"

using namespace gfan;

namespace {

constexpr long kBoxRadius = 6;
constexpr std::size_t kTruncationDepth = 6;
constexpr std::size_t kVerifyDepth = 12;

struct SuiteMatrix {
  std::string name;
  ExchangeMatrix matrix;
  bool finite_expected;  // cached verdict, filled during suite construction
  SeedEnumeration enumeration;  // full for finite, depth-truncated otherwise
};

ExchangeMatrix rank2_matrix(long long b, long long c) {
  IntMatrix m(2, 2);
  m.at(0, 1) = c;
  m.at(1, 0) = -b;
  return ExchangeMatrix(std::move(m));
}

// Deterministic "random" infinite-type rank-3 matrices: a fixed-seed
// generator filtered for infinite type with a witness inside the scan box,
// so the lattice-cover side of the equivalence is decidable by truncation.
std::vector<ExchangeMatrix> random_infinite_rank3(std::size_t count) {
  std::mt19937 rng(20250810);
  std::vector<ExchangeMatrix> out;
  while (out.size() < count) {
    ExchangeMatrix b = test::random_exchange(rng, 3, 3);
    FiniteTypeVerdict v = decide_finite_type(b, 200000);
    if (v.finite()) continue;
    WitnessOutcome o = find_witness(b, 200000);
    const auto& cert = std::get<WitnessCertificate>(o);
    bool in_box = true;
    for (const Int& x : cert.witness) in_box &= abs(x) <= kBoxRadius;
    if (!in_box) continue;
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<SuiteMatrix> build_suite() {
  std::vector<std::pair<std::string, ExchangeMatrix>> raw;
  const std::vector<std::pair<long long, long long>> rank2_params = {
      {1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {2, 2}, {4, 1},
      {1, 4}, {5, 1}, {1, 5}, {6, 1}, {3, 2}, {2, 3}, {1, 6}};
  for (auto [b, c] : rank2_params) {
    raw.emplace_back("B_{" + std::to_string(b) + "," + std::to_string(c) + "}",
                     rank2_matrix(b, c));
  }
  raw.emplace_back("A3", test::exchange({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
  raw.emplace_back("A4", test::exchange({{0, 1, 0, 0},
                                         {-1, 0, 1, 0},
                                         {0, -1, 0, 1},
                                         {0, 0, -1, 0}}));
  raw.emplace_back("B3", test::exchange({{0, 1, 0}, {-1, 0, 1}, {0, -2, 0}}));
  raw.emplace_back("D4", test::exchange({{0, 1, 1, 1},
                                         {-1, 0, 0, 0},
                                         {-1, 0, 0, 0},
                                         {-1, 0, 0, 0}}));
  raw.emplace_back("Markov", test::markov());
  std::size_t idx = 0;
  for (ExchangeMatrix& m : random_infinite_rank3(2))
    raw.emplace_back("random3x3-" + std::to_string(++idx), std::move(m));

  std::vector<SuiteMatrix> suite;
  for (auto& [name, matrix] : raw) {
    FiniteTypeVerdict v = decide_finite_type(matrix);
    SeedEnumeration e = v.finite()
                            ? enumerate_seeds(matrix)
                            : enumerate_seeds_to_depth(matrix, kTruncationDepth);
    suite.push_back({name, std::move(matrix), v.finite(), std::move(e)});
  }
  return suite;
}

struct Criterion {
  std::string name;
  std::function<bool(std::ostream&)> run;
};

// 1. The three predicates of the main equivalence agree pairwise on every
//    suite matrix.
bool criterion_equivalence(const std::vector<SuiteMatrix>& suite, std::ostream& detail) {
  bool ok = true;
  std::size_t finite_count = 0;
  for (const SuiteMatrix& s : suite) {
    Fan fan = build_fan(s.enumeration);
    const bool complete = check_complete(fan).complete;
    const bool covered = lattice_cover(fan, kBoxRadius).covered;
    finite_count += s.finite_expected;
    if (complete != s.finite_expected || covered != s.finite_expected) {
      detail << s.name << ": finite=" << s.finite_expected
             << " complete=" << complete << " covered=" << covered << "; ";
      ok = false;
    }
  }
  detail << suite.size() << " matrices (" << finite_count << " finite), R="
         << kBoxRadius;
  return ok;
}

// 2. Rank-2 maximal-cone counts for bc = 1, 2, 3.
bool criterion_rank2_counts(std::ostream& detail) {
  struct Row {
    long long b, c;
    std::size_t depth;
    std::size_t expected;
  };
  const std::vector<Row> rows = {{1, 1, 8, 5}, {2, 1, 10, 6}, {3, 1, 12, 8}};
  bool ok = true;
  for (const Row& r : rows) {
    const Rank2Params p = Rank2Params::from_pair(r.b, r.c);
    const std::size_t fan_count = rank2_fan(p).max_cones().size();
    const std::size_t oracle = test::oracle_tuple_count(p.matrix(), r.depth);
    if (fan_count != r.expected || oracle != r.expected) {
      detail << "bc=" << r.b * r.c << ": fan=" << fan_count
             << " oracle=" << oracle << " expected=" << r.expected << "; ";
      ok = false;
    }
  }
  detail << "counts 5/6/8 confirmed against the depth-bounded oracle";
  return ok;
}

// 3. Exact limiting slopes and strict monotone convergence of the first 30
//    enumerated ray slopes per side, never strictly inside (s-, s+).
bool criterion_limiting_slopes(std::ostream& detail) {
  bool ok = true;

  auto [m4, p4] = limiting_slopes(Rank2Params::from_pair(4, 1));
  if (m4.compare(Rat(-2)) != 0 || p4.compare(Rat(-2)) != 0) {
    detail << "(4,1): slopes not exactly -2; ";
    ok = false;
  }
  auto [m5, p5] = limiting_slopes(Rank2Params::from_pair(5, 1));
  if (m5.rational_part() != make_rat(-5, 2) || m5.radical_coeff() != make_rat(-1, 2) ||
      m5.radicand() != 5 || p5.rational_part() != make_rat(-5, 2) ||
      p5.radical_coeff() != make_rat(1, 2) || p5.radicand() != 5) {
    detail << "(5,1): slopes are not (-5 +- sqrt5)/2; ";
    ok = false;
  }

  for (auto [b, c] : {std::pair{4, 1}, {5, 1}}) {
    const Rank2Params p = Rank2Params::from_pair(b, c);
    auto [s_minus, s_plus] = limiting_slopes(p);
    const Rank2RaySequences seq = rank2_ray_sequences(p, 33);
    for (const auto& side : {seq.first_side, seq.second_side}) {
      std::vector<Rat> slopes;
      for (const IntVec& ray : side) {
        if (ray[0] < 0) slopes.push_back(*ray_slope(ray));
      }
      if (slopes.size() < 30) {
        detail << "(" << b << "," << c << "): fewer than 30 usable rays; ";
        ok = false;
        continue;
      }
      slopes.resize(30);
      const bool increasing = slopes[0] < slopes[1];
      const QuadraticNumber& target = increasing ? s_minus : s_plus;
      for (std::size_t i = 0; i < slopes.size(); ++i) {
        if (i + 1 < slopes.size() &&
            !(increasing ? slopes[i] < slopes[i + 1] : slopes[i + 1] < slopes[i])) {
          detail << "(" << b << "," << c << "): not strictly monotone at ray "
                 << i << "; ";
          ok = false;
        }
        const int cmp_minus = s_minus.compare(slopes[i]);
        const int cmp_plus = s_plus.compare(slopes[i]);
        if (cmp_minus < 0 && cmp_plus > 0) {
          detail << "(" << b << "," << c << "): slope strictly inside (s-,s+); ";
          ok = false;
        }
        if ((increasing ? target.compare(slopes[i]) <= 0
                        : target.compare(slopes[i]) >= 0)) {
          detail << "(" << b << "," << c << "): slope crossed its limit; ";
          ok = false;
        }
      }
    }
  }
  detail << "exact quadratic arithmetic, 30 rays per side, zero tolerance";
  return ok;
}

// 4. Canonical witnesses and their verification at depth 12.
bool criterion_witness(std::ostream& detail) {
  bool ok = true;
  for (auto [b, expected_y] : {std::pair{4, 4}, {5, 5}}) {
    WitnessOutcome o = find_witness(rank2_matrix(b, 1));
    if (!std::holds_alternative<WitnessCertificate>(o)) {
      detail << "B_{" << b << ",1} reported finite; ";
      ok = false;
      continue;
    }
    const auto& cert = std::get<WitnessCertificate>(o);
    if (cert.witness != IntVec{-2, expected_y}) {
      detail << "B_{" << b << ",1}: witness is not (-2," << expected_y << "); ";
      ok = false;
    }
    WitnessVerification v = verify_witness(cert, kVerifyDepth);
    if (!v.all_passed()) {
      detail << "B_{" << b << ",1}: verification failed; ";
      ok = false;
    }
    for (const WitnessCheck& c : v.checks) {
      if (c.name == "no-cone-contains" && !c.passed) {
        detail << "B_{" << b << ",1}: an enumerated cone contains the witness; ";
        ok = false;
      }
    }
  }
  detail << "witnesses (-2,4) and (-2,5), verified at depth " << kVerifyDepth;
  return ok;
}

// 5. Transition-map identities: pointwise roundtrips and fan transport
//    against independent enumeration.
bool criterion_transitions(const std::vector<SuiteMatrix>& suite, std::ostream& detail) {
  bool ok = true;
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long long> coord(-25, 25);
  std::size_t fan_comparisons = 0;
  for (const SuiteMatrix& s : suite) {
    const std::size_t n = s.matrix.rank();
    for (std::size_t k = 0; k < n; ++k) {
      const TransitionMap fwd{s.matrix, k, TransitionDirection::Forward};
      const TransitionMap inv{s.matrix, k, TransitionDirection::Inverse};
      for (int rep = 0; rep < 1000; ++rep) {
        IntVec v(n);
        for (Int& x : v) x = coord(rng);
        if (apply_transition(inv, apply_transition(fwd, v)) != v ||
            apply_transition(fwd, apply_transition(inv, v)) != v) {
          detail << s.name << " k=" << k + 1 << ": roundtrip broke; ";
          ok = false;
          break;
        }
      }
      if (s.finite_expected) {
        Fan transported = transport_fan(build_fan(s.enumeration), s.matrix, k);
        Fan direct = build_fan(enumerate_seeds(s.matrix.mutated(k)));
        ++fan_comparisons;
        if (!(transported == direct)) {
          detail << s.name << " k=" << k + 1 << ": transported fan differs; ";
          ok = false;
        }
      }
    }
  }
  detail << "1000 roundtrip vectors per matrix and direction; "
         << fan_comparisons << " transported fans match direct enumeration";
  return ok;
}

// 6. Structural invariants across every enumerated seed of every
//    finite-type suite matrix.
bool criterion_structural(const std::vector<SuiteMatrix>& suite, std::ostream& detail) {
  bool ok = true;
  std::size_t seeds_checked = 0;
  for (const SuiteMatrix& s : suite) {
    if (!s.finite_expected) continue;
    const std::size_t n = s.matrix.rank();
    for (std::size_t k = 0; k < n; ++k) {
      if (!(s.matrix.mutated(k).mutated(k) == s.matrix)) {
        detail << s.name << ": matrix involution broke at k=" << k + 1 << "; ";
        ok = false;
      }
    }
    for (const GVectorSeed& seed : s.enumeration.seeds) {
      ++seeds_checked;
      IntMatrix g(n, n);
      for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < n; ++row)
          g.at(row, col) = seed.g_tuple[col][row];
      if (abs(determinant(g)) != 1) {
        detail << s.name << ": G-matrix determinant is not +-1; ";
        ok = false;
      }
      const IntMatrix lower = seed.c_matrix.lower();
      for (std::size_t col = 0; col < n; ++col) {
        bool pos = false, neg = false;
        for (std::size_t row = 0; row < n; ++row) {
          pos |= lower.at(row, col) > 0;
          neg |= lower.at(row, col) < 0;
        }
        if (pos && neg) {
          detail << s.name << ": c-vector " << col + 1 << " not sign-coherent; ";
          ok = false;
        }
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (!(mutate_seed(mutate_seed(seed, k), k) == seed)) {
          detail << s.name << ": seed involution broke; ";
          ok = false;
        }
      }
    }
  }
  detail << seeds_checked << " seeds checked, zero violations allowed";
  return ok;
}

// 7. The one statement that is not checkable by enumeration is declared as
//    such: verification reports are explicitly depth-bounded.
bool criterion_stated_limits(std::ostream& detail) {
  WitnessOutcome o = find_witness(rank2_matrix(4, 1));
  const auto& cert = std::get<WitnessCertificate>(o);
  WitnessVerification v = verify_witness(cert, kVerifyDepth);
  bool ok = v.depth_bounded && v.depth == kVerifyDepth;
  bool says_bounded = false;
  for (const WitnessCheck& c : v.checks) {
    if (c.name == "no-cone-contains")
      says_bounded = c.detail.find("depth-bounded") != std::string::npos;
  }
  ok = ok && says_bounded;
  detail << "completeness for general rank is out of enumeration's reach; "
            "the suite substitutes the property checks above plus the exact "
            "rank-2 badlands argument, and verification reports its depth "
            "bound (" << v.depth << ") explicitly";
  return ok;
}

}  // namespace

int main() {
  std::vector<SuiteMatrix> suite;
  try {
    suite = build_suite();
  } catch (const std::exception& e) {
    std::cout << "FAIL criterion-1: could not build the matrix suite: "
              << e.what() << "\n";
    return 1;
  }

  const std::vector<Criterion> criteria = {
      {"criterion-1 main-theorem equivalences",
       [&](std::ostream& d) { return criterion_equivalence(suite, d); }},
      {"criterion-2 rank-2 cone counts",
       [&](std::ostream& d) { return criterion_rank2_counts(d); }},
      {"criterion-3 limiting slopes",
       [&](std::ostream& d) { return criterion_limiting_slopes(d); }},
      {"criterion-4 canonical witness",
       [&](std::ostream& d) { return criterion_witness(d); }},
      {"criterion-5 transition identities",
       [&](std::ostream& d) { return criterion_transitions(suite, d); }},
      {"criterion-6 structural invariants",
       [&](std::ostream& d) { return criterion_structural(suite, d); }},
      {"criterion-7 non-enumerable content stated",
       [&](std::ostream& d) { return criterion_stated_limits(d); }},
  };

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail << "raised: " << e.what();
    }
    all_ok &= ok;
    std::cout << (ok ? "PASS " : "FAIL ") << c.name << ": " << detail.str()
              << "\n";
  }
  return all_ok ? 0 : 1;
}
