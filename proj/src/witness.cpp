#include "gfan/witness.hpp"

#include <functional>
#include <sstream>

#include "gfan/errors.hpp"
#include "gfan/fan.hpp"
#include "gfan/seed.hpp"
#include "gfan/transition.hpp"

namespace gfan {

bool WitnessVerification::all_passed() const {
  for (const WitnessCheck& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

WitnessOutcome find_witness(const ExchangeMatrix& b, std::size_t budget) {
  FiniteTypeVerdict verdict = decide_finite_type(b, budget);
  if (verdict.finite()) return verdict;

  IntMatrix mutated = b.entries();
  for (std::size_t k : verdict.violation_path) mutated = mutate(mutated, k);

  // Orient the pair so the (i, j) entry is the positive one; sign
  // skew-symmetry guarantees one orientation works.
  auto [i, j] = verdict.violation_pair;
  if (mutated.at(i, j) < 0) std::swap(i, j);

  const Int& c = mutated.at(i, j);
  const Int bb = -mutated.at(j, i);
  if (c <= 0 || bb <= 0 || bb * c < 4)
    throw InternalError("find_witness: violation pair does not give bc >= 4");

  WitnessCertificate cert{b,
                          verdict.violation_path,
                          {i, j},
                          Rank2Params{bb, c},
                          IntVec(b.rank(), 0),
                          {}};
  cert.witness_at_bprime[i] = -2;
  cert.witness_at_bprime[j] = bb;
  cert.witness = transport_point_along_path(cert.witness_at_bprime, b, cert.path,
                                            TransitionDirection::Inverse);
  return cert;
}

namespace {

std::string vec_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

// A check that throws is a failed check, not a crash of the verifier.
void run_check(WitnessVerification& report, const std::string& name,
               const std::function<std::pair<bool, std::string>()>& body) {
  WitnessCheck check{name, false, ""};
  try {
    auto [passed, detail] = body();
    check.passed = passed;
    check.detail = std::move(detail);
  } catch (const std::exception& e) {
    check.detail = std::string("check raised: ") + e.what();
  }
  report.checks.push_back(std::move(check));
}

}  // namespace

WitnessVerification verify_witness(const WitnessCertificate& cert,
                                   std::size_t depth) {
  WitnessVerification report;
  report.depth = depth;

  const std::size_t n = cert.input_b.rank();
  const auto [i, j] = cert.index_pair;

  // (a) replay the path and compare the rank-2 block and the block point.
  run_check(report, "replay", [&]() -> std::pair<bool, std::string> {
    if (i >= n || j >= n || i == j) return {false, "index pair out of range"};
    IntMatrix m = cert.input_b.entries();
    for (std::size_t k : cert.path) {
      if (k >= n) return {false, "path index out of range"};
      m = mutate(m, k);
    }
    if (m.at(i, j) != cert.rank2.c || m.at(j, i) != -cert.rank2.b)
      return {false, "replayed block is [[0," + m.at(i, j).str() + "],[" +
                         m.at(j, i).str() + ",0]], certificate says (b,c)=(" +
                         cert.rank2.b.str() + "," + cert.rank2.c.str() + ")"};
    if (cert.rank2.product() < 4)
      return {false, "bc = " + cert.rank2.product().str() + " < 4"};
    if (cert.witness_at_bprime.size() != n)
      return {false, "block point has wrong dimension"};
    bool point_ok = cert.witness_at_bprime[i] == -2 &&
                    cert.witness_at_bprime[j] == cert.rank2.b;
    for (std::size_t t = 0; point_ok && t < n; ++t) {
      if (t != i && t != j && cert.witness_at_bprime[t] != 0) point_ok = false;
    }
    if (!point_ok) return {false, "stored block point is not (-2, b) with zero fiber"};
    return {true, "path of length " + std::to_string(cert.path.size()) +
                      " reaches block (b,c)=(" + cert.rank2.b.str() + "," +
                      cert.rank2.c.str() + ")"};
  });

  // (b) transport roundtrip. The forward image is shared with check (d).
  IntVec forward;
  run_check(report, "transport-roundtrip", [&]() -> std::pair<bool, std::string> {
    forward = transport_point_along_path(cert.witness, cert.input_b, cert.path,
                                         TransitionDirection::Forward);
    IntVec back = transport_point_along_path(forward, cert.input_b, cert.path,
                                             TransitionDirection::Inverse);
    if (forward != cert.witness_at_bprime)
      return {false, "forward transport gives " + vec_string(forward) +
                         ", certificate stores " +
                         vec_string(cert.witness_at_bprime)};
    if (back != cert.witness)
      return {false, "inverse transport does not return the witness"};
    return {true, "forward and inverse transports agree with the certificate"};
  });

  // (c) the witness lies in no g-cone enumerated to the given depth.
  run_check(report, "no-cone-contains", [&]() -> std::pair<bool, std::string> {
    SeedEnumeration seeds = enumerate_seeds_to_depth(cert.input_b, depth);
    Fan fan = build_fan(seeds);
    report.cones_examined = fan.max_cones().size();
    if (cert.witness.size() != n) return {false, "witness has wrong dimension"};
    std::size_t hits = 0;
    for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
      if (cone_contains(fan, c, cert.witness)) ++hits;
    }
    if (hits != 0)
      return {false, std::to_string(hits) + " enumerated cone(s) contain " +
                         vec_string(cert.witness)};
    return {true, std::to_string(fan.max_cones().size()) +
                      " cones examined to depth " + std::to_string(depth) +
                      ", none contains " + vec_string(cert.witness) +
                      " (depth-bounded check)"};
  });

  // (d) exact badlands membership of the projection of the transported
  // point: recomputed from the witness itself, so a tampered witness fails
  // here even if the stored block point was left intact.
  run_check(report, "badlands-slope", [&]() -> std::pair<bool, std::string> {
    if (forward.size() != n)
      return {false, "transported point unavailable (transport failed)"};
    if (cert.rank2.product() < 4) return {false, "bc < 4: no badlands"};
    const Int& x = forward[i];
    const Int& y = forward[j];
    if (x >= 0 || y <= 0)
      return {false, "projected point (" + x.str() + "," + y.str() +
                         ") is not in the open second quadrant"};
    const auto [s_minus, s_plus] = limiting_slopes(cert.rank2);
    const Rat slope = make_rat(y, x);
    const std::string slope_str =
        numerator(slope).str() + "/" + denominator(slope).str();
    if (s_minus.compare(slope) <= 0 && s_plus.compare(slope) >= 0)
      return {true, "projected slope " + slope_str + " lies in [s-, s+]"};
    return {false, "projected slope " + slope_str + " lies outside [s-, s+]"};
  });

  return report;
}

}  // namespace gfan
