#include "gfan/json_io.hpp"

#include <limits>

#include "gfan/errors.hpp"

namespace gfan {

long long to_json_int(const Int& v) {
  if (v < std::numeric_limits<long long>::min() ||
      v > std::numeric_limits<long long>::max())
    throw InternalError("json: integer entry exceeds the 64-bit wire format: " +
                        v.str());
  return v.convert_to<long long>();
}

Int int_from_json(const Json& j) {
  if (!j.is_number_integer())
    throw InvalidInput("json: expected an integer, got " + j.dump());
  return Int(j.get<long long>());
}

IntVec intvec_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("json: expected an array of integers");
  IntVec v;
  v.reserve(j.size());
  for (const Json& e : j) v.push_back(int_from_json(e));
  return v;
}

Json intvec_to_json(const IntVec& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(to_json_int(x));
  return out;
}

namespace {

Json rows_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const IntVec& r : m.to_rows()) rows.push_back(intvec_to_json(r));
  return rows;
}

IntMatrix rows_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw InvalidInput("json: expected a nonempty array of matrix rows");
  std::vector<IntVec> rows;
  rows.reserve(j.size());
  for (const Json& r : j) rows.push_back(intvec_from_json(r));
  return IntMatrix::from_rows(rows);
}

}  // namespace

Json matrix_to_json(const ExchangeMatrix& m) {
  Json j;
  j["n"] = m.rank();
  j["b"] = rows_to_json(m.entries());
  return j;
}

Json extended_to_json(const ExtendedMatrix& m) {
  Json j;
  j["n"] = m.rank();
  j["c"] = rows_to_json(m.entries());
  return j;
}

ExchangeMatrix matrix_from_json(const Json& j) {
  if (j.is_array()) return ExchangeMatrix(rows_from_json(j));
  if (!j.is_object() || !j.contains("b"))
    throw InvalidInput("json: expected matrix rows or an object with key \"b\"");
  IntMatrix m = rows_from_json(j.at("b"));
  if (j.contains("n") && j.at("n").get<long long>() != static_cast<long long>(m.rows()))
    throw InvalidInput("json: \"n\" does not match the number of rows");
  return ExchangeMatrix(std::move(m));
}

ExtendedMatrix extended_from_json(const Json& j) {
  if (j.is_array()) return ExtendedMatrix(rows_from_json(j));
  if (!j.is_object() || !j.contains("c"))
    throw InvalidInput("json: expected matrix rows or an object with key \"c\"");
  IntMatrix m = rows_from_json(j.at("c"));
  if (j.contains("n") &&
      j.at("n").get<long long>() * 2 != static_cast<long long>(m.rows()))
    throw InvalidInput("json: \"n\" does not match half the number of rows");
  return ExtendedMatrix(std::move(m));
}

Json enumeration_to_json(const SeedEnumeration& e) {
  Json j;
  j["b"] = matrix_to_json(*e.ambient);
  Json seeds = Json::array();
  for (const GVectorSeed& s : e.seeds) {
    Json seed;
    seed["c"] = rows_to_json(s.c_matrix.entries());
    Json g = Json::array();
    for (const IntVec& v : s.g_tuple) g.push_back(intvec_to_json(v));
    seed["g"] = g;
    seeds.push_back(std::move(seed));
  }
  j["seeds"] = std::move(seeds);
  Json edges = Json::array();
  for (const SeedMutationEdge& e2 : e.edges)
    edges.push_back(Json::array({e2.from, e2.k + 1, e2.to}));
  j["edges"] = std::move(edges);
  j["exhausted"] = e.exhausted;
  return j;
}

SeedEnumeration enumeration_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("b") || !j.contains("seeds"))
    throw InvalidInput("json: seed set needs keys \"b\" and \"seeds\"");
  SeedEnumeration e;
  e.ambient = std::make_shared<const ExchangeMatrix>(matrix_from_json(j.at("b")));
  const std::size_t n = e.ambient->rank();
  for (const Json& s : j.at("seeds")) {
    if (!s.is_object() || !s.contains("c") || !s.contains("g"))
      throw InvalidInput("json: each seed needs keys \"c\" and \"g\"");
    ExtendedMatrix c(rows_from_json(s.at("c")));
    if (c.rank() != n) throw InvalidInput("json: seed rank mismatch");
    std::vector<IntVec> g;
    for (const Json& v : s.at("g")) {
      IntVec gv = intvec_from_json(v);
      if (gv.size() != n) throw InvalidInput("json: g-vector dimension mismatch");
      g.push_back(std::move(gv));
    }
    if (g.size() != n) throw InvalidInput("json: seed needs n g-vectors");
    e.seeds.push_back(GVectorSeed{e.ambient, std::move(c), std::move(g)});
  }
  if (e.seeds.empty()) throw InvalidInput("json: seed set is empty");
  if (j.contains("edges")) {
    for (const Json& edge : j.at("edges")) {
      if (!edge.is_array() || edge.size() != 3)
        throw InvalidInput("json: edges are triples [from, k, to]");
      const long long from = edge[0].get<long long>();
      const long long k = edge[1].get<long long>();
      const long long to = edge[2].get<long long>();
      if (from < 0 || to < 0 || from >= static_cast<long long>(e.seeds.size()) ||
          to >= static_cast<long long>(e.seeds.size()) || k < 1 ||
          k > static_cast<long long>(n))
        throw InvalidInput("json: edge indices out of range");
      e.edges.push_back({static_cast<std::size_t>(from),
                         static_cast<std::size_t>(k - 1),
                         static_cast<std::size_t>(to)});
    }
  }
  e.exhausted = j.value("exhausted", false);
  e.depths.assign(e.seeds.size(), 0);
  return e;
}

Json fan_to_json(const Fan& f) {
  Json j;
  j["dim"] = f.dim();
  Json rays = Json::array();
  for (const IntVec& r : f.rays()) rays.push_back(intvec_to_json(r));
  j["rays"] = std::move(rays);
  Json cones = Json::array();
  for (const auto& c : f.max_cones()) cones.push_back(c);
  j["cones"] = std::move(cones);
  switch (f.completeness()) {
    case Fan::Completeness::Complete:
      j["complete"] = true;
      break;
    case Fan::Completeness::Incomplete:
      j["complete"] = false;
      break;
    case Fan::Completeness::Unknown:
      j["complete"] = nullptr;
      break;
  }
  return j;
}

Fan fan_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("rays") ||
      !j.contains("cones"))
    throw InvalidInput("json: fan needs keys \"dim\", \"rays\", \"cones\"");
  const long long dim = j.at("dim").get<long long>();
  if (dim <= 0) throw InvalidInput("json: fan dimension must be positive");
  std::vector<IntVec> rays;
  for (const Json& r : j.at("rays")) {
    IntVec ray = intvec_from_json(r);
    if (ray.size() != static_cast<std::size_t>(dim))
      throw InvalidInput("json: ray dimension mismatch");
    rays.push_back(std::move(ray));
  }
  std::vector<SimplicialCone> cones;
  for (const Json& c : j.at("cones")) {
    std::vector<IntVec> cone_rays;
    for (const Json& idx : c) {
      const long long r = idx.get<long long>();
      if (r < 0 || r >= static_cast<long long>(rays.size()))
        throw InvalidInput("json: cone ray index out of range");
      cone_rays.push_back(rays[static_cast<std::size_t>(r)]);
    }
    cones.push_back(SimplicialCone::from_rays(std::move(cone_rays)));
  }
  Fan::Completeness flag = Fan::Completeness::Unknown;
  if (j.contains("complete") && !j.at("complete").is_null())
    flag = j.at("complete").get<bool>() ? Fan::Completeness::Complete
                                        : Fan::Completeness::Incomplete;
  try {
    return Fan(static_cast<std::size_t>(dim), std::move(cones), flag);
  } catch (const RaysDependent& e) {
    // Dependent rays in *input* are bad data, not an internal bug.
    throw InvalidInput(std::string("json: ") + e.what());
  }
}

Json verdict_to_json(const FiniteTypeVerdict& v) {
  Json j;
  if (v.finite()) {
    j["kind"] = "finite";
    j["class_size"] = v.class_size;
  } else {
    j["kind"] = "infinite";
    Json path = Json::array();
    for (std::size_t k : v.violation_path) path.push_back(k + 1);
    j["path"] = std::move(path);
    j["pair"] = Json::array(
        {v.violation_pair.first + 1, v.violation_pair.second + 1});
  }
  return j;
}

Json certificate_to_json(const WitnessCertificate& c) {
  Json j;
  j["b"] = matrix_to_json(c.input_b);
  Json path = Json::array();
  for (std::size_t k : c.path) path.push_back(k + 1);
  j["path"] = std::move(path);
  j["pair"] =
      Json::array({c.index_pair.first + 1, c.index_pair.second + 1});
  j["bc"] = Json::array({to_json_int(c.rank2.b), to_json_int(c.rank2.c)});
  j["witness"] = intvec_to_json(c.witness);
  j["witness_at_bprime"] = intvec_to_json(c.witness_at_bprime);
  return j;
}

WitnessCertificate certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("b") || !j.contains("path") ||
      !j.contains("pair") || !j.contains("bc") || !j.contains("witness") ||
      !j.contains("witness_at_bprime"))
    throw InvalidInput(
        "json: certificate needs keys \"b\", \"path\", \"pair\", \"bc\", "
        "\"witness\", \"witness_at_bprime\"");
  ExchangeMatrix b = matrix_from_json(j.at("b"));
  const std::size_t n = b.rank();
  std::vector<std::size_t> path;
  for (const Json& k : j.at("path")) {
    const long long v = k.get<long long>();
    if (v < 1 || v > static_cast<long long>(n))
      throw InvalidInput("json: path index out of range");
    path.push_back(static_cast<std::size_t>(v - 1));
  }
  const Json& pair = j.at("pair");
  if (!pair.is_array() || pair.size() != 2)
    throw InvalidInput("json: pair must be [i, j]");
  const long long pi = pair[0].get<long long>(), pj = pair[1].get<long long>();
  if (pi < 1 || pj < 1 || pi > static_cast<long long>(n) ||
      pj > static_cast<long long>(n) || pi == pj)
    throw InvalidInput("json: pair indices out of range");
  const Json& bc = j.at("bc");
  if (!bc.is_array() || bc.size() != 2)
    throw InvalidInput("json: bc must be [b, c]");
  Int rb = int_from_json(bc[0]), rc = int_from_json(bc[1]);
  if (rb <= 0 || rc <= 0)
    throw InvalidInput("json: certificate rank-2 parameters must be positive");
  IntVec witness = intvec_from_json(j.at("witness"));
  IntVec witness_at_bprime = intvec_from_json(j.at("witness_at_bprime"));
  if (witness.size() != n || witness_at_bprime.size() != n)
    throw InvalidInput("json: witness dimension mismatch");
  return WitnessCertificate{std::move(b),
                            std::move(path),
                            {static_cast<std::size_t>(pi - 1),
                             static_cast<std::size_t>(pj - 1)},
                            Rank2Params{std::move(rb), std::move(rc)},
                            std::move(witness_at_bprime),
                            std::move(witness)};
}

Json verification_to_json(const WitnessVerification& v) {
  Json j;
  j["all_passed"] = v.all_passed();
  j["depth"] = v.depth;
  j["depth_bounded"] = v.depth_bounded;
  j["cones_examined"] = v.cones_examined;
  Json checks = Json::array();
  for (const WitnessCheck& c : v.checks) {
    Json check;
    check["name"] = c.name;
    check["passed"] = c.passed;
    check["detail"] = c.detail;
    checks.push_back(std::move(check));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json membership_to_json(const MembershipReport& r, const Fan& f) {
  Json j;
  j["inside"] = r.inside;
  if (r.inside) {
    j["cone"] = r.cone_index;
    Json coeffs = Json::array();
    for (const Rat& c : r.coefficients)
      coeffs.push_back(numerator(c).str() + "/" + denominator(c).str());
    j["coefficients"] = std::move(coeffs);
    Json rays = Json::array();
    for (std::size_t idx : f.max_cones()[r.cone_index])
      rays.push_back(intvec_to_json(f.rays()[idx]));
    j["cone_rays"] = std::move(rays);
  }
  return j;
}

Json completeness_to_json(const CompletenessReport& r, const Fan& f) {
  Json j;
  j["complete"] = r.complete;
  j["max_cones"] = f.max_cones().size();
  j["facets"] = r.facet_count;
  if (r.unmatched_facet) {
    Json facet = Json::array();
    for (std::size_t idx : *r.unmatched_facet)
      facet.push_back(intvec_to_json(f.rays()[idx]));
    j["unmatched_facet"] = std::move(facet);
  }
  return j;
}

Json cover_to_json(const LatticeCoverReport& r, long radius) {
  Json j;
  j["covered"] = r.covered;
  j["radius"] = radius;
  j["points_checked"] = r.points_checked;
  if (r.missing) j["missing"] = intvec_to_json(*r.missing);
  return j;
}

}  // namespace gfan
