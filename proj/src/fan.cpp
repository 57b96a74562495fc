#include "gfan/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gfan/errors.hpp"

namespace gfan {

SimplicialCone SimplicialCone::from_rays(std::vector<IntVec> rays) {
  if (rays.empty()) throw InvalidInput("cone: no rays");
  const std::size_t n = rays[0].size();
  for (IntVec& r : rays) {
    if (r.size() != n) throw DimensionMismatch("cone: rays of mixed dimension");
    r = primitive(std::move(r));
  }
  std::sort(rays.begin(), rays.end());
  if (std::adjacent_find(rays.begin(), rays.end()) != rays.end())
    throw InvalidInput("cone: duplicate ray");
  return SimplicialCone{std::move(rays)};
}

Fan::Fan(std::size_t dim, std::vector<SimplicialCone> cones, Completeness flag)
    : dim_(dim), flag_(flag) {
  if (dim == 0) throw InvalidInput("fan: dimension must be positive");

  std::set<IntVec> ray_set;
  for (const SimplicialCone& c : cones) {
    if (c.rays.size() != dim)
      throw InvalidInput("fan: maximal cones must have exactly dim rays");
    for (const IntVec& r : c.rays) {
      if (r.size() != dim) throw DimensionMismatch("fan: ray dimension mismatch");
      ray_set.insert(r);
    }
  }
  rays_.assign(ray_set.begin(), ray_set.end());

  std::map<IntVec, std::size_t> ray_index;
  for (std::size_t i = 0; i < rays_.size(); ++i) ray_index.emplace(rays_[i], i);

  std::set<std::vector<std::size_t>> cone_set;
  for (const SimplicialCone& c : cones) {
    std::vector<std::size_t> idx;
    idx.reserve(dim);
    for (const IntVec& r : c.rays) idx.push_back(ray_index.at(r));
    std::sort(idx.begin(), idx.end());
    cone_set.insert(std::move(idx));
  }
  cones_.assign(cone_set.begin(), cone_set.end());

  geometry_.reserve(cones_.size());
  for (const auto& cone : cones_) {
    IntMatrix g(dim, dim);
    for (std::size_t col = 0; col < dim; ++col)
      for (std::size_t row = 0; row < dim; ++row)
        g.at(row, col) = rays_[cone[col]][row];
    Int det = determinant(g);
    if (det == 0) throw RaysDependent("fan: cone rays are linearly dependent");
    IntMatrix adj = adjugate(g);
    geometry_.push_back({std::move(g), std::move(adj), std::move(det)});
  }
}

SimplicialCone Fan::cone(std::size_t idx) const {
  std::vector<IntVec> rays;
  rays.reserve(dim_);
  for (std::size_t r : cones_[idx]) rays.push_back(rays_[r]);
  return SimplicialCone{std::move(rays)};
}

Fan build_fan(const SeedEnumeration& seeds) {
  if (!seeds.ambient || seeds.seeds.empty())
    throw InvalidInput("build_fan: empty enumeration");
  const std::size_t n = seeds.ambient->rank();
  std::vector<SimplicialCone> cones;
  cones.reserve(seeds.seeds.size());
  for (const GVectorSeed& s : seeds.seeds) {
    for (const IntVec& g : s.g_tuple) {
      if (content(g) != 1)
        throw RaysDependent("build_fan: non-primitive g-vector in seed");
    }
    std::vector<IntVec> rays = s.g_tuple;
    std::sort(rays.begin(), rays.end());
    if (std::adjacent_find(rays.begin(), rays.end()) != rays.end())
      throw RaysDependent("build_fan: repeated g-vector in seed");
    cones.push_back(SimplicialCone{std::move(rays)});
  }
  return Fan(n, std::move(cones));
}

bool cone_contains(const Fan& f, std::size_t cone_idx, const RatVec& p) {
  const ConeGeometry& geo = f.geometry(cone_idx);
  const std::size_t n = f.dim();
  const int ds = sign_of(geo.det);
  for (std::size_t i = 0; i < n; ++i) {
    Rat q = 0;
    for (std::size_t j = 0; j < n; ++j) q += Rat(geo.adj.at(i, j)) * p[j];
    const int qs = sign_of(q);
    if (qs != 0 && qs != ds) return false;
  }
  return true;
}

bool cone_contains(const Fan& f, std::size_t cone_idx, const IntVec& p) {
  const ConeGeometry& geo = f.geometry(cone_idx);
  const std::size_t n = f.dim();
  const int ds = sign_of(geo.det);
  Int q;
  for (std::size_t i = 0; i < n; ++i) {
    q = 0;
    for (std::size_t j = 0; j < n; ++j) q += geo.adj.at(i, j) * p[j];
    const int qs = sign_of(q);
    if (qs != 0 && qs != ds) return false;
  }
  return true;
}

MembershipReport contains_point(const Fan& f, const RatVec& p) {
  if (p.size() != f.dim())
    throw DimensionMismatch("contains_point: wrong point dimension");
  MembershipReport report;
  for (std::size_t c = 0; c < f.max_cones().size(); ++c) {
    if (!cone_contains(f, c, p)) continue;
    const ConeGeometry& geo = f.geometry(c);
    report.inside = true;
    report.cone_index = c;
    report.coefficients.assign(f.dim(), Rat(0));
    for (std::size_t i = 0; i < f.dim(); ++i) {
      Rat q = 0;
      for (std::size_t j = 0; j < f.dim(); ++j)
        q += Rat(geo.adj.at(i, j)) * p[j];
      report.coefficients[i] = q / Rat(geo.det);
    }
    return report;
  }
  return report;
}

namespace {

// Union-find over cone indices.
struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

CompletenessReport check_complete(const Fan& f) {
  const std::size_t n = f.dim();
  const auto& cones = f.max_cones();
  if (cones.empty())
    throw InvalidInput("check_complete: fan has no maximal cones");

  // Each maximal cone contributes its n facets, identified by the sorted
  // (n-1)-subset of global ray indices.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> facets;
  for (std::size_t c = 0; c < cones.size(); ++c) {
    for (std::size_t drop = 0; drop < n; ++drop) {
      std::vector<std::size_t> facet;
      facet.reserve(n - 1);
      for (std::size_t t = 0; t < n; ++t) {
        if (t != drop) facet.push_back(cones[c][t]);
      }
      facets[std::move(facet)].push_back(c);
    }
  }

  CompletenessReport report;
  report.facet_count = facets.size();
  for (const auto& [facet, owners] : facets) {
    if (owners.size() != 2) {
      report.complete = false;
      report.unmatched_facet = facet;
      return report;
    }
  }

  DisjointSets components(cones.size());
  for (const auto& [facet, owners] : facets) components.unite(owners[0], owners[1]);
  for (std::size_t c = 1; c < cones.size(); ++c) {
    if (components.find(c) != components.find(0)) {
      report.complete = false;
      return report;
    }
  }
  report.complete = true;
  return report;
}

LatticeCoverReport lattice_cover(const Fan& f, long radius) {
  if (radius < 0) throw InvalidInput("lattice_cover: negative radius");
  const std::size_t n = f.dim();
  const std::size_t cone_count = f.max_cones().size();

  LatticeCoverReport report;
  std::vector<long> z(n, -radius);
  IntVec point(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) point[i] = z[i];
    ++report.points_checked;

    bool inside = false;
    for (std::size_t c = 0; c < cone_count; ++c) {
      if (cone_contains(f, c, point)) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      report.covered = false;
      report.missing = point;
      return report;
    }

    // Lexicographic odometer: last coordinate runs fastest.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (z[pos] < radius) {
        ++z[pos];
        std::fill(z.begin() + static_cast<std::ptrdiff_t>(pos) + 1, z.end(),
                  -radius);
        break;
      }
      if (pos == 0) {
        report.covered = true;
        return report;
      }
    }
  }
}

}  // namespace gfan
