#include "ccx/geodesic.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <unordered_set>

namespace ccx {

GeodesicPath GeodesicPath::make(const CubeComplex& cc, std::vector<VertexId> vertices,
                                std::string name) {
  if (vertices.empty()) fail(Fault::NotGeodesic, "empty vertex sequence");
  for (VertexId v : vertices) cc.check_vertex(v);
  if (vertices.front() != cc.basepoint())
    fail(Fault::NotGeodesic,
         fmt::format("path '{}' must start at the basepoint {}", name, cc.basepoint()));

  std::vector<HyperplaneId> crossed;
  std::unordered_set<HyperplaneId> seen;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    VertexId u = vertices[i], v = vertices[i + 1];
    auto nb = cc.neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v)
      fail(Fault::NotGeodesic, fmt::format("consecutive vertices {} and {} are not adjacent", u, v));
    EdgeId e = cc.incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
    HyperplaneId h = cc.edge_hyperplane(e);
    if (!seen.insert(h).second)
      fail(Fault::NotGeodesic, fmt::format("hyperplane {} crossed twice: not a geodesic", h));
    crossed.push_back(h);
  }
  // Distinct crossed walls force d(b(i), b(j)) = |i-j|; spot-check the ends.
  int T = static_cast<int>(vertices.size()) - 1;
  if (T > 0 && cc.signature_distance(vertices.front(), vertices.back()) != T)
    fail(Fault::NotGeodesic, "endpoint distance disagrees with the step count");
  return GeodesicPath(cc, std::move(vertices), std::move(crossed), std::move(name));
}

PathContext::PathContext(const CubeComplex& cc, const GeodesicPath& b)
    : b_(&b), nv_(static_cast<std::size_t>(cc.vertex_count())) {
  const int T = b.length();
  table_.resize(static_cast<std::size_t>(T + 1) * nv_);
  for (int t = 0; t <= T; ++t) {
    auto dist = cc.bfs_distances(b.at(t));
    std::copy(dist.begin(), dist.end(), table_.begin() + static_cast<std::size_t>(t) * nv_);
  }
  dmin_.assign(nv_, 0);
  pmin_.assign(nv_, 0);
  pmax_.assign(nv_, 0);
  for (std::size_t v = 0; v < nv_; ++v) {
    int best = table_[v], lo = 0, hi = 0;
    for (int t = 1; t <= T; ++t) {
      int d = table_[static_cast<std::size_t>(t) * nv_ + v];
      if (d < best) {
        best = d;
        lo = hi = t;
      } else if (d == best) {
        hi = t;
      }
    }
    dmin_[v] = best;
    pmin_[v] = lo;
    pmax_[v] = hi;
  }
}

std::vector<int> PathContext::projection_params(VertexId v) const {
  std::vector<int> out;
  for (int t = pmin_[v]; t <= pmax_[v]; ++t)
    if (dist(t, v) == dmin_[v]) out.push_back(t);
  return out;
}

Projection project_to_path(const CubeComplex& cc, const GeodesicPath& b, VertexId x) {
  cc.check_vertex(x);
  Projection out;
  int best = cc.vertex_count();
  std::vector<int> params;
  for (int t = 0; t <= b.length(); ++t) {
    int d = cc.signature_distance(x, b.at(t));
    if (d < best) {
      best = d;
      params.clear();
    }
    if (d == best) params.push_back(t);
  }
  out.param_min = params.front();
  out.param_max = params.back();
  for (int t : params) out.vertices.push_back(b.at(t));
  return out;
}

}  // namespace ccx
