#include "ccx/contraction.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>

namespace ccx {

namespace {

double snap(double x) {
  double r = std::round(x);
  return std::abs(x - r) < 1e-9 ? r : x;
}

int ceil_snapped(double x) { return static_cast<int>(std::ceil(snap(x))); }

/// Stratify vertices by distance to the path, then sample each stratum
/// proportionally (seeded). Small complexes are listed exhaustively.
std::vector<VertexId> sample_vertices(const CubeComplex& cc, const PathContext& ctx,
                                      const ProfileOptions& options) {
  const std::size_t nv = static_cast<std::size_t>(cc.vertex_count());
  std::vector<VertexId> out;
  if (nv <= options.exhaustive_limit || options.sample_budget >= nv) {
    out.resize(nv);
    for (std::size_t v = 0; v < nv; ++v) out[v] = static_cast<VertexId>(v);
    return out;
  }
  std::map<int, std::vector<VertexId>> strata;
  for (std::size_t v = 0; v < nv; ++v)
    strata[ctx.dist_to_path(static_cast<VertexId>(v))].push_back(static_cast<VertexId>(v));
  Rng rng(options.seed);
  for (auto& [d, members] : strata) {
    std::size_t quota = std::max<std::size_t>(
        1, options.sample_budget * members.size() / nv);
    for (std::size_t idx : sample_indices(members.size(), quota, rng))
      out.push_back(members[idx]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> multi_source_bfs(const CubeComplex& cc, const std::vector<char>& source) {
  const std::size_t nv = static_cast<std::size_t>(cc.vertex_count());
  std::vector<int> dist(nv, -1);
  std::vector<VertexId> queue;
  for (std::size_t v = 0; v < nv; ++v)
    if (source[v]) {
      dist[v] = 0;
      queue.push_back(static_cast<VertexId>(v));
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId w : cc.neighbors(u))
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

}  // namespace

ContractionProfile contraction_profile(const CubeComplex& cc, const GeodesicPath& b,
                                       const KappaFunction& kappa,
                                       const ProfileOptions& options) {
  PathContext ctx(cc, b);
  ContractionProfile profile;
  for (VertexId x : sample_vertices(cc, ctx, options)) {
    const int d0 = ctx.dist_to_path(x);
    if (d0 == 0) {
      ++profile.skipped_on_path;
      continue;
    }
    auto dx = cc.bfs_distances(x);
    int lo = ctx.proj_min(x), hi = ctx.proj_max(x);
    for (VertexId y = 0; y < cc.vertex_count(); ++y) {
      if (dx[static_cast<std::size_t>(y)] > d0) continue;
      lo = std::min(lo, ctx.proj_min(y));
      hi = std::max(hi, ctx.proj_max(y));
    }
    ContractionSample s;
    s.x = x;
    s.norm_x = cc.signature_distance(cc.basepoint(), x);
    s.dist_to_path = d0;
    s.proj_diameter = hi - lo;
    s.ratio_norm = s.proj_diameter / kappa(s.norm_x);
    s.ratio_proj = s.proj_diameter / kappa(ctx.proj_min(x));
    profile.constant_norm = std::max(profile.constant_norm, s.ratio_norm);
    profile.constant_proj = std::max(profile.constant_proj, s.ratio_proj);
    profile.samples.push_back(s);
  }
  return profile;
}

SlimnessProfile slimness_profile(const CubeComplex& cc, const GeodesicPath& b,
                                 const KappaFunction& kappa, int condition,
                                 const ProfileOptions& options) {
  if (condition < 1 || condition > 4)
    fail(Fault::BadParameter, fmt::format("slimness condition {} is not in 1..4", condition));
  PathContext ctx(cc, b);
  SlimnessProfile profile;
  profile.condition = condition;
  const int T = b.length();
  const std::size_t nv = static_cast<std::size_t>(cc.vertex_count());
  Rng rng(options.seed + static_cast<std::uint64_t>(condition));

  auto params_of = [&](VertexId v) { return ctx.projection_params(v); };

  for (VertexId x : sample_vertices(cc, ctx, options)) {
    auto dx = cc.bfs_distances(x);
    auto projx = params_of(x);
    const int pmin = ctx.proj_min(x);

    if (condition <= 2) {
      std::vector<int> ys;
      if (T + 1 <= 48) {
        for (int t = 0; t <= T; ++t) ys.push_back(t);
      } else {
        for (int i = 0; i < 48; ++i) ys.push_back(static_cast<int>(rng.below(static_cast<std::size_t>(T + 1))));
      }
      for (int ty : ys) {
        const int dxy = dx[static_cast<std::size_t>(b.at(ty))];
        std::vector<char> interval(nv, 0);
        for (std::size_t v = 0; v < nv; ++v)
          interval[v] = dx[v] + ctx.dist(ty, static_cast<VertexId>(v)) == dxy;
        auto di = multi_source_bfs(cc, interval);
        for (int p : projx) {
          int raw = di[static_cast<std::size_t>(b.at(p))];
          double ratio = condition == 1 ? raw / kappa(pmin) : raw / kappa(std::max(p, ty));
          SlimnessSample s{x, condition == 1 ? pmin : std::max(p, ty), raw, ratio};
          if (ratio > profile.constant) profile.constant = ratio;
          profile.samples.push_back(s);
        }
      }
    } else {
      for (int rep = 0; rep < 12; ++rep) {
        int s = static_cast<int>(rng.below(static_cast<std::size_t>(T + 1)));
        int t = static_cast<int>(rng.below(static_cast<std::size_t>(T + 1)));
        if (s > t) std::swap(s, t);
        if (s == t) continue;
        if (condition == 4 && !(s <= pmin && pmin <= t)) {
          s = std::min(s, pmin);
          t = std::max(t, pmin);
        }
        const int dsx = dx[static_cast<std::size_t>(b.at(s))];
        const int dtx = dx[static_cast<std::size_t>(b.at(t))];
        std::vector<char> sides(nv, 0);
        for (std::size_t v = 0; v < nv; ++v) {
          bool in_sx = dx[v] + ctx.dist(s, static_cast<VertexId>(v)) == dsx;
          bool in_xt = dx[v] + ctx.dist(t, static_cast<VertexId>(v)) == dtx;
          sides[v] = in_sx || in_xt;
        }
        auto di = multi_source_bfs(cc, sides);
        int raw = 0, worst_w = s;
        for (int w = s; w <= t; ++w) {
          int d = di[static_cast<std::size_t>(b.at(w))];
          if (d > raw) {
            raw = d;
            worst_w = w;
          }
        }
        (void)worst_w;
        double ratio = condition == 3 ? raw / kappa(pmin) : raw / kappa(t);
        SlimnessSample sample{x, condition == 3 ? pmin : t, raw, ratio};
        if (ratio > profile.constant) profile.constant = ratio;
        profile.samples.push_back(sample);
      }
    }
  }
  return profile;
}

DivergenceCurve lower_divergence(const CubeComplex& cc, const GeodesicPath& b, double r,
                                 const KappaFunction& kappa) {
  if (r <= 0.0) fail(Fault::BadParameter, "divergence radius multiplier must be positive");
  DivergenceCurve curve;
  curve.r = r;
  const int T = b.length();
  const std::size_t nv = static_cast<std::size_t>(cc.vertex_count());
  for (int t = 1; t < T; ++t) {
    const double kt = kappa(t);
    const double rk = snap(r * kt);
    if (!(static_cast<double>(t) > rk)) continue;
    const int radius = ceil_snapped(rk);
    if (t - radius < 0 || t + radius > T) continue;
    ++curve.admissible;

    auto dcenter = cc.bfs_distances(b.at(t));
    std::vector<char> allowed(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) allowed[v] = dcenter[v] >= radius;

    const VertexId from = b.at(t - radius), to = b.at(t + radius);
    double rho = kInf;
    if (allowed[static_cast<std::size_t>(from)] && allowed[static_cast<std::size_t>(to)]) {
      std::vector<int> dist(nv, -1);
      std::vector<VertexId> queue{from};
      dist[static_cast<std::size_t>(from)] = 0;
      for (std::size_t head = 0; head < queue.size() && dist[static_cast<std::size_t>(to)] < 0;
           ++head) {
        VertexId u = queue[head];
        for (VertexId w : cc.neighbors(u)) {
          auto wi = static_cast<std::size_t>(w);
          if (!allowed[wi] || dist[wi] >= 0) continue;
          dist[wi] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(w);
        }
      }
      if (dist[static_cast<std::size_t>(to)] >= 0) rho = dist[static_cast<std::size_t>(to)];
    }
    DivergenceRow row{t, radius, rho, rho / kt};
    curve.divergence = std::min(curve.divergence, row.ratio);
    curve.rows.push_back(row);
  }
  return curve;
}

std::vector<HyperplaneId> hyperplanes_projecting_inside(const CubeComplex& cc,
                                                        const GeodesicPath& b, int s, int t) {
  if (!(0 <= s && s < t && t <= b.length()))
    fail(Fault::BadParameter, fmt::format("window [{},{}] is not inside the segment", s, t));
  PathContext ctx(cc, b);
  std::vector<HyperplaneId> out;
  for (int i = s; i < t; ++i) {
    HyperplaneId h = b.crossed(i);
    const Bitset& carrier = cc.hyperplane(h).carrier;
    int lo = b.length(), hi = 0;
    for (std::size_t v = carrier.find_first(); v != Bitset::npos; v = carrier.find_next(v)) {
      lo = std::min(lo, ctx.proj_min(static_cast<VertexId>(v)));
      hi = std::max(hi, ctx.proj_max(static_cast<VertexId>(v)));
    }
    if (lo >= s && hi <= t) out.push_back(h);
  }
  return out;
}

ExcursionResult excursion_detect(const CubeComplex& cc, const GeodesicPath& b,
                                 const KappaFunction& kappa, double c, SeparationContext& ctx) {
  if (c <= 0.0) fail(Fault::BadParameter, "excursion constant must be positive");
  ExcursionResult result;
  const int T = b.length();
  const int n = T;  // one crossed wall per step
  if (n == 0) return result;

  constexpr double eps = 1e-9;
  bool had_unknown = false;

  auto param = [&](int i) { return b.crossing_param(i); };
  auto start_ok = [&](int i) { return param(i) <= c * kappa(param(i)) + eps; };
  auto end_ok = [&](int i) { return T - param(i) <= c * kappa(T) + eps; };

  std::vector<int> links(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i)
    if (start_ok(i)) links[static_cast<std::size_t>(i)] = 1;

  for (int j = 0; j < n; ++j) {
    const double budget = c * kappa(param(j)) + eps;
    for (int i = 0; i < j; ++i) {
      if (links[static_cast<std::size_t>(i)] < 0) continue;
      if (param(j) - param(i) > budget) continue;
      HyperplaneId wi = b.crossed(i), wj = b.crossed(j);
      if (ctx.crosses(wi, wj)) continue;
      auto ws = ctx.well_separation(wi, wj);
      if (ws.value > budget) continue;  // lower bound already violates
      if (!ws.exact) {
        had_unknown = true;  // unproven pair: drop the edge, stay conservative
        continue;
      }
      int cand = links[static_cast<std::size_t>(i)] + 1;
      if (links[static_cast<std::size_t>(j)] < 0 || cand < links[static_cast<std::size_t>(j)]) {
        links[static_cast<std::size_t>(j)] = cand;
        parent[static_cast<std::size_t>(j)] = i;
      }
    }
  }

  int best_end = -1;
  for (int i = 0; i < n; ++i) {
    if (links[static_cast<std::size_t>(i)] < 0 || !end_ok(i)) continue;
    if (best_end < 0 || links[static_cast<std::size_t>(i)] < links[static_cast<std::size_t>(best_end)])
      best_end = i;
  }
  if (best_end >= 0) {
    result.feasible = true;
    for (int i = best_end; i >= 0; i = parent[static_cast<std::size_t>(i)]) {
      result.witness.push_back({i, param(i), b.crossed(i)});
      if (parent[static_cast<std::size_t>(i)] < 0) break;
    }
    std::reverse(result.witness.begin(), result.witness.end());
  }
  result.exact = result.feasible || !had_unknown;
  return result;
}

ExcursionConstant excursion_constant(const CubeComplex& cc, const GeodesicPath& b,
                                     const KappaFunction& kappa, const std::vector<double>& c_grid,
                                     SeparationContext& ctx) {
  if (c_grid.empty()) fail(Fault::BadParameter, "empty excursion grid");
  if (!std::is_sorted(c_grid.begin(), c_grid.end()))
    fail(Fault::BadParameter, "excursion grid must be increasing");
  ExcursionConstant out;
  out.grid_max = c_grid.back();
  for (double c : c_grid) {
    auto det = excursion_detect(cc, b, kappa, c, ctx);
    if (!det.exact) out.exact = false;
    if (det.feasible) {
      out.c = c;
      out.witness = std::move(det.witness);
      out.exact = det.exact && out.exact;
      return out;
    }
  }
  return out;
}

}  // namespace ccx
