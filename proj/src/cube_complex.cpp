#include "ccx/cube_complex.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace ccx {

namespace {

struct UnionFind {
  std::vector<std::int32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::int32_t find(std::int32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::uint64_t mix_words(std::span<const std::uint64_t> words) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::uint64_t w : words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return h;
}

}  // namespace

void CubeComplex::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count_) fail(Fault::UnknownVertex, fmt::format("unknown vertex {}", v));
}

const Hyperplane& CubeComplex::hyperplane(HyperplaneId h) const {
  if (h < 0 || static_cast<std::size_t>(h) >= hyperplanes_.size())
    fail(Fault::UnknownHyperplane, fmt::format("unknown hyperplane {}", h));
  return hyperplanes_[static_cast<std::size_t>(h)];
}

std::span<const VertexId> CubeComplex::neighbors(VertexId v) const {
  return {adjacency_.data() + vertex_offset_[v],
          adjacency_.data() + vertex_offset_[v + 1]};
}

std::span<const EdgeId> CubeComplex::incident_edges(VertexId v) const {
  return {incidence_.data() + vertex_offset_[v], incidence_.data() + vertex_offset_[v + 1]};
}

std::vector<HyperplaneId> CubeComplex::vertex_hyperplanes(VertexId v) const {
  check_vertex(v);
  std::vector<HyperplaneId> out;
  for (EdgeId e : incident_edges(v)) out.push_back(edge_class_[e]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool CubeComplex::side(HyperplaneId h, VertexId v) const {
  return (signatures_[static_cast<std::size_t>(v) * sig_words_ + static_cast<std::size_t>(h) / 64] >>
          (static_cast<std::size_t>(h) % 64)) & 1u;
}

int CubeComplex::signature_distance(VertexId u, VertexId v) const {
  const std::uint64_t* a = signatures_.data() + static_cast<std::size_t>(u) * sig_words_;
  const std::uint64_t* b = signatures_.data() + static_cast<std::size_t>(v) * sig_words_;
  int d = 0;
  for (std::size_t w = 0; w < sig_words_; ++w) d += std::popcount(a[w] ^ b[w]);
  return d;
}

std::span<const std::uint64_t> CubeComplex::signature(VertexId v) const {
  return {signatures_.data() + static_cast<std::size_t>(v) * sig_words_, sig_words_};
}

std::optional<VertexId> CubeComplex::vertex_with_signature(
    std::span<const std::uint64_t> sig) const {
  auto it = signature_index_.find(mix_words(sig));
  if (it == signature_index_.end()) return std::nullopt;
  for (VertexId v : it->second) {
    if (std::equal(sig.begin(), sig.end(), signature(v).begin())) return v;
  }
  return std::nullopt;
}

std::vector<int> CubeComplex::bfs_distances(VertexId src) const {
  std::vector<int> dist(static_cast<std::size_t>(vertex_count_), -1);
  std::vector<VertexId> queue;
  queue.reserve(static_cast<std::size_t>(vertex_count_));
  dist[static_cast<std::size_t>(src)] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId w : neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

CubeComplex CubeComplex::build(VertexId vertex_count, std::vector<Edge> edges, VertexId basepoint,
                               const ValidationOptions& options) {
  if (vertex_count <= 0) fail(Fault::BadParameter, "vertex count must be positive");
  CubeComplex cc;
  cc.vertex_count_ = vertex_count;

  for (auto& e : edges) {
    if (e.u == e.v) fail(Fault::InvalidEdge, fmt::format("self-loop at vertex {}", e.u));
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
      fail(Fault::UnknownVertex, fmt::format("edge ({},{}) uses an unknown vertex", e.u, e.v));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    fail(Fault::DuplicateEdge, fmt::format("duplicate edge ({},{})", dup->u, dup->v));
  cc.edges_ = std::move(edges);

  if (basepoint < 0 || basepoint >= vertex_count)
    fail(Fault::UnknownVertex, fmt::format("basepoint {} is not a vertex", basepoint));
  cc.basepoint_ = basepoint;

  // CSR adjacency
  const std::size_t nv = static_cast<std::size_t>(vertex_count);
  std::vector<std::int32_t> deg(nv, 0);
  for (const auto& e : cc.edges_) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  cc.vertex_offset_.assign(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) cc.vertex_offset_[v + 1] = cc.vertex_offset_[v] + deg[v];
  cc.adjacency_.resize(static_cast<std::size_t>(cc.vertex_offset_[nv]));
  cc.incidence_.resize(cc.adjacency_.size());
  std::vector<std::int32_t> cursor(cc.vertex_offset_.begin(), cc.vertex_offset_.end() - 1);
  for (std::size_t e = 0; e < cc.edges_.size(); ++e) {
    const auto& ed = cc.edges_[e];
    cc.adjacency_[static_cast<std::size_t>(cursor[ed.u])] = ed.v;
    cc.incidence_[static_cast<std::size_t>(cursor[ed.u]++)] = static_cast<EdgeId>(e);
    cc.adjacency_[static_cast<std::size_t>(cursor[ed.v])] = ed.u;
    cc.incidence_[static_cast<std::size_t>(cursor[ed.v]++)] = static_cast<EdgeId>(e);
  }
  // sort each neighborhood (with incidence in lockstep) for binary search
  for (std::size_t v = 0; v < nv; ++v) {
    auto lo = cc.vertex_offset_[v], hi = cc.vertex_offset_[v + 1];
    std::vector<std::pair<VertexId, EdgeId>> tmp;
    tmp.reserve(static_cast<std::size_t>(hi - lo));
    for (auto i = lo; i < hi; ++i)
      tmp.emplace_back(cc.adjacency_[static_cast<std::size_t>(i)],
                       cc.incidence_[static_cast<std::size_t>(i)]);
    std::sort(tmp.begin(), tmp.end());
    for (auto i = lo; i < hi; ++i) {
      cc.adjacency_[static_cast<std::size_t>(i)] = tmp[static_cast<std::size_t>(i - lo)].first;
      cc.incidence_[static_cast<std::size_t>(i)] = tmp[static_cast<std::size_t>(i - lo)].second;
    }
  }

  auto dist0 = cc.bfs_distances(basepoint);
  if (std::find(dist0.begin(), dist0.end(), -1) != dist0.end())
    fail(Fault::DisconnectedGraph, "graph is not connected");

  cc.derive_hyperplanes();
  cc.build_signatures();
  cc.validate(options);
  return cc;
}

void CubeComplex::derive_hyperplanes() {
  const std::size_t ne = edges_.size();
  UnionFind uf(ne);

  auto edge_between = [&](VertexId a, VertexId b) -> EdgeId {
    auto nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return -1;
    return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
  };

  // Opposite sides of every 4-cycle u-v-z-w are equivalent.
  for (VertexId u = 0; u < vertex_count_; ++u) {
    auto nb = neighbors(u);
    auto inc = incident_edges(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        VertexId v = nb[i], w = nb[j];
        // z adjacent to both v and w, z != u
        auto nv = neighbors(v);
        for (std::size_t a = 0; a < nv.size(); ++a) {
          VertexId z = nv[a];
          if (z == u) continue;
          EdgeId wz = edge_between(w, z);
          if (wz < 0) continue;
          EdgeId vz = incident_edges(v)[a];
          uf.unite(inc[i], wz);
          uf.unite(inc[j], vz);
        }
      }
    }
  }

  std::vector<HyperplaneId> class_of(ne, -1);
  edge_class_.assign(ne, -1);
  HyperplaneId next = 0;
  for (std::size_t e = 0; e < ne; ++e) {
    std::int32_t root = uf.find(static_cast<std::int32_t>(e));
    if (class_of[static_cast<std::size_t>(root)] < 0)
      class_of[static_cast<std::size_t>(root)] = next++;
    edge_class_[e] = class_of[static_cast<std::size_t>(root)];
  }

  hyperplanes_.assign(static_cast<std::size_t>(next), {});
  const std::size_t nv = static_cast<std::size_t>(vertex_count_);
  for (std::size_t e = 0; e < ne; ++e)
    hyperplanes_[static_cast<std::size_t>(edge_class_[e])].dual_edges.push_back(
        static_cast<EdgeId>(e));

  // Halfspaces: remove the dual edges, flood from the basepoint.
  std::vector<char> is_dual(ne, 0);
  for (auto& hp : hyperplanes_) {
    hp.id = static_cast<HyperplaneId>(&hp - hyperplanes_.data());
    for (EdgeId e : hp.dual_edges) is_dual[static_cast<std::size_t>(e)] = 1;

    Bitset minus(nv), visited(nv);
    std::vector<VertexId> queue{basepoint_};
    visited.set(static_cast<std::size_t>(basepoint_));
    minus.set(static_cast<std::size_t>(basepoint_));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId u = queue[head];
      auto nb = neighbors(u);
      auto inc = incident_edges(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (is_dual[static_cast<std::size_t>(inc[i])]) continue;
        VertexId w = nb[i];
        if (!visited.test(static_cast<std::size_t>(w))) {
          visited.set(static_cast<std::size_t>(w));
          minus.set(static_cast<std::size_t>(w));
          queue.push_back(w);
        }
      }
    }
    if (minus.count() == nv)
      fail(Fault::MedianViolation,
           fmt::format("hyperplane {}: removing its dual edges does not separate the graph",
                       hp.id));
    // flood the complement from any unvisited vertex; it must cover the rest
    VertexId start = -1;
    for (std::size_t v = 0; v < nv; ++v)
      if (!minus.test(v)) {
        start = static_cast<VertexId>(v);
        break;
      }
    queue.assign(1, start);
    visited.set(static_cast<std::size_t>(start));
    std::size_t plus_count = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId u = queue[head];
      auto nb = neighbors(u);
      auto inc = incident_edges(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (is_dual[static_cast<std::size_t>(inc[i])]) continue;
        VertexId w = nb[i];
        if (!visited.test(static_cast<std::size_t>(w))) {
          visited.set(static_cast<std::size_t>(w));
          queue.push_back(w);
          ++plus_count;
        }
      }
    }
    if (minus.count() + plus_count != nv)
      fail(Fault::MedianViolation,
           fmt::format("hyperplane {}: dual-edge removal leaves more than two components",
                       hp.id));

    hp.halfspace_minus = minus;
    hp.halfspace_plus = ~minus;
    hp.carrier.resize(nv);
    for (EdgeId e : hp.dual_edges) {
      const auto& ed = edges_[static_cast<std::size_t>(e)];
      if (minus.test(static_cast<std::size_t>(ed.u)) ==
          minus.test(static_cast<std::size_t>(ed.v)))
        fail(Fault::MedianViolation,
             fmt::format("hyperplane {}: dual edge ({},{}) has both ends on one side", hp.id,
                         ed.u, ed.v));
      hp.carrier.set(static_cast<std::size_t>(ed.u));
      hp.carrier.set(static_cast<std::size_t>(ed.v));
    }
    for (EdgeId e : hp.dual_edges) is_dual[static_cast<std::size_t>(e)] = 0;
  }

  // Dimension: max pairwise-crossing walls dual to edges at one vertex.
  std::unordered_map<std::uint64_t, bool> cross_cache;
  auto crossing = [&](HyperplaneId a, HyperplaneId b) {
    if (a > b) std::swap(a, b);
    std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    auto it = cross_cache.find(key);
    if (it != cross_cache.end()) return it->second;
    const auto& ha = hyperplanes_[static_cast<std::size_t>(a)];
    const auto& hb = hyperplanes_[static_cast<std::size_t>(b)];
    bool c = ha.halfspace_minus.intersects(hb.halfspace_minus) &&
             ha.halfspace_minus.intersects(hb.halfspace_plus) &&
             ha.halfspace_plus.intersects(hb.halfspace_minus) &&
             ha.halfspace_plus.intersects(hb.halfspace_plus);
    cross_cache.emplace(key, c);
    return c;
  };

  int dim = hyperplanes_.empty() ? 0 : 1;
  std::vector<HyperplaneId> local;
  for (VertexId v = 0; v < vertex_count_; ++v) {
    local.clear();
    for (EdgeId e : incident_edges(v)) local.push_back(edge_class_[e]);
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    const std::size_t m = local.size();
    if (static_cast<int>(m) <= dim) continue;
    std::vector<std::uint32_t> adj(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (crossing(local[i], local[j])) {
          adj[i] |= 1u << j;
          adj[j] |= 1u << i;
        }
    // max clique on <= 32 local walls
    int best = dim;
    auto rec = [&](auto&& self, std::uint32_t cand, int size) -> void {
      if (size + std::popcount(cand) <= best) return;
      if (!cand) {
        best = std::max(best, size);
        return;
      }
      std::uint32_t rest = cand;
      while (rest) {
        std::uint32_t bit = rest & (~rest + 1);
        int i = std::countr_zero(bit);
        rest ^= bit;
        if (size + 1 + std::popcount(rest & adj[static_cast<std::size_t>(i)]) +
                std::popcount(rest) <
            best)
          continue;
        self(self, rest & adj[static_cast<std::size_t>(i)], size + 1);
        cand ^= bit;
      }
      best = std::max(best, size);
    };
    std::uint32_t all = m >= 32 ? ~0u : ((1u << m) - 1);
    rec(rec, all, 0);
    dim = std::max(dim, best);
  }
  dimension_ = dim;
}

void CubeComplex::build_signatures() {
  const std::size_t nv = static_cast<std::size_t>(vertex_count_);
  const std::size_t nh = hyperplanes_.size();
  sig_words_ = (nh + 63) / 64;
  if (sig_words_ == 0) sig_words_ = 1;
  signatures_.assign(nv * sig_words_, 0);
  for (std::size_t h = 0; h < nh; ++h) {
    const Bitset& plus = hyperplanes_[h].halfspace_plus;
    for (std::size_t v = plus.find_first(); v != Bitset::npos; v = plus.find_next(v))
      signatures_[v * sig_words_ + h / 64] |= 1ull << (h % 64);
  }
  signature_index_.reserve(nv * 2);
  for (std::size_t v = 0; v < nv; ++v)
    signature_index_[mix_words(signature(static_cast<VertexId>(v)))].push_back(
        static_cast<VertexId>(v));
}

void CubeComplex::validate(const ValidationOptions& options) const {
  const std::size_t nv = static_cast<std::size_t>(vertex_count_);
  // Distinct vertices must carry distinct wall signatures.
  for (const auto& [hash, bucket] : signature_index_) {
    for (std::size_t i = 0; i < bucket.size(); ++i)
      for (std::size_t j = i + 1; j < bucket.size(); ++j)
        if (signature_distance(bucket[i], bucket[j]) == 0)
          fail(Fault::MedianViolation,
               fmt::format("vertices {} and {} are separated by no hyperplane", bucket[i],
                           bucket[j]));
  }

  Rng rng(options.seed);
  const bool exhaustive = options.thorough && nv <= options.exhaustive_limit;

  // |C_(x,y)| must equal the graph distance.
  auto check_source = [&](VertexId s, const std::vector<VertexId>& targets) {
    auto dist = bfs_distances(s);
    for (VertexId t : targets) {
      if (dist[static_cast<std::size_t>(t)] != signature_distance(s, t))
        fail(Fault::MedianViolation,
             fmt::format("pair ({},{}): separating walls {} != distance {}", s, t,
                         signature_distance(s, t), dist[static_cast<std::size_t>(t)]));
    }
  };
  if (exhaustive) {
    std::vector<VertexId> all(nv);
    std::iota(all.begin(), all.end(), 0);
    for (VertexId s = 0; s < vertex_count_; ++s) check_source(s, all);
  } else {
    std::size_t sources = std::min<std::size_t>(nv, 32);
    std::size_t per = std::max<std::size_t>(1, options.sampled_pairs / sources);
    for (std::size_t i = 0; i < sources; ++i) {
      VertexId s = static_cast<VertexId>(rng.below(nv));
      std::vector<VertexId> targets;
      for (std::size_t j = 0; j < per; ++j)
        targets.push_back(static_cast<VertexId>(rng.below(nv)));
      check_source(s, targets);
    }
  }

  if (!options.median_check) return;

  // Median triples: unique vertex on the majority side of every wall.
  auto check_triple = [&](VertexId x, VertexId y, VertexId z) {
    std::vector<std::uint64_t> maj(sig_words_);
    auto a = signature(x), b = signature(y), c = signature(z);
    for (std::size_t w = 0; w < sig_words_; ++w)
      maj[w] = (a[w] & b[w]) | (a[w] & c[w]) | (b[w] & c[w]);
    auto m = vertex_with_signature(maj);
    if (!m)
      fail(Fault::MedianViolation,
           fmt::format("triple ({},{},{}) has no median vertex", x, y, z));
    if (signature_distance(x, *m) + signature_distance(*m, y) != signature_distance(x, y))
      fail(Fault::MedianViolation,
           fmt::format("median of ({},{},{}) misses the interval", x, y, z));
  };
  if (exhaustive) {
    for (VertexId x = 0; x < vertex_count_; ++x)
      for (VertexId y = x + 1; y < vertex_count_; ++y)
        for (VertexId z = y + 1; z < vertex_count_; ++z) check_triple(x, y, z);
  } else {
    for (std::size_t i = 0; i < options.sampled_triples; ++i)
      check_triple(static_cast<VertexId>(rng.below(nv)), static_cast<VertexId>(rng.below(nv)),
                   static_cast<VertexId>(rng.below(nv)));
  }
}

// ---- operations -------------------------------------------------------------

int distance(const CubeComplex& cc, VertexId x, VertexId y) {
  cc.check_vertex(x);
  cc.check_vertex(y);
  return cc.signature_distance(x, y);
}

std::vector<HyperplaneId> separating_set(const CubeComplex& cc, VertexId x, VertexId y) {
  cc.check_vertex(x);
  cc.check_vertex(y);
  std::vector<HyperplaneId> out;
  auto a = cc.signature(x), b = cc.signature(y);
  for (std::size_t w = 0; w < cc.signature_words(); ++w) {
    std::uint64_t diff = a[w] ^ b[w];
    while (diff) {
      int bit = std::countr_zero(diff);
      diff &= diff - 1;
      out.push_back(static_cast<HyperplaneId>(w * 64 + static_cast<std::size_t>(bit)));
    }
  }
  return out;
}

VertexId median(const CubeComplex& cc, VertexId x, VertexId y, VertexId z) {
  cc.check_vertex(x);
  cc.check_vertex(y);
  cc.check_vertex(z);
  std::vector<std::uint64_t> maj(cc.signature_words());
  auto a = cc.signature(x), b = cc.signature(y), c = cc.signature(z);
  for (std::size_t w = 0; w < cc.signature_words(); ++w)
    maj[w] = (a[w] & b[w]) | (a[w] & c[w]) | (b[w] & c[w]);
  auto m = cc.vertex_with_signature(maj);
  if (!m)
    fail(Fault::MedianViolation,
         fmt::format("triple ({},{},{}) has empty interval intersection", x, y, z));
  return *m;
}

Bitset convex_hull(const CubeComplex& cc, const Bitset& S) {
  if (S.none()) fail(Fault::EmptySet, "convex hull of the empty set");
  Bitset hull(static_cast<std::size_t>(cc.vertex_count()));
  hull.set();
  for (const auto& hp : cc.hyperplanes()) {
    if (!S.intersects(hp.halfspace_plus)) hull &= hp.halfspace_minus;
    else if (!S.intersects(hp.halfspace_minus)) hull &= hp.halfspace_plus;
  }
  return hull;
}

bool is_convex(const CubeComplex& cc, const Bitset& Z) {
  if (Z.none()) fail(Fault::EmptySet, "convexity of the empty set");
  return convex_hull(cc, Z) == Z;
}

VertexId gate(const CubeComplex& cc, const Bitset& Z, VertexId x) {
  cc.check_vertex(x);
  if (Z.none()) fail(Fault::EmptySet, "gate onto the empty set");
  if (!is_convex(cc, Z)) fail(Fault::NotConvex, "gate requires a convex target set");
  std::vector<std::uint64_t> sig(cc.signature(x).begin(), cc.signature(x).end());
  const auto& walls = cc.hyperplanes();
  for (std::size_t h = 0; h < walls.size(); ++h) {
    const bool meets_minus = Z.intersects(walls[h].halfspace_minus);
    const bool meets_plus = Z.intersects(walls[h].halfspace_plus);
    if (meets_minus && meets_plus) continue;  // wall crosses Z: keep x's side
    const bool z_plus = meets_plus;
    if (z_plus)
      sig[h / 64] |= 1ull << (h % 64);
    else
      sig[h / 64] &= ~(1ull << (h % 64));
  }
  auto g = cc.vertex_with_signature(sig);
  if (!g || !Z.test(static_cast<std::size_t>(*g)))
    fail(Fault::MedianViolation, fmt::format("gate of {} is not realized in the target set", x));
  return *g;
}

GatePairResult gate_pair_check(const CubeComplex& cc, const Bitset& Z, VertexId x, VertexId y) {
  VertexId gx = gate(cc, Z, x);
  VertexId gy = gate(cc, Z, y);
  GatePairResult out;
  out.separating = separating_set(cc, gx, gy);
  std::vector<HyperplaneId> expected;
  for (HyperplaneId h : separating_set(cc, x, y)) {
    const auto& hp = cc.hyperplane(h);
    if (Z.intersects(hp.halfspace_minus) && Z.intersects(hp.halfspace_plus)) expected.push_back(h);
  }
  out.matches = out.separating == expected;
  return out;
}

Bitset ball(const CubeComplex& cc, VertexId center, int r) {
  cc.check_vertex(center);
  Bitset out(static_cast<std::size_t>(cc.vertex_count()));
  for (VertexId v = 0; v < cc.vertex_count(); ++v)
    if (cc.signature_distance(center, v) <= r) out.set(static_cast<std::size_t>(v));
  return out;
}

int convex_diameter(const CubeComplex& cc, const Bitset& Z) {
  if (Z.none()) fail(Fault::EmptySet, "diameter of the empty set");
  int diam = 0;
  std::vector<VertexId> members;
  for (std::size_t v = Z.find_first(); v != Bitset::npos; v = Z.find_next(v))
    members.push_back(static_cast<VertexId>(v));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      diam = std::max(diam, cc.signature_distance(members[i], members[j]));
  return diam;
}

}  // namespace ccx
