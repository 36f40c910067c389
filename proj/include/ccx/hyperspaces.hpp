#pragma once

#include "ccx/contraction.hpp"
#include "ccx/geodesic.hpp"
#include "ccx/kappa.hpp"
#include "ccx/separation.hpp"

#include <array>
#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace ccx {

/// Intersection graph of the hyperplane carriers.
class ContactGraph {
 public:
  explicit ContactGraph(const CubeComplex& cc);

  std::size_t size() const { return adjacency_.size(); }
  const std::vector<HyperplaneId>& neighbors(HyperplaneId h) const { return adjacency_[h]; }
  bool adjacent(HyperplaneId a, HyperplaneId b) const;
  const std::vector<std::pair<HyperplaneId, HyperplaneId>>& edge_list() const { return edges_; }

  /// BFS distance between walls; -1 when disconnected.
  int dist(HyperplaneId a, HyperplaneId b) const;

  /// Min pairwise distance between two cliques of walls.
  int clique_distance(const std::vector<HyperplaneId>& a,
                      const std::vector<HyperplaneId>& b) const;

 private:
  std::vector<std::vector<HyperplaneId>> adjacency_;
  std::vector<std::pair<HyperplaneId, HyperplaneId>> edges_;
};

ContactGraph contact_graph(const CubeComplex& cc);

/// Walls whose carrier contains x; a clique in the contact graph.
std::vector<HyperplaneId> contact_projection(const CubeComplex& cc, VertexId x);

struct ContactProgressRow {
  int t;
  int distance;               // contact distance between p(b(0)) and p(b(t))
  int strongly_separated;     // n(t): longest chain of pairwise strongly separated crossed walls
};

struct ContactProgress {
  std::vector<ContactProgressRow> rows;
  bool bound_ok = true;  // distance >= n(t) - 3 everywhere (clique slack 2 + 1)
};

ContactProgress contact_progress(const CubeComplex& cc, const GeodesicPath& b,
                                 SeparationContext& ctx);

struct WellSepDistance {
  int value = 0;
  bool exact = true;
};

/// d_k(x, y): length of the longest chain of separating walls of (x, y) with
/// consecutive pairs k-well-separated (equivalently pairwise, by nesting).
class WellSepMetric {
 public:
  WellSepMetric(const CubeComplex& cc, SeparationContext& ctx, int k);

  int k() const { return k_; }
  WellSepDistance operator()(VertexId x, VertexId y) const;

 private:
  const CubeComplex* cc_;
  SeparationContext* ctx_;
  int k_;
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::uint64_t, WellSepDistance> memo_;
};

WellSepDistance wellsep_distance(const CubeComplex& cc, int k, VertexId x, VertexId y,
                                 SeparationContext& ctx);

struct DeltaEstimate {
  double delta = 0.0;
  std::array<VertexId, 4> worst{};
  bool exact = true;  // false when an underlying d_k value was inexact
};

/// Four-point hyperbolicity defect over sampled quadruples:
/// the two largest pair-sums differ by at most 2*delta.
DeltaEstimate hyperbolicity_delta(const std::function<WellSepDistance(VertexId, VertexId)>& metric,
                                  const std::vector<std::array<VertexId, 4>>& quadruples);

std::vector<std::array<VertexId, 4>> sample_quadruples(VertexId vertex_count, std::size_t count,
                                                       std::uint64_t seed);

struct WellSepProgressRow {
  int t;
  int d_k;
  bool exact;
};

struct WellSepProgress {
  std::vector<WellSepProgressRow> rows;
  /// Smallest grid (d1, d2) with d_k(o, b(t)) >= t/(d1*kappa(t)) - d2 at every
  /// sampled t; absent when no grid pair fits (reported as unbounded).
  std::optional<std::pair<double, double>> fit;
  bool exact = true;
};

WellSepProgress wellsep_progress(const CubeComplex& cc, const GeodesicPath& b, int k,
                                 const KappaFunction& kappa, SeparationContext& ctx);

}  // namespace ccx
