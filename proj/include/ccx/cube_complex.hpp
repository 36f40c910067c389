#pragma once

#include "ccx/types.hpp"

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ccx {

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// An edge class of the square-opposition relation, with its two halfspaces.
/// "minus" is the side containing the basepoint.
struct Hyperplane {
  HyperplaneId id = -1;
  std::vector<EdgeId> dual_edges;
  Bitset halfspace_minus;
  Bitset halfspace_plus;
  Bitset carrier;  // endpoints of the dual edges
};

struct ValidationOptions {
  /// Vertex-count threshold below which pair (|C_xy| = d) and triple (median)
  /// checks run exhaustively; above it they use seeded samples.
  std::size_t exhaustive_limit = 2000;
  std::size_t sampled_pairs = 500;
  std::size_t sampled_triples = 4000;
  std::uint64_t seed = 9001;
  /// Run the median-axiom triple check at construction. Structural checks
  /// (connectivity, halfspace bipartition) always run.
  bool median_check = true;
  /// Exhaustive pair/triple sweeps at construction even above the default
  /// budget-friendly sampling. cmd_verify and the acceptance suite use this.
  bool thorough = false;
};

/// Immutable median 1-skeleton of a finite CAT(0) cube complex with its
/// derived hyperplane system. All queries are pure reads and safe to issue
/// concurrently once construction returns.
class CubeComplex {
 public:
  static CubeComplex build(VertexId vertex_count, std::vector<Edge> edges, VertexId basepoint,
                           const ValidationOptions& options = {});

  VertexId vertex_count() const { return vertex_count_; }
  VertexId basepoint() const { return basepoint_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& hyperplane(HyperplaneId h) const;
  std::size_t hyperplane_count() const { return hyperplanes_.size(); }
  int dimension() const { return dimension_; }

  std::span<const VertexId> neighbors(VertexId v) const;
  std::span<const EdgeId> incident_edges(VertexId v) const;
  HyperplaneId edge_hyperplane(EdgeId e) const { return edge_class_[e]; }

  /// Walls dual to the edges at v (the contact projection of v).
  std::vector<HyperplaneId> vertex_hyperplanes(VertexId v) const;

  /// True when v lies in halfspace_plus of h.
  bool side(HyperplaneId h, VertexId v) const;

  void check_vertex(VertexId v) const;

  /// Number of walls on which u and v disagree. Equals the graph distance;
  /// the equality is a construction invariant (exhaustively checked below the
  /// validation threshold, sampled above it).
  int signature_distance(VertexId u, VertexId v) const;

  /// Raw signature row of v: hyperplane-indexed bitmask, bit h set when v is
  /// in halfspace_plus of h.
  std::span<const std::uint64_t> signature(VertexId v) const;
  std::size_t signature_words() const { return sig_words_; }

  /// Vertex with the given signature, if any.
  std::optional<VertexId> vertex_with_signature(std::span<const std::uint64_t> sig) const;

  /// Plain BFS distances from src. The independent route used by validation;
  /// operations use signatures.
  std::vector<int> bfs_distances(VertexId src) const;

 private:
  CubeComplex() = default;

  void derive_hyperplanes();
  void build_signatures();
  void validate(const ValidationOptions& options) const;

  VertexId vertex_count_ = 0;
  VertexId basepoint_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexId> adjacency_;
  std::vector<EdgeId> incidence_;
  std::vector<std::int32_t> vertex_offset_;  // CSR offsets into adjacency_/incidence_
  std::vector<Hyperplane> hyperplanes_;
  std::vector<HyperplaneId> edge_class_;
  int dimension_ = 0;

  std::size_t sig_words_ = 0;
  std::vector<std::uint64_t> signatures_;  // vertex-major, H bits per vertex
  std::unordered_map<std::uint64_t, std::vector<VertexId>> signature_index_;
};

// ---- cube-core operations -------------------------------------------------

int distance(const CubeComplex& cc, VertexId x, VertexId y);

std::vector<HyperplaneId> separating_set(const CubeComplex& cc, VertexId x, VertexId y);

/// The unique vertex in I(x,y) ∩ I(y,z) ∩ I(x,z).
VertexId median(const CubeComplex& cc, VertexId x, VertexId y, VertexId z);

/// Nearest vertex of the convex set Z. Z must be nonempty and convex.
VertexId gate(const CubeComplex& cc, const Bitset& Z, VertexId x);

/// Intersection of all halfspaces containing S.
Bitset convex_hull(const CubeComplex& cc, const Bitset& S);

bool is_convex(const CubeComplex& cc, const Bitset& Z);

struct GatePairResult {
  std::vector<HyperplaneId> separating;  // walls separating gate(Z,x) from gate(Z,y)
  bool matches;                          // equals {h in C_(x,y) : h crosses Z}
};

GatePairResult gate_pair_check(const CubeComplex& cc, const Bitset& Z, VertexId x, VertexId y);

/// Vertices within graph distance r of center (closed ball).
Bitset ball(const CubeComplex& cc, VertexId center, int r);

/// Diameter of a convex vertex set, measured inside the set.
int convex_diameter(const CubeComplex& cc, const Bitset& Z);

}  // namespace ccx
