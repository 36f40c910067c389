#pragma once

#include "ccx/cube_complex.hpp"

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace ccx {

// ---- pair relations ---------------------------------------------------------

/// True iff all four halfspace intersections of the pair are nonempty.
bool crosses(const CubeComplex& cc, HyperplaneId h1, HyperplaneId h2);

/// True iff h1 and h2 (pairwise disjoint from h) lie in different halfspaces
/// of h, carriers taken as vertex sets.
bool separates_hyperplanes(const CubeComplex& cc, HyperplaneId h, HyperplaneId h1,
                           HyperplaneId h2);

/// Three pairwise disjoint walls none of which separates the other two.
bool is_facing_triple(const CubeComplex& cc, HyperplaneId h1, HyperplaneId h2, HyperplaneId h3);

bool strongly_separated(const CubeComplex& cc, HyperplaneId h1, HyperplaneId h2);

/// Exact count of walls crossing both members of a disjoint pair.
int k_separation(const CubeComplex& cc, HyperplaneId h1, HyperplaneId h2);

// ---- well-separation --------------------------------------------------------

struct WellSepResult {
  int value = 0;
  bool exact = true;
  std::vector<HyperplaneId> witness;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Largest no-facing-triple subfamily of the crossing set of (h1, h2).
/// Polynomial chain search when the crossing set is pairwise disjoint,
/// branch-and-bound under a node budget otherwise; `exact` reports whether
/// the search completed.
WellSepResult well_separation(const CubeComplex& cc, HyperplaneId h1, HyperplaneId h2,
                              std::uint64_t node_budget = kDefaultNodeBudget);

/// Largest no-facing-triple subfamily of an arbitrary wall family.
WellSepResult max_no_facing_triple_family(const CubeComplex& cc,
                                          const std::vector<HyperplaneId>& family,
                                          std::uint64_t node_budget = kDefaultNodeBudget);

/// Max over vertex pairs of |family ∩ C_(x,y)| for a no-facing-triple family:
/// the largest sub-chain realizable on one geodesic. Exhaustive over pairs up
/// to the validation threshold, seeded sampling above it.
int crossing_chain_bound(const CubeComplex& cc, const std::vector<HyperplaneId>& family);

struct SeparationReport {
  HyperplaneId h1;
  HyperplaneId h2;
  int crossing_count;
  WellSepResult well_separation;
  bool strongly_separated;
};

// ---- cached bulk oracle -----------------------------------------------------

/// Precomputed pairwise relations plus a memo table for well-separation.
/// The memo is the only mutable state and is guarded; fills are idempotent.
class SeparationContext {
 public:
  explicit SeparationContext(const CubeComplex& cc,
                             std::uint64_t node_budget = kDefaultNodeBudget);

  const CubeComplex& complex() const { return *cc_; }

  bool crosses(HyperplaneId a, HyperplaneId b) const;
  /// -1 when a crosses g or a == g; otherwise 0/1 = side of a holding g's carrier.
  int carrier_side(HyperplaneId a, HyperplaneId g) const;
  bool separates(HyperplaneId h, HyperplaneId a, HyperplaneId b) const;

  std::vector<HyperplaneId> crossing_set(HyperplaneId h1, HyperplaneId h2) const;
  int k_separation(HyperplaneId h1, HyperplaneId h2) const;
  bool strongly_separated(HyperplaneId h1, HyperplaneId h2) const;

  WellSepResult well_separation(HyperplaneId h1, HyperplaneId h2) const;

  SeparationReport report(HyperplaneId h1, HyperplaneId h2) const;

 private:
  const CubeComplex* cc_;
  std::uint64_t node_budget_;
  std::size_t n_;
  std::vector<Bitset> crossing_rows_;
  std::vector<std::int8_t> side_;  // n*n, -1/0/1

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::uint64_t, WellSepResult> pair_memo_;
  mutable std::unordered_map<std::uint64_t, WellSepResult> set_memo_;

  WellSepResult solve_family(const std::vector<HyperplaneId>& family) const;
  friend WellSepResult detail_solve_for_tests(const SeparationContext&,
                                              const std::vector<HyperplaneId>&, bool force_bnb);
};

namespace detail {

/// Longest separation chain in a pairwise disjoint family (polynomial DP).
WellSepResult max_family_chain(const SeparationContext& ctx,
                               const std::vector<HyperplaneId>& family);

/// Branch-and-bound over arbitrary families; counts nodes against the budget.
WellSepResult max_family_branch_and_bound(const SeparationContext& ctx,
                                          const std::vector<HyperplaneId>& family,
                                          std::uint64_t node_budget);

}  // namespace detail

}  // namespace ccx
