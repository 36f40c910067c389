#include "ccx/separation.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <numeric>

namespace ccx {

namespace {

/// Pairwise data for a wall family, indexed by position in the family.
/// side[m*k+i] is the side of family[m] holding the carrier of family[i]:
/// 0/1, or -1 when they cross or coincide.
struct FamilyRelations {
  std::size_t k = 0;
  std::vector<std::int8_t> side;

  bool disjoint(std::size_t i, std::size_t j) const { return side[i * k + j] >= 0; }
  bool separates(std::size_t m, std::size_t i, std::size_t j) const {
    std::int8_t a = side[m * k + i], b = side[m * k + j];
    return a >= 0 && b >= 0 && a != b;
  }
  bool pairwise_disjoint() const {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (!disjoint(i, j)) return false;
    return true;
  }
  bool facing_triple(std::size_t a, std::size_t b, std::size_t c) const {
    return disjoint(a, b) && disjoint(a, c) && disjoint(b, c) && !separates(a, b, c) &&
           !separates(b, a, c) && !separates(c, a, b);
  }
};

int pair_side(const Hyperplane& of, const Hyperplane& holds) {
  const bool in_minus = holds.carrier.intersects(of.halfspace_minus);
  const bool in_plus = holds.carrier.intersects(of.halfspace_plus);
  if (in_minus && in_plus) return -1;
  return in_plus ? 1 : 0;
}

FamilyRelations relations_from_complex(const CubeComplex& cc,
                                       const std::vector<HyperplaneId>& family) {
  FamilyRelations rel;
  rel.k = family.size();
  rel.side.assign(rel.k * rel.k, -1);
  for (std::size_t m = 0; m < rel.k; ++m) {
    const auto& hm = cc.hyperplane(family[m]);
    for (std::size_t i = 0; i < rel.k; ++i) {
      if (i == m) continue;
      rel.side[m * rel.k + i] =
          static_cast<std::int8_t>(pair_side(hm, cc.hyperplane(family[i])));
    }
  }
  return rel;
}

/// Longest chain linearly ordered by separation: every consecutive triple has
/// its middle wall separating the outer two, which propagates to all triples.
WellSepResult chain_solver(const FamilyRelations& rel,
                           const std::vector<HyperplaneId>& family) {
  const std::size_t k = rel.k;
  WellSepResult out;
  if (k == 0) return out;
  out.value = 1;
  out.witness = {family[0]};
  if (k == 1) return out;

  // L[i*k+j]: walls in the longest chain starting with (i, j); 0 = unknown.
  std::vector<std::int32_t> L(k * k, 0);
  std::vector<std::int32_t> nxt(k * k, -1);
  auto solve = [&](auto&& self, std::size_t i, std::size_t j) -> std::int32_t {
    std::int32_t& slot = L[i * k + j];
    if (slot) return slot;
    slot = 2;
    for (std::size_t m = 0; m < k; ++m) {
      if (m == i || m == j) continue;
      if (!rel.separates(j, i, m)) continue;
      std::int32_t cand = 1 + self(self, j, m);
      if (cand > slot) {
        slot = cand;
        nxt[i * k + j] = static_cast<std::int32_t>(m);
      }
    }
    return slot;
  };

  std::size_t bi = 0, bj = 1;
  std::int32_t best = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !rel.disjoint(i, j)) continue;
      std::int32_t v = solve(solve, i, j);
      if (v > best) {
        best = v;
        bi = i;
        bj = j;
      }
    }
  out.value = static_cast<int>(best);
  out.witness.clear();
  if (best >= 2) {
    std::size_t i = bi, j = bj;
    out.witness.push_back(family[i]);
    out.witness.push_back(family[j]);
    while (nxt[i * k + j] >= 0) {
      std::size_t m = static_cast<std::size_t>(nxt[i * k + j]);
      out.witness.push_back(family[m]);
      i = j;
      j = m;
    }
  } else {
    out.witness = {family[0]};
  }
  return out;
}

WellSepResult bnb_solver(const FamilyRelations& rel, const std::vector<HyperplaneId>& family,
                         std::uint64_t node_budget) {
  const std::size_t k = rel.k;
  WellSepResult out;
  std::vector<std::size_t> chosen, best;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (nodes++ >= node_budget) {
      exhausted = true;
      return;
    }
    if (chosen.size() + (k - idx) <= best.size()) return;
    if (idx == k) {
      if (chosen.size() > best.size()) best = chosen;
      return;
    }
    bool ok = true;
    for (std::size_t a = 0; a < chosen.size() && ok; ++a)
      for (std::size_t b = a + 1; b < chosen.size() && ok; ++b)
        if (rel.facing_triple(chosen[a], chosen[b], idx)) ok = false;
    if (ok) {
      chosen.push_back(idx);
      self(self, idx + 1);
      chosen.pop_back();
      if (exhausted) return;
    }
    self(self, idx + 1);
  };
  rec(rec, 0);

  out.value = static_cast<int>(best.size());
  out.exact = !exhausted;
  for (std::size_t i : best) out.witness.push_back(family[i]);
  return out;
}

WellSepResult solve_relations(const FamilyRelations& rel, const std::vector<HyperplaneId>& family,
                              std::uint64_t node_budget) {
  if (rel.pairwise_disjoint()) return chain_solver(rel, family);
  return bnb_solver(rel, family, node_budget);
}

}  // namespace

bool crosses(const CubeComplex& cc, HyperplaneId h1, HyperplaneId h2) {
  if (h1 == h2) fail(Fault::BadParameter, "crossing relation needs two distinct hyperplanes");
  const auto& a = cc.hyperplane(h1);
  const auto& b = cc.hyperplane(h2);
  return a.halfspace_minus.intersects(b.halfspace_minus) &&
         a.halfspace_minus.intersects(b.halfspace_plus) &&
         a.halfspace_plus.intersects(b.halfspace_minus) &&
         a.halfspace_plus.intersects(b.halfspace_plus);
}

bool separates_hyperplanes(const CubeComplex& cc, HyperplaneId h, HyperplaneId h1,
                           HyperplaneId h2) {
  if (h == h1 || h == h2 || h1 == h2)
    fail(Fault::BadParameter, "separation test needs three distinct hyperplanes");
  if (crosses(cc, h, h1) || crosses(cc, h, h2) || crosses(cc, h1, h2))
    fail(Fault::NotDisjoint, "separation test requires pairwise disjoint hyperplanes");
  const auto& hp = cc.hyperplane(h);
  return pair_side(hp, cc.hyperplane(h1)) != pair_side(hp, cc.hyperplane(h2));
}

bool is_facing_triple(const CubeComplex& cc, HyperplaneId h1, HyperplaneId h2, HyperplaneId h3) {
  if (h1 == h2 || h1 == h3 || h2 == h3)
    fail(Fault::BadParameter, "facing triple needs three distinct hyperplanes");
  if (crosses(cc, h1, h2) || crosses(cc, h1, h3) || crosses(cc, h2, h3)) return false;
  auto sep = [&](HyperplaneId m, HyperplaneId a, HyperplaneId b) {
    const auto& hm = cc.hyperplane(m);
    return pair_side(hm, cc.hyperplane(a)) != pair_side(hm, cc.hyperplane(b));
  };
  return !sep(h1, h2, h3) && !sep(h2, h1, h3) && !sep(h3, h1, h2);
}

int k_separation(const CubeComplex& cc, HyperplaneId h1, HyperplaneId h2) {
  if (crosses(cc, h1, h2)) fail(Fault::NotDisjoint, "k-separation requires a disjoint pair");
  int count = 0;
  for (const auto& hp : cc.hyperplanes()) {
    if (hp.id == h1 || hp.id == h2) continue;
    if (crosses(cc, hp.id, h1) && crosses(cc, hp.id, h2)) ++count;
  }
  return count;
}

bool strongly_separated(const CubeComplex& cc, HyperplaneId h1, HyperplaneId h2) {
  cc.hyperplane(h1);
  cc.hyperplane(h2);
  if (h1 == h2) return false;
  if (crosses(cc, h1, h2)) return false;
  return k_separation(cc, h1, h2) == 0;
}

WellSepResult well_separation(const CubeComplex& cc, HyperplaneId h1, HyperplaneId h2,
                              std::uint64_t node_budget) {
  if (crosses(cc, h1, h2)) fail(Fault::NotDisjoint, "well-separation requires a disjoint pair");
  std::vector<HyperplaneId> family;
  for (const auto& hp : cc.hyperplanes()) {
    if (hp.id == h1 || hp.id == h2) continue;
    if (crosses(cc, hp.id, h1) && crosses(cc, hp.id, h2)) family.push_back(hp.id);
  }
  return solve_relations(relations_from_complex(cc, family), family, node_budget);
}

WellSepResult max_no_facing_triple_family(const CubeComplex& cc,
                                          const std::vector<HyperplaneId>& family,
                                          std::uint64_t node_budget) {
  if (family.empty()) fail(Fault::EmptySet, "empty hyperplane family");
  auto rel = relations_from_complex(cc, family);
  // Families without any disjoint pair carry no facing triples at all.
  bool any_disjoint = false;
  for (std::size_t i = 0; i < rel.k && !any_disjoint; ++i)
    for (std::size_t j = i + 1; j < rel.k && !any_disjoint; ++j)
      if (rel.disjoint(i, j)) any_disjoint = true;
  if (!any_disjoint) {
    WellSepResult out;
    out.value = static_cast<int>(family.size());
    out.witness = family;
    return out;
  }
  return solve_relations(rel, family, node_budget);
}

int crossing_chain_bound(const CubeComplex& cc, const std::vector<HyperplaneId>& family) {
  if (family.empty()) return 0;
  auto rel = relations_from_complex(cc, family);
  for (std::size_t a = 0; a < rel.k; ++a)
    for (std::size_t b = a + 1; b < rel.k; ++b)
      for (std::size_t c = b + 1; c < rel.k; ++c)
        if (rel.facing_triple(a, b, c))
          fail(Fault::FacingTriplePresent,
               fmt::format("family contains the facing triple ({},{},{})", family[a], family[b],
                           family[c]));

  const std::size_t k = family.size();
  const std::size_t words = (k + 63) / 64;
  const std::size_t nv = static_cast<std::size_t>(cc.vertex_count());
  std::vector<std::uint64_t> rows(nv * words, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const Bitset& plus = cc.hyperplane(family[i]).halfspace_plus;
    for (std::size_t v = plus.find_first(); v != Bitset::npos; v = plus.find_next(v))
      rows[v * words + i / 64] |= 1ull << (i % 64);
  }
  auto pair_count = [&](std::size_t x, std::size_t y) {
    int c = 0;
    for (std::size_t w = 0; w < words; ++w)
      c += std::popcount(rows[x * words + w] ^ rows[y * words + w]);
    return c;
  };
  int best = 0;
  if (nv <= 2000) {
    for (std::size_t x = 0; x < nv; ++x)
      for (std::size_t y = x + 1; y < nv; ++y) best = std::max(best, pair_count(x, y));
  } else {
    Rng rng(9001);
    for (std::size_t i = 0; i < 20000; ++i)
      best = std::max(best, pair_count(rng.below(nv), rng.below(nv)));
  }
  return best;
}

// ---- SeparationContext ------------------------------------------------------

SeparationContext::SeparationContext(const CubeComplex& cc, std::uint64_t node_budget)
    : cc_(&cc), node_budget_(node_budget), n_(cc.hyperplane_count()) {
  crossing_rows_.assign(n_, Bitset(n_));
  side_.assign(n_ * n_, -1);
  for (std::size_t a = 0; a < n_; ++a) {
    const auto& ha = cc.hyperplanes()[a];
    for (std::size_t b = a + 1; b < n_; ++b) {
      const auto& hb = cc.hyperplanes()[b];
      bool cross = ha.halfspace_minus.intersects(hb.halfspace_minus) &&
                   ha.halfspace_minus.intersects(hb.halfspace_plus) &&
                   ha.halfspace_plus.intersects(hb.halfspace_minus) &&
                   ha.halfspace_plus.intersects(hb.halfspace_plus);
      if (cross) {
        crossing_rows_[a].set(b);
        crossing_rows_[b].set(a);
      } else {
        side_[a * n_ + b] = static_cast<std::int8_t>(pair_side(ha, hb));
        side_[b * n_ + a] = static_cast<std::int8_t>(pair_side(hb, ha));
      }
    }
  }
}

bool SeparationContext::crosses(HyperplaneId a, HyperplaneId b) const {
  return crossing_rows_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b));
}

int SeparationContext::carrier_side(HyperplaneId a, HyperplaneId g) const {
  if (a == g) return -1;
  return side_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(g)];
}

bool SeparationContext::separates(HyperplaneId h, HyperplaneId a, HyperplaneId b) const {
  int sa = carrier_side(h, a), sb = carrier_side(h, b);
  return sa >= 0 && sb >= 0 && sa != sb;
}

std::vector<HyperplaneId> SeparationContext::crossing_set(HyperplaneId h1, HyperplaneId h2) const {
  Bitset both = crossing_rows_[static_cast<std::size_t>(h1)] &
                crossing_rows_[static_cast<std::size_t>(h2)];
  std::vector<HyperplaneId> out;
  for (std::size_t i = both.find_first(); i != Bitset::npos; i = both.find_next(i))
    out.push_back(static_cast<HyperplaneId>(i));
  return out;
}

int SeparationContext::k_separation(HyperplaneId h1, HyperplaneId h2) const {
  if (crosses(h1, h2)) fail(Fault::NotDisjoint, "k-separation requires a disjoint pair");
  return static_cast<int>((crossing_rows_[static_cast<std::size_t>(h1)] &
                           crossing_rows_[static_cast<std::size_t>(h2)])
                              .count());
}

bool SeparationContext::strongly_separated(HyperplaneId h1, HyperplaneId h2) const {
  if (h1 == h2 || crosses(h1, h2)) return false;
  return !crossing_rows_[static_cast<std::size_t>(h1)].intersects(
      crossing_rows_[static_cast<std::size_t>(h2)]);
}

WellSepResult SeparationContext::solve_family(const std::vector<HyperplaneId>& family) const {
  FamilyRelations rel;
  rel.k = family.size();
  rel.side.assign(rel.k * rel.k, -1);
  for (std::size_t m = 0; m < rel.k; ++m)
    for (std::size_t i = 0; i < rel.k; ++i)
      if (i != m) rel.side[m * rel.k + i] = static_cast<std::int8_t>(carrier_side(family[m], family[i]));
  return solve_relations(rel, family, node_budget_);
}

WellSepResult SeparationContext::well_separation(HyperplaneId h1, HyperplaneId h2) const {
  if (crosses(h1, h2)) fail(Fault::NotDisjoint, "well-separation requires a disjoint pair");
  std::uint64_t key = h1 < h2
                          ? (static_cast<std::uint64_t>(h1) << 32) | static_cast<std::uint32_t>(h2)
                          : (static_cast<std::uint64_t>(h2) << 32) | static_cast<std::uint32_t>(h1);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = pair_memo_.find(key);
    if (it != pair_memo_.end()) return it->second;
  }
  auto family = crossing_set(h1, h2);
  // Distinct pairs often share one crossing set; memoize on the set too.
  std::uint64_t set_key = 0x9e3779b97f4a7c15ull;
  for (HyperplaneId h : family) {
    set_key ^= static_cast<std::uint64_t>(h) + 0x9e3779b97f4a7c15ull + (set_key << 6) +
               (set_key >> 2);
    set_key *= 0xff51afd7ed558ccdull;
  }
  WellSepResult result;
  bool have = false;
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = set_memo_.find(set_key);
    if (it != set_memo_.end()) {
      result = it->second;
      have = true;
    }
  }
  if (!have) {
    result = solve_family(family);
    std::lock_guard<std::mutex> lock(memo_mutex_);
    set_memo_.emplace(set_key, result);
  }
  std::lock_guard<std::mutex> lock(memo_mutex_);
  pair_memo_.emplace(key, result);
  return result;
}

SeparationReport SeparationContext::report(HyperplaneId h1, HyperplaneId h2) const {
  SeparationReport rep;
  rep.h1 = h1;
  rep.h2 = h2;
  rep.strongly_separated = strongly_separated(h1, h2);
  rep.crossing_count = k_separation(h1, h2);
  rep.well_separation = well_separation(h1, h2);
  return rep;
}

namespace detail {

WellSepResult max_family_chain(const SeparationContext& ctx,
                               const std::vector<HyperplaneId>& family) {
  FamilyRelations rel;
  rel.k = family.size();
  rel.side.assign(rel.k * rel.k, -1);
  for (std::size_t m = 0; m < rel.k; ++m)
    for (std::size_t i = 0; i < rel.k; ++i)
      if (i != m) rel.side[m * rel.k + i] = static_cast<std::int8_t>(ctx.carrier_side(family[m], family[i]));
  if (!rel.pairwise_disjoint())
    fail(Fault::NotDisjoint, "chain search requires a pairwise disjoint family");
  return chain_solver(rel, family);
}

WellSepResult max_family_branch_and_bound(const SeparationContext& ctx,
                                          const std::vector<HyperplaneId>& family,
                                          std::uint64_t node_budget) {
  FamilyRelations rel;
  rel.k = family.size();
  rel.side.assign(rel.k * rel.k, -1);
  for (std::size_t m = 0; m < rel.k; ++m)
    for (std::size_t i = 0; i < rel.k; ++i)
      if (i != m) rel.side[m * rel.k + i] = static_cast<std::int8_t>(ctx.carrier_side(family[m], family[i]));
  return bnb_solver(rel, family, node_budget);
}

}  // namespace detail

}  // namespace ccx
