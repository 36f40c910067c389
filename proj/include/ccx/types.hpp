#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccx {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using HyperplaneId = std::int32_t;

/// Vertex-indexed bitmask (halfspaces, carriers, convex sets).
using Bitset = boost::dynamic_bitset<std::uint64_t>;

enum class Fault {
  DisconnectedGraph,
  DuplicateEdge,
  InvalidEdge,
  UnknownVertex,
  UnknownHyperplane,
  MedianViolation,
  EmptySet,
  NotConvex,
  NotDisjoint,
  NotCrossingFree,
  FacingTriplePresent,
  NotGeodesic,
  BadParameter,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Fault fault, const std::string& what) : std::runtime_error(what), fault_(fault) {}
  Fault fault() const { return fault_; }

 private:
  Fault fault_;
};

[[noreturn]] inline void fail(Fault fault, const std::string& what) { throw Error(fault, what); }

/// Deterministic RNG wrapper. std::uniform_int_distribution is not
/// reproducible across standard libraries, so bounded draws are done by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [0, n). n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

 private:
  std::uint64_t state_;
};

/// k distinct indices from [0, n), sorted. k >= n returns all of them.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, Rng& rng);

}  // namespace ccx
