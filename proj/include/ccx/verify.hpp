#pragma once

#include "ccx/corpus.hpp"

#include <string>
#include <vector>

namespace ccx {

struct VerifyOptions {
  std::size_t exhaustive_limit = 2000;
  std::size_t sampled_pairs = 500;
  std::size_t sampled_triples = 4000;
  std::size_t sampled_sets = 64;
  std::uint64_t seed = 9001;
};

struct VerifyLine {
  std::string family;
  bool pass;
  std::string detail;  // counterexample on failure
};

/// Invariant suites of every module, one line per family.
std::vector<VerifyLine> verify_complex(const NamedComplex& nc, const VerifyOptions& options = {});

}  // namespace ccx
