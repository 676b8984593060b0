#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qpdom/tree.hpp"

namespace qpdom {

inline constexpr int kDefaultOracleCap = 20;

struct OracleResult {
  std::uint64_t value = 0;
  std::vector<VertexSet> witnesses;  // ascending bitmask order
};

// True iff every vertex outside s has at least one neighbor in s.
bool is_dominating(const Tree& t, const VertexSet& s);
// True iff dominating and every vertex outside s has at most k neighbors in s.
bool is_k_quasiperfect(const Tree& t, const VertexSet& s, int k);

struct OracleOptions {
  bool collect_all = false;
  int cap = kDefaultOracleCap;  // guardrail on n, at most 62
  std::size_t max_witnesses = static_cast<std::size_t>(-1);
};

// Exhaustive minimum search over the definition: subsets are enumerated in
// order of increasing cardinality and the first feasible size wins. The plain
// domination number is found first so the k-constrained sweep can start there.
OracleResult brute_min(const Tree& t, int k, const OracleOptions& opt = {});

}  // namespace qpdom
