#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qpdom/extnat.hpp"
#include "qpdom/tree.hpp"

namespace qpdom {

// QP-chain of a tree: values[k-1] is the minimum size of a k-quasiperfect
// dominating set for k = 1..delta, non-increasing, with values[delta-1] equal
// to the domination number.
struct ChainReport {
  int delta = 0;
  std::uint64_t gamma = 0;
  std::vector<std::uint64_t> values;
  std::optional<std::vector<VertexSet>> codes;
};

// Verbatim transcription of the published pseudocode: one (b, z) pair per
// vertex, folding vertex i into Parent[i] for i = n..2. Kept as an exact
// reference; see qp_number_frontier for the variant used as ground truth.
std::uint64_t qp_number_paper(const RootedTree& t, int k);

// Same contract, but tracks the minimum type-B cardinality separately for
// every neighbor count z in 1..k-1 (plus the type-A slot at z = k), so no
// Pareto-incomparable candidate is discarded. O(n * min(k, Delta)) time.
std::uint64_t qp_number_frontier(const RootedTree& t, int k);

// Minimum k-quasiperfect dominating set, reconstructed from the frontier DP
// with deterministic tie-breaking. In the rooted tree's vertex ids.
VertexSet qp_code(const RootedTree& t, int k);

std::uint64_t domination_number(const RootedTree& t);
ChainReport qp_chain(const RootedTree& t, bool with_codes = false);

// Conveniences that root at vertex 1 and map results back to tree ids.
std::uint64_t qp_number(const Tree& t, int k);
std::uint64_t domination_number(const Tree& t);
VertexSet qp_code(const Tree& t, int k);
ChainReport qp_chain(const Tree& t, bool with_codes = false);

namespace detail {
// Frontier table DP without the stabilisation shortcut (k still capped at
// the maximum degree); lets tests exercise the table path at every k.
std::uint64_t qp_number_frontier_tables(const RootedTree& t, int k);
}

}  // namespace qpdom
