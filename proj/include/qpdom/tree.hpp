#pragma once

#include <utility>
#include <vector>

#include "qpdom/errors.hpp"

namespace qpdom {

// Sorted, duplicate-free list of 1-indexed vertex ids.
using VertexSet = std::vector<int>;

// Undirected tree on vertices 1..n. Immutable after construction; all
// operations below are pure functions.
struct Tree {
  int n = 1;
  std::vector<std::vector<int>> adj;  // 1-indexed, adj[0] unused, lists sorted

  Tree() : adj(2) {}

  // Validates connectivity and acyclicity; n is the largest id mentioned.
  // An empty edge list yields the one-vertex tree.
  static Tree from_edge_list(const std::vector<std::pair<int, int>>& edges);

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int max_degree() const;
  std::vector<std::pair<int, int>> edge_list() const;  // u < v, sorted
};

// Tree encoded as a parent array with parents numbered before children:
// parent[1] == 0 (root marker) and 1 <= parent[i] < i for i >= 2.
struct RootedTree {
  int n = 1;
  std::vector<int> parent;  // size n + 1, parent[0] unused

  RootedTree() : parent{0, 0} {}

  Tree to_tree() const;
  // parents.size() == n - 1, parents[j] is the parent of vertex j + 2.
  static RootedTree from_parents(const std::vector<int>& parents);
};

struct Rooting {
  RootedTree tree;
  std::vector<int> to_new;  // old id -> new id
  std::vector<int> to_old;  // new id -> old id
};

// Breadth-first renumbering from `root`, ties by ascending original id.
Rooting root_and_renumber(const Tree& t, int root);

// Joins t2's root to t1's root by a new edge; t1's root is the result's root.
// t2's vertices are shifted to n1+1..n1+n2 preserving relative order.
RootedTree compose(const RootedTree& t1, const RootedTree& t2);

// Degree-1 vertices; the single vertex of K1 counts as a leaf.
VertexSet leaves(const Tree& t);
// Vertices with at least one (resp. two) leaf neighbors. Require n >= 2.
VertexSet support_vertices(const Tree& t);
VertexSet strong_support_vertices(const Tree& t);
// True iff removing all leaves yields a path (or at most one vertex).
bool is_caterpillar(const Tree& t);
// Connected components of the subgraph induced by s, each sorted, ordered by
// smallest member.
std::vector<VertexSet> induced_components(const Tree& t, const VertexSet& s);

// Sorts, deduplicates and range-checks a vertex list against 1..n.
VertexSet normalized_vertex_set(std::vector<int> vs, int n);
bool vertex_set_contains(const VertexSet& s, int v);

}  // namespace qpdom
