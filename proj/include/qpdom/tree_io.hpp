#pragma once

#include <string>

#include "qpdom/tree.hpp"

namespace qpdom {

enum class TreeFormat { Auto, ParentArray, EdgeList };

// A parsed input tree together with the rooting used to obtain a parent
// array. Parent-array inputs keep their numbering (identity mapping);
// edge-list inputs are rooted at vertex 1 and renumbered.
struct ParsedTree {
  Tree tree;           // in original vertex ids
  RootedTree rooted;   // renumbered, parents before children
  std::vector<int> to_new;  // original id -> rooted id
  std::vector<int> to_old;  // rooted id -> original id
  TreeFormat detected = TreeFormat::Auto;
};

// Text formats. Lines starting with '#' are comments. Parent-array: first
// token n, then n-1 parents for vertices 2..n. Edge-list: "u v" pairs.
ParsedTree parse_tree_text(const std::string& text, TreeFormat fmt = TreeFormat::Auto);
ParsedTree load_tree_file(const std::string& path, TreeFormat fmt = TreeFormat::Auto);

std::string to_parent_array_text(const RootedTree& t);
std::string to_edge_list_text(const Tree& t);

// {"n": int, "edges": [[u,v], ...]} with u < v, edges sorted.
std::string to_canonical_json(const Tree& t);
Tree tree_from_canonical_json(const std::string& json_text);

}  // namespace qpdom
