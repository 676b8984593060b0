#include "qpdom/tree_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qpdom {
namespace {

std::vector<long long> tokenize(const std::string& text) {
  std::vector<long long> tokens;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    while (ls >> word) {
      try {
        std::size_t pos = 0;
        long long v = std::stoll(word, &pos);
        if (pos != word.size()) fail(Errc::ParseError, "not an integer: '" + word + "'");
        tokens.push_back(v);
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        fail(Errc::ParseError, "not an integer: '" + word + "'");
      }
    }
  }
  return tokens;
}

bool looks_like_parent_array(const std::vector<long long>& tok) {
  if (tok.empty()) return false;
  long long n = tok[0];
  if (n < 1 || static_cast<long long>(tok.size()) != n) return false;
  for (long long i = 2; i <= n; ++i) {
    long long p = tok[i - 1];
    if (p < 1 || p >= i) return false;
  }
  return true;
}

ParsedTree from_parent_tokens(const std::vector<long long>& tok) {
  long long n = tok[0];
  std::vector<int> parents(tok.begin() + 1, tok.end());
  ParsedTree p;
  p.rooted = RootedTree::from_parents(parents);
  if (p.rooted.n != n) fail(Errc::ParseError, "parent count does not match n");
  p.tree = p.rooted.to_tree();
  p.to_new.resize(n + 1);
  p.to_old.resize(n + 1);
  for (int v = 1; v <= n; ++v) p.to_new[v] = p.to_old[v] = v;
  p.detected = TreeFormat::ParentArray;
  return p;
}

ParsedTree from_edge_tokens(const std::vector<long long>& tok) {
  if (tok.size() % 2 != 0) fail(Errc::ParseError, "edge list needs an even number of integers");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(tok.size() / 2);
  for (std::size_t i = 0; i < tok.size(); i += 2) {
    if (tok[i] < 1 || tok[i + 1] < 1) fail(Errc::ParseError, "vertex ids are positive");
    edges.emplace_back(static_cast<int>(tok[i]), static_cast<int>(tok[i + 1]));
  }
  ParsedTree p;
  p.tree = Tree::from_edge_list(edges);
  Rooting r = root_and_renumber(p.tree, 1);
  p.rooted = std::move(r.tree);
  p.to_new = std::move(r.to_new);
  p.to_old = std::move(r.to_old);
  p.detected = TreeFormat::EdgeList;
  return p;
}

}  // namespace

ParsedTree parse_tree_text(const std::string& text, TreeFormat fmt) {
  std::vector<long long> tok = tokenize(text);
  if (tok.empty()) fail(Errc::ParseError, "empty input");
  switch (fmt) {
    case TreeFormat::ParentArray:
      if (!looks_like_parent_array(tok)) fail(Errc::ParseError, "invalid parent array");
      return from_parent_tokens(tok);
    case TreeFormat::EdgeList:
      return from_edge_tokens(tok);
    case TreeFormat::Auto:
      if (looks_like_parent_array(tok)) return from_parent_tokens(tok);
      return from_edge_tokens(tok);
  }
  fail(Errc::Internal, "unreachable");
}

ParsedTree load_tree_file(const std::string& path, TreeFormat fmt) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_tree_text(buf.str(), fmt);
}

std::string to_parent_array_text(const RootedTree& t) {
  std::ostringstream out;
  out << t.n << "\n";
  for (int v = 2; v <= t.n; ++v) out << t.parent[v] << (v == t.n ? "" : " ");
  out << "\n";
  return out.str();
}

std::string to_edge_list_text(const Tree& t) {
  std::ostringstream out;
  for (auto [u, v] : t.edge_list()) out << u << " " << v << "\n";
  return out.str();
}

std::string to_canonical_json(const Tree& t) {
  nlohmann::json j;
  j["n"] = t.n;
  auto edges = nlohmann::json::array();
  for (auto [u, v] : t.edge_list()) edges.push_back({u, v});
  j["edges"] = edges;
  return j.dump();
}

Tree tree_from_canonical_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, e.what());
  }
  if (!j.contains("n") || !j.contains("edges")) fail(Errc::ParseError, "expected keys n, edges");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  Tree t = Tree::from_edge_list(edges);
  if (t.n != j["n"].get<int>()) fail(Errc::ParseError, "n does not match edges");
  return t;
}

}  // namespace qpdom
