#include "qpdom/tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qpdom {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadVertexId: return "BadVertexId";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::DisconnectedInput: return "DisconnectedInput";
    case Errc::TooSmall: return "TooSmall";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadK: return "BadK";
    case Errc::BadParam: return "BadParam";
    case Errc::NotDominating: return "NotDominating";
    case Errc::NotGammaCode: return "NotGammaCode";
    case Errc::NotExtremal: return "NotExtremal";
    case Errc::ConstructionUnverified: return "ConstructionUnverified";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Tree Tree::from_edge_list(const std::vector<std::pair<int, int>>& edges) {
  int n = 1;
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1) fail(Errc::BadVertexId, "vertex ids are 1-indexed");
    n = std::max({n, u, v});
  }
  Tree t;
  t.n = n;
  t.adj.assign(n + 1, {});
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u == v) fail(Errc::SelfLoop, "edge " + std::to_string(u) + "-" + std::to_string(v));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      fail(Errc::DuplicateEdge, "edge " + std::to_string(u) + "-" + std::to_string(v));
    t.adj[u].push_back(v);
    t.adj[v].push_back(u);
  }

  // BFS from vertex 1: a repeated visit means a cycle, an unreached vertex a
  // disconnected input.
  std::vector<int> seen_from(n + 1, 0), queue;
  queue.reserve(n);
  queue.push_back(1);
  seen_from[1] = 1;
  std::vector<int> parent(n + 1, 0);
  int reached = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int u : t.adj[v]) {
      if (u == parent[v]) {
        parent[v] = 0;  // consume one back-edge to the BFS parent
        continue;
      }
      if (seen_from[u]) fail(Errc::CycleDetected, "cycle through vertex " + std::to_string(u));
      seen_from[u] = 1;
      parent[u] = v;
      ++reached;
      queue.push_back(u);
    }
  }
  if (reached < n) fail(Errc::DisconnectedInput, std::to_string(n - reached) + " vertices unreachable from 1");

  for (int v = 1; v <= n; ++v) std::sort(t.adj[v].begin(), t.adj[v].end());
  return t;
}

int Tree::max_degree() const {
  int d = 0;
  for (int v = 1; v <= n; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Tree::edge_list() const {
  std::vector<std::pair<int, int>> es;
  es.reserve(n - 1);
  for (int v = 1; v <= n; ++v)
    for (int u : adj[v])
      if (v < u) es.emplace_back(v, u);
  std::sort(es.begin(), es.end());
  return es;
}

Tree RootedTree::to_tree() const {
  Tree t;
  t.n = n;
  t.adj.assign(n + 1, {});
  for (int v = 2; v <= n; ++v) {
    t.adj[v].push_back(parent[v]);
    t.adj[parent[v]].push_back(v);
  }
  for (int v = 1; v <= n; ++v) std::sort(t.adj[v].begin(), t.adj[v].end());
  return t;
}

RootedTree RootedTree::from_parents(const std::vector<int>& parents) {
  RootedTree t;
  t.n = static_cast<int>(parents.size()) + 1;
  t.parent.assign(t.n + 1, 0);
  for (int v = 2; v <= t.n; ++v) {
    int p = parents[v - 2];
    if (p < 1 || p >= v)
      fail(Errc::BadVertexId, "parent of " + std::to_string(v) + " must be in 1.." + std::to_string(v - 1));
    t.parent[v] = p;
  }
  return t;
}

Rooting root_and_renumber(const Tree& t, int root) {
  if (root < 1 || root > t.n) fail(Errc::BadVertexId, "root " + std::to_string(root));
  Rooting r;
  r.tree.n = t.n;
  r.tree.parent.assign(t.n + 1, 0);
  r.to_new.assign(t.n + 1, 0);
  r.to_old.assign(t.n + 1, 0);

  std::vector<int> queue;
  queue.reserve(t.n);
  queue.push_back(root);
  r.to_new[root] = 1;
  r.to_old[1] = root;
  int next = 2;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int u : t.adj[v]) {  // adjacency sorted: ties break by ascending id
      if (r.to_new[u]) continue;
      r.to_new[u] = next;
      r.to_old[next] = u;
      r.tree.parent[next] = r.to_new[v];
      ++next;
      queue.push_back(u);
    }
  }
  if (next != t.n + 1) fail(Errc::Internal, "renumbering did not reach all vertices");
  return r;
}

RootedTree compose(const RootedTree& t1, const RootedTree& t2) {
  RootedTree t;
  t.n = t1.n + t2.n;
  t.parent.assign(t.n + 1, 0);
  for (int v = 2; v <= t1.n; ++v) t.parent[v] = t1.parent[v];
  t.parent[t1.n + 1] = 1;  // new edge r1-r2
  for (int v = 2; v <= t2.n; ++v) t.parent[t1.n + v] = t1.n + t2.parent[v];
  return t;
}

VertexSet leaves(const Tree& t) {
  if (t.n == 1) return {1};
  VertexSet out;
  for (int v = 1; v <= t.n; ++v)
    if (t.degree(v) == 1) out.push_back(v);
  return out;
}

VertexSet support_vertices(const Tree& t) {
  if (t.n < 2) fail(Errc::TooSmall, "support vertices need n >= 2");
  VertexSet out;
  for (int v = 1; v <= t.n; ++v) {
    for (int u : t.adj[v])
      if (t.degree(u) == 1) {
        out.push_back(v);
        break;
      }
  }
  return out;
}

VertexSet strong_support_vertices(const Tree& t) {
  if (t.n < 2) fail(Errc::TooSmall, "support vertices need n >= 2");
  VertexSet out;
  for (int v = 1; v <= t.n; ++v) {
    int leaf_neighbors = 0;
    for (int u : t.adj[v]) leaf_neighbors += t.degree(u) == 1;
    if (leaf_neighbors >= 2) out.push_back(v);
  }
  return out;
}

bool is_caterpillar(const Tree& t) {
  // Interior vertices of a tree always induce a subtree, so it suffices to
  // check that no interior vertex has three interior neighbors.
  for (int v = 1; v <= t.n; ++v) {
    if (t.degree(v) <= 1) continue;
    int interior_neighbors = 0;
    for (int u : t.adj[v]) interior_neighbors += t.degree(u) > 1;
    if (interior_neighbors > 2) return false;
  }
  return true;
}

std::vector<VertexSet> induced_components(const Tree& t, const VertexSet& s) {
  VertexSet norm = normalized_vertex_set(s, t.n);
  std::vector<char> in_s(t.n + 1, 0), done(t.n + 1, 0);
  for (int v : norm) in_s[v] = 1;

  std::vector<VertexSet> comps;
  for (int start : norm) {
    if (done[start]) continue;
    VertexSet comp;
    std::vector<int> stack{start};
    done[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : t.adj[v])
        if (in_s[u] && !done[u]) {
          done[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

VertexSet normalized_vertex_set(std::vector<int> vs, int n) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (int v : vs)
    if (v < 1 || v > n) fail(Errc::BadVertexId, "vertex " + std::to_string(v) + " not in 1.." + std::to_string(n));
  return vs;
}

bool vertex_set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

}  // namespace qpdom
