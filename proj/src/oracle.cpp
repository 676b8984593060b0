#include "qpdom/oracle.hpp"

#include <bit>

namespace qpdom {
namespace {

std::vector<std::uint64_t> neighborhood_masks(const Tree& t) {
  std::vector<std::uint64_t> adj(t.n + 1, 0);
  for (int v = 1; v <= t.n; ++v)
    for (int u : t.adj[v]) adj[v] |= std::uint64_t{1} << (u - 1);
  return adj;
}

// Visits every n-bit mask of popcount c in ascending numeric order until fn
// returns true; returns whether fn stopped the scan.
template <typename Fn>
bool scan_subsets_of_size(int n, int c, Fn&& fn) {
  if (c < 1 || c > n) return false;
  std::uint64_t mask = (std::uint64_t{1} << c) - 1;
  std::uint64_t limit = (std::uint64_t{1} << n) - 1;
  while (true) {
    if (fn(mask)) return true;
    if (c == n) return false;
    std::uint64_t lo = mask & (~mask + 1);
    std::uint64_t ripple = mask + lo;
    if (ripple > limit) return false;
    mask = ripple | (((mask ^ ripple) >> 2) / lo);
  }
}

bool mask_dominating(const std::vector<std::uint64_t>& adj, int n, std::uint64_t s) {
  for (int v = 1; v <= n; ++v) {
    if (s >> (v - 1) & 1) continue;
    if ((adj[v] & s) == 0) return false;
  }
  return true;
}

bool mask_quasiperfect(const std::vector<std::uint64_t>& adj, int n, std::uint64_t s, int k) {
  for (int v = 1; v <= n; ++v) {
    if (s >> (v - 1) & 1) continue;
    int cnt = std::popcount(adj[v] & s);
    if (cnt < 1 || cnt > k) return false;
  }
  return true;
}

VertexSet mask_to_set(std::uint64_t s, int n) {
  VertexSet out;
  for (int v = 1; v <= n; ++v)
    if (s >> (v - 1) & 1) out.push_back(v);
  return out;
}

}  // namespace

bool is_dominating(const Tree& t, const VertexSet& s) {
  VertexSet norm = normalized_vertex_set(s, t.n);
  std::vector<char> in_s(t.n + 1, 0);
  for (int v : norm) in_s[v] = 1;
  for (int v = 1; v <= t.n; ++v) {
    if (in_s[v]) continue;
    bool covered = false;
    for (int u : t.adj[v])
      if (in_s[u]) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

bool is_k_quasiperfect(const Tree& t, const VertexSet& s, int k) {
  if (k < 1) fail(Errc::BadK, "k must be >= 1");
  VertexSet norm = normalized_vertex_set(s, t.n);
  std::vector<char> in_s(t.n + 1, 0);
  for (int v : norm) in_s[v] = 1;
  for (int v = 1; v <= t.n; ++v) {
    if (in_s[v]) continue;
    int cnt = 0;
    for (int u : t.adj[v]) cnt += in_s[u];
    if (cnt < 1 || cnt > k) return false;
  }
  return true;
}

OracleResult brute_min(const Tree& t, int k, const OracleOptions& opt) {
  if (k < 1) fail(Errc::BadK, "k must be >= 1");
  if (opt.cap < 1 || opt.cap > 62) fail(Errc::BadParam, "oracle cap must be in 1..62");
  if (t.n > opt.cap)
    fail(Errc::TooLarge, "n = " + std::to_string(t.n) + " exceeds oracle cap " + std::to_string(opt.cap));

  const int n = t.n;
  const auto adj = neighborhood_masks(t);

  // Plain domination number first; the quasiperfect optimum can only be
  // larger, so the constrained sweep below starts at gamma.
  int gamma = 0;
  for (int c = 1; c <= n && gamma == 0; ++c)
    if (scan_subsets_of_size(n, c, [&](std::uint64_t s) { return mask_dominating(adj, n, s); }))
      gamma = c;
  if (gamma == 0) fail(Errc::Internal, "no dominating set found");

  const bool unconstrained = k >= t.max_degree();
  auto feasible = [&](std::uint64_t s) {
    return unconstrained ? mask_dominating(adj, n, s) : mask_quasiperfect(adj, n, s, k);
  };

  int best = 0;
  std::uint64_t first_witness = 0;
  for (int c = gamma; c <= n && best == 0; ++c)
    if (scan_subsets_of_size(n, c, [&](std::uint64_t s) {
          if (!feasible(s)) return false;
          first_witness = s;
          return true;
        }))
      best = c;
  if (best == 0) fail(Errc::Internal, "no quasiperfect dominating set found");

  OracleResult res;
  res.value = static_cast<std::uint64_t>(best);
  if (opt.collect_all) {
    scan_subsets_of_size(n, best, [&](std::uint64_t s) {
      if (res.witnesses.size() >= opt.max_witnesses) return true;
      if (feasible(s)) res.witnesses.push_back(mask_to_set(s, n));
      return false;
    });
  } else {
    res.witnesses.push_back(mask_to_set(first_witness, n));
  }
  return res;
}

}  // namespace qpdom
