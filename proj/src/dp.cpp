#include "qpdom/dp.hpp"

#include <algorithm>

namespace qpdom {
namespace {

const ExtNat kInf = ExtNat::infinity();

std::vector<int> child_counts(const RootedTree& t) {
  std::vector<int> nchild(t.n + 1, 0);
  for (int v = 2; v <= t.n; ++v) ++nchild[t.parent[v]];
  return nchild;
}

int rooted_max_degree(const RootedTree& t) {
  std::vector<int> nchild = child_counts(t);
  int d = 0;
  for (int v = 1; v <= t.n; ++v) d = std::max(d, nchild[v] + (v != 1 ? 1 : 0));
  return d;
}

// Minimum dominating set size, the k-unconstrained specialisation of the
// fold below: states are (root in S) / (root out, dominated) / (root out,
// undominated, rest dominated).
std::uint64_t plain_domination(const RootedTree& t) {
  const int n = t.n;
  if (n == 1) return 1;
  std::vector<ExtNat> in(n + 1, ExtNat(1)), out(n + 1, kInf), open(n + 1, ExtNat(0));
  for (int i = n; i >= 2; --i) {
    int j = t.parent[i];
    ExtNat child_best = min(out[i], in[i]);
    ExtNat nin = in[j] + min(child_best, open[i]);
    ExtNat nout = min(out[j] + child_best, open[j] + in[i]);
    ExtNat nopen = open[j] + out[i];
    in[j] = nin;
    out[j] = nout;
    open[j] = nopen;
  }
  return min(in[1], out[1]).value();
}

// DP slot of a vertex: root outside the set with exactly k set-neighbors (A),
// outside with z in 1..k-1 set-neighbors (B), inside the set (C), or outside
// and undominated with the rest of the subtree settled (D).
enum SlotKind : std::uint32_t { kSlotA = 0, kSlotB = 1, kSlotC = 2, kSlotD = 3 };

constexpr std::uint32_t pack_slot(SlotKind kind, int z = 0) {
  return (kind << 30) | static_cast<std::uint32_t>(z);
}
constexpr SlotKind slot_kind(std::uint32_t s) { return static_cast<SlotKind>(s >> 30); }
constexpr int slot_z(std::uint32_t s) { return static_cast<int>(s & 0x3fffffffu); }

struct Tag {
  std::uint32_t prev = pack_slot(kSlotA, 0x3fffffff);  // sentinel, never read
  std::uint32_t child = 0;
};

// Frontier DP engine. Record=true keeps, for every cell written by a fold,
// which (previous parent slot, child slot) pair achieved the minimum, so a
// witness code can be rebuilt by unwinding the folds in reverse.
template <bool Record>
class FrontierDP {
 public:
  FrontierDP(const RootedTree& t, int k) : t_(t), n_(t.n), k_(k) {
    nchild_ = child_counts(t);
    a_.assign(n_ + 1, kInf);
    c_.assign(n_ + 1, ExtNat(1));
    d_.assign(n_ + 1, ExtNat(0));
    bw_.assign(n_ + 1, 0);
    boff_.assign(n_ + 1, 0);
    std::size_t total = 0;
    for (int v = 1; v <= n_; ++v) {
      bw_[v] = std::min(k_ - 1, nchild_[v]);
      boff_[v] = total;
      total += static_cast<std::size_t>(bw_[v]);
    }
    btab_.assign(total, kInf);
    if constexpr (Record) {
      tag_off_.assign(n_ + 1, 0);
      std::size_t tags = 0;
      for (int i = 2; i <= n_; ++i) {
        tag_off_[i] = tags;
        tags += static_cast<std::size_t>(bw_[t_.parent[i]]) + 3;
      }
      tags_.assign(tags, Tag{});
    }
    run();
  }

  std::uint64_t value() const {
    ExtNat best = root_best().first;
    if (!best.finite()) fail(Errc::Internal, "root DP value is infinite");
    return best.value();
  }

  VertexSet reconstruct() const;

 private:
  ExtNat b(int v, int z) const { return z >= 1 && z <= bw_[v] ? btab_[boff_[v] + z - 1] : kInf; }
  ExtNat& bref(int v, int z) { return btab_[boff_[v] + z - 1]; }

  // Root argmin in fixed order: A, then B by ascending z, then C.
  std::pair<ExtNat, std::uint32_t> root_best() const {
    ExtNat best = a_[1];
    std::uint32_t slot = pack_slot(kSlotA);
    for (int z = 1; z <= bw_[1]; ++z)
      if (b(1, z) < best) {
        best = b(1, z);
        slot = pack_slot(kSlotB, z);
      }
    if (c_[1] < best) {
      best = c_[1];
      slot = pack_slot(kSlotC);
    }
    return {best, slot};
  }

  void run() {
    for (int i = n_; i >= 2; --i) fold(i, t_.parent[i]);
  }

  void fold(int i, int j);

  const RootedTree& t_;
  int n_, k_;
  std::vector<int> nchild_, bw_;
  std::vector<std::size_t> boff_;
  std::vector<ExtNat> a_, c_, d_, btab_;
  std::vector<Tag> tags_;
  std::vector<std::size_t> tag_off_;
};

template <bool Record>
void FrontierDP<Record>::fold(int i, int j) {
  // Child summaries. Candidate order everywhere follows the listing in the
  // composition case analysis, with strict improvement only, so ties resolve
  // deterministically.
  ExtNat child_ab = a_[i];
  std::uint32_t child_ab_slot = pack_slot(kSlotA);
  for (int z = 1; z <= bw_[i]; ++z)
    if (b(i, z) < child_ab) {
      child_ab = b(i, z);
      child_ab_slot = pack_slot(kSlotB, z);
    }

  ExtNat child_bcd = kInf;
  std::uint32_t child_bcd_slot = pack_slot(kSlotB, 0);
  for (int z = 1; z <= bw_[i]; ++z)
    if (b(i, z) < child_bcd) {
      child_bcd = b(i, z);
      child_bcd_slot = pack_slot(kSlotB, z);
    }
  if (c_[i] < child_bcd) {
    child_bcd = c_[i];
    child_bcd_slot = pack_slot(kSlotC);
  }
  if (d_[i] < child_bcd) {
    child_bcd = d_[i];
    child_bcd_slot = pack_slot(kSlotD);
  }

  const ExtNat aj = a_[j], cj = c_[j], dj = d_[j], ci = c_[i];

  Tag* tags = nullptr;
  if constexpr (Record) tags = tags_.data() + tag_off_[i];
  const int w = bw_[j];

  // A: stays A under an A/B child, or enters from one set-neighbor short of
  // k plus a child rooted in the set. For k = 1 that predecessor is D.
  ExtNat na = aj + child_ab;
  Tag ta{pack_slot(kSlotA), child_ab_slot};
  {
    ExtNat from_full = (k_ >= 2 ? b(j, k_ - 1) : dj) + ci;
    if (from_full < na) {
      na = from_full;
      ta = {k_ >= 2 ? pack_slot(kSlotB, k_ - 1) : pack_slot(kSlotD), pack_slot(kSlotC)};
    }
  }

  // B table in place, descending z so b(j, z-1) is still the pre-fold value.
  for (int z = w; z >= 1; --z) {
    ExtNat nb = b(j, z) + child_ab;
    Tag tb{pack_slot(kSlotB, z), child_ab_slot};
    if (z >= 2) {
      ExtNat inc = b(j, z - 1) + ci;
      if (inc < nb) {
        nb = inc;
        tb = {pack_slot(kSlotB, z - 1), pack_slot(kSlotC)};
      }
    } else {
      ExtNat first = dj + ci;
      if (first < nb) {
        nb = first;
        tb = {pack_slot(kSlotD), pack_slot(kSlotC)};
      }
    }
    bref(j, z) = nb;
    if constexpr (Record) tags[z] = tb;
  }

  ExtNat nc = cj + child_bcd;
  ExtNat nd = dj + child_ab;

  a_[j] = na;
  c_[j] = nc;
  d_[j] = nd;
  if constexpr (Record) {
    tags[0] = ta;
    tags[w + 1] = {pack_slot(kSlotC), child_bcd_slot};
    tags[w + 2] = {pack_slot(kSlotD), child_ab_slot};
  }
}

template <bool Record>
VertexSet FrontierDP<Record>::reconstruct() const {
  static_assert(Record, "reconstruct needs a recorded run");
  std::vector<std::uint32_t> slot(n_ + 1, 0);
  auto [best, root_slot] = root_best();
  if (!best.finite()) fail(Errc::Internal, "root DP value is infinite");
  slot[1] = root_slot;

  auto cell_index = [&](int v, std::uint32_t s) -> std::size_t {
    switch (slot_kind(s)) {
      case kSlotA: return 0;
      case kSlotB: return static_cast<std::size_t>(slot_z(s));
      case kSlotC: return static_cast<std::size_t>(bw_[v]) + 1;
      case kSlotD: return static_cast<std::size_t>(bw_[v]) + 2;
    }
    fail(Errc::Internal, "bad slot");
  };

  // Folds ran i = n..2; unwind in exact reverse order. Each unwind pops the
  // most recent fold applied to parent[i].
  for (int i = 2; i <= n_; ++i) {
    int j = t_.parent[i];
    const Tag& tag = tags_[tag_off_[i] + cell_index(j, slot[j])];
    if (slot_z(tag.prev) == 0x3fffffff) fail(Errc::Internal, "backtrack hit an unwritten cell");
    slot[i] = tag.child;
    slot[j] = tag.prev;
  }

  VertexSet code;
  for (int v = 1; v <= n_; ++v)
    if (slot_kind(slot[v]) == kSlotC) code.push_back(v);
  return code;
}

}  // namespace

std::uint64_t qp_number_paper(const RootedTree& t, int k) {
  if (k < 1) fail(Errc::BadK, "k must be >= 1");
  const int n = t.n;
  std::vector<ExtNat> a(n + 1, kInf), b(n + 1, kInf), c(n + 1, ExtNat(1)), d(n + 1, ExtNat(0)),
      z(n + 1, kInf);
  const std::uint64_t uk = static_cast<std::uint64_t>(k);
  for (int i = n; i >= 2; --i) {
    int j = t.parent[i];
    ExtNat nz = z[j];
    ExtNat na = min(a[j] + a[i], a[j] + b[i]);
    if (b[j] + c[i] < na && z[j].finite() && z[j].value() == uk - 1) na = b[j] + c[i];
    ExtNat nb = min(b[j] + a[i], b[j] + b[i]);
    if (d[j] + c[i] < nb) {
      nb = d[j] + c[i];
      nz = ExtNat(1);
    }
    if (b[j] + c[i] < nb && z[j].finite() && k >= 2 && z[j].value() <= uk - 2) {
      nb = b[j] + c[i];
      nz = z[j] + ExtNat(1);
    }
    if (!nb.finite()) nz = kInf;
    ExtNat nc = min(min(c[j] + b[i], c[j] + c[i]), c[j] + d[i]);
    ExtNat nd = min(d[j] + a[i], d[j] + b[i]);
    a[j] = na;
    b[j] = nb;
    c[j] = nc;
    d[j] = nd;
    z[j] = nz;
  }
  return min(min(a[1], b[1]), c[1]).value();
}

std::uint64_t qp_number_frontier(const RootedTree& t, int k) {
  if (k < 1) fail(Errc::BadK, "k must be >= 1");
  if (t.n == 1) return 1;
  std::uint64_t gamma = plain_domination(t);
  int delta = rooted_max_degree(t);
  // gamma_{1k} stabilises at the domination number once k >= min(Delta,
  // gamma), so only genuinely constrained k values run the table DP.
  if (k >= delta || static_cast<std::uint64_t>(k) >= gamma) return gamma;
  return FrontierDP<false>(t, k).value();
}

VertexSet qp_code(const RootedTree& t, int k) {
  if (k < 1) fail(Errc::BadK, "k must be >= 1");
  if (t.n == 1) return {1};
  std::uint64_t gamma = plain_domination(t);
  int delta = rooted_max_degree(t);
  int keff = static_cast<int>(std::min<std::uint64_t>(
      std::min<std::uint64_t>(k, delta), gamma));
  // Any minimum set for the capped k is one for the requested k as well.
  return FrontierDP<true>(t, keff).reconstruct();
}

std::uint64_t domination_number(const RootedTree& t) { return plain_domination(t); }

ChainReport qp_chain(const RootedTree& t, bool with_codes) {
  ChainReport rep;
  rep.delta = t.n == 1 ? 0 : rooted_max_degree(t);
  rep.gamma = domination_number(t);
  rep.values.reserve(rep.delta);
  if (with_codes) rep.codes.emplace();
  for (int k = 1; k <= rep.delta; ++k) {
    rep.values.push_back(qp_number_frontier(t, k));
    if (with_codes) rep.codes->push_back(qp_code(t, k));
  }
  return rep;
}

std::uint64_t qp_number(const Tree& t, int k) {
  return qp_number_frontier(root_and_renumber(t, 1).tree, k);
}

std::uint64_t domination_number(const Tree& t) {
  return domination_number(root_and_renumber(t, 1).tree);
}

VertexSet qp_code(const Tree& t, int k) {
  Rooting r = root_and_renumber(t, 1);
  VertexSet code = qp_code(r.tree, k);
  for (int& v : code) v = r.to_old[v];
  std::sort(code.begin(), code.end());
  return code;
}

ChainReport qp_chain(const Tree& t, bool with_codes) {
  Rooting r = root_and_renumber(t, 1);
  ChainReport rep = qp_chain(r.tree, with_codes);
  if (rep.codes)
    for (VertexSet& code : *rep.codes) {
      for (int& v : code) v = r.to_old[v];
      std::sort(code.begin(), code.end());
    }
  return rep;
}

}  // namespace qpdom
