#include "hypertest/iso.hpp"

#include <algorithm>
#include <cstring>

namespace hypertest {

namespace {

constexpr u32 kIsoMaxN = 10;

// Union-find over vertices whose transposition is an automorphism. Two
// unused vertices in one class lead to identical completions, so only the
// first is branched on at any depth.
struct TwinClasses {
  std::vector<u32> parent;

  explicit TwinClasses(u32 n) : parent(n) {
    for (u32 v = 0; v < n; ++v) parent[v] = v;
  }
  u32 find(u32 v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void merge(u32 a, u32 b) { parent[find(a)] = find(b); }
};

bool transposition_is_automorphism(const Hypergraph& h, u32 a, u32 b) {
  bool ok = true;
  std::vector<u32> img(h.k());
  h.for_each_edge([&](std::span<const u32> e) {
    if (!ok) return;
    for (u32 i = 0; i < h.k(); ++i) {
      u32 v = e[i];
      img[i] = v == a ? b : (v == b ? a : v);
    }
    if (!h.has_edge(img)) ok = false;
  });
  return ok;
}

struct SignatureSearch {
  const Hypergraph& h;
  u32 n, k;
  u64 total;  // C(n,k)
  std::vector<u8> best;
  bool have_best = false;
  std::vector<u8> bits;
  std::vector<u32> perm;  // perm[pos] = original vertex
  std::vector<bool> used;
  TwinClasses twins;
  std::vector<u32> order;  // candidate order (ascending degree)

  explicit SignatureSearch(const Hypergraph& g)
      : h(g), n(g.n()), k(g.k()), total(binom(g.n(), g.k())), twins(g.n()) {
    bits.assign(total, 0);
    perm.assign(n, 0);
    used.assign(n, false);
    for (u32 a = 0; a < n; ++a)
      for (u32 b = a + 1; b < n; ++b)
        if (twins.find(a) != twins.find(b) &&
            transposition_is_automorphism(h, a, b))
          twins.merge(a, b);
    // Low-degree vertices first: the minimal string wants sparse prefixes.
    std::vector<u64> deg(n, 0);
    h.for_each_edge([&](std::span<const u32> e) {
      for (u32 v : e) ++deg[v];
    });
    order.resize(n);
    for (u32 v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](u32 a, u32 b) { return deg[a] < deg[b]; });
  }

  // Places a vertex at position `depth`; `strict` records whether the prefix
  // already beat the incumbent strictly when it was compared. The incumbent
  // may improve mid-subtree, which can leave a stale `strict` on the current
  // path; the full comparison at the leaf keeps that sound (stale flags only
  // cost pruning, never correctness).
  void rec(u32 depth, bool strict) {
    if (depth == n) {
      if (!have_best ||
          std::memcmp(bits.data(), best.data(), bits.size()) < 0) {
        best = bits;
        have_best = true;
      }
      return;
    }
    u64 seg_lo = binom(depth, k);
    u64 seg_hi = binom(depth + 1, k);
    std::vector<u32> pick(k >= 1 ? k - 1 : 0);
    std::vector<u32> probe(k);
    bool branched_class[kIsoMaxN];
    std::fill(branched_class, branched_class + n, false);
    for (u32 idx = 0; idx < n; ++idx) {
      u32 v = order[idx];
      if (used[v]) continue;
      u32 cls = twins.find(v);
      if (branched_class[cls]) continue;
      branched_class[cls] = true;
      perm[depth] = v;
      // New ranks: position subsets {S, depth} with S from {0..depth-1};
      // their colex ranks fill [C(depth,k), C(depth+1,k)) bijectively.
      if (depth + 1 >= k) {
        first_subset(pick);
        u64 combos = binom(depth, k - 1);
        for (u64 t = 0; t < combos; ++t) {
          for (u32 x = 0; x + 1 < k; ++x) probe[x] = perm[pick[x]];
          probe[k - 1] = v;
          u64 r = colex_rank(std::span<const u32>(pick)) + binom(depth, k);
          bits[r] = h.has_edge(probe) ? 1 : 0;
          if (t + 1 < combos) next_subset_colex(std::span<u32>(pick), depth);
        }
      }
      bool next_strict = strict;
      bool prune = false;
      if (have_best && !strict && seg_hi > seg_lo) {
        int cmp = std::memcmp(bits.data() + seg_lo, best.data() + seg_lo,
                              seg_hi - seg_lo);
        if (cmp > 0) prune = true;
        if (cmp < 0) next_strict = true;
      }
      if (!prune) {
        used[v] = true;
        rec(depth + 1, next_strict);
        used[v] = false;
      }
    }
  }
};

}  // namespace

std::string canonical_signature(const Hypergraph& h) {
  if (h.n() > kIsoMaxN)
    fail_guard("canonical_signature: guarded at n <= 10");
  SignatureSearch s(h);
  s.rec(0, false);
  std::string out;
  out.reserve(2 + s.best.size());
  out.push_back((char)h.n());
  out.push_back((char)h.k());
  out.append(s.best.begin(), s.best.end());
  return out;
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n() || a.k() != b.k() || a.edge_count() != b.edge_count())
    return false;
  auto degs = [](const Hypergraph& h) {
    std::vector<u64> d(h.n(), 0);
    h.for_each_edge([&](std::span<const u32> e) {
      for (u32 v : e) ++d[v];
    });
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(a) != degs(b)) return false;
  return canonical_signature(a) == canonical_signature(b);
}

u64 automorphism_count(const Hypergraph& h) {
  if (h.n() > kIsoMaxN) fail_guard("automorphism_count: guarded at n <= 10");
  u32 n = h.n(), k = h.k();
  std::vector<u64> deg(n, 0);
  h.for_each_edge([&](std::span<const u32> e) {
    for (u32 v : e) ++deg[v];
  });
  std::vector<u32> image(n, 0);
  std::vector<bool> used(n, false);
  std::vector<u32> probe(k);
  std::vector<u32> pick(k);
  std::vector<u32> orig(k);
  u64 count = 0;
  auto rec = [&](auto&& self, u32 i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    for (u32 v = 0; v < n; ++v) {
      if (used[v] || deg[v] != deg[i]) continue;
      image[i] = v;
      // Both directions on every k-subset of {0..i} containing i: the image
      // of an edge must be an edge and of a non-edge a non-edge.
      bool ok = true;
      if (i + 1 >= k) {
        first_subset(std::span<u32>(pick.data(), k - 1));
        u64 combos = binom(i, k - 1);
        for (u64 t = 0; t < combos && ok; ++t) {
          for (u32 x = 0; x + 1 < k; ++x) probe[x] = image[pick[x]];
          probe[k - 1] = v;
          for (u32 x = 0; x + 1 < k; ++x) orig[x] = pick[x];
          orig[k - 1] = i;
          if (h.has_edge(orig) != h.has_edge(probe)) ok = false;
          if (t + 1 < combos)
            next_subset_colex(std::span<u32>(pick.data(), k - 1), i);
        }
      }
      if (ok) {
        used[v] = true;
        self(self, i + 1);
        used[v] = false;
      }
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace hypertest
