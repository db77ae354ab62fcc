#include "hypertest/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <unordered_set>

#include "hypertest/iso.hpp"
#include "hypertest/kernels.hpp"
#include "hypertest/rng.hpp"

namespace hypertest {

namespace {

// Per-uniformity binomial rows C(., i) for fast rank/unrank at a fixed n.
// Row i is nondecreasing in v, so unranking is a binary search.
struct RankTable {
  u32 n, k;
  std::vector<std::vector<u64>> rows;  // rows[i][v] = C(v, i), i in [0,k]

  RankTable(u32 n_, u32 k_) : n(n_), k(k_) {
    rows.assign(k + 1, std::vector<u64>(n + 1, 0));
    for (u32 v = 0; v <= n; ++v) rows[0][v] = 1;
    for (u32 i = 1; i <= k; ++i)
      for (u32 v = 1; v <= n; ++v)
        rows[i][v] = rows[i][v - 1] + rows[i - 1][v - 1];
  }

  u64 rank(std::span<const u32> vs) const {
    u64 r = 0;
    for (u32 i = 0; i < vs.size(); ++i) r += rows[i + 1][vs[i]];
    return r;
  }

  void unrank(u64 r, std::span<u32> out) const {
    for (u32 i = (u32)out.size(); i >= 1; --i) {
      const auto& row = rows[i];
      auto it = std::upper_bound(row.begin(), row.end(), r);
      u32 v = (u32)(it - row.begin()) - 1;
      out[i - 1] = v;
      r -= row[v];
    }
  }
};

// Tables are cheap and keyed by (n,k); a tiny cache avoids rebuilding them
// in edge-iteration heavy loops. Entries live behind stable pointers and
// hits rotate to the back, so callers holding references to the two most
// recent tables (as induced() does) survive later lookups and evictions.
const RankTable& rank_table(u32 n, u32 k) {
  thread_local std::vector<std::unique_ptr<RankTable>> cache;
  for (std::size_t i = 0; i < cache.size(); ++i)
    if (cache[i]->n == n && cache[i]->k == k) {
      std::rotate(cache.begin() + i, cache.begin() + i + 1, cache.end());
      return *cache.back();
    }
  if (cache.size() >= 8) cache.erase(cache.begin());
  cache.push_back(std::make_unique<RankTable>(n, k));
  return *cache.back();
}

}  // namespace

Hypergraph::Hypergraph(u32 n, u32 k) : n_(n), k_(k) {
  if (k < 1) fail_invalid("hypergraph uniformity must be at least 1");
  if (k > n) fail_invalid("hypergraph uniformity exceeds vertex count");
  if (binom_overflows(n, k))
    fail_guard("C(n,k) does not fit in 64 bits; representation unsupported");
  universe_ = binom(n, k);
  dense_ = universe_ <= kDenseBitLimit;
  if (dense_) bits_.assign((universe_ + 63) / 64, 0);
}

Hypergraph Hypergraph::complete(u32 n, u32 k) {
  Hypergraph h(n, k);
  if (h.dense_) {
    for (u64 r = 0; r < h.universe_; ++r) h.bits_[r / 64] |= u64(1) << (r % 64);
  } else {
    h.sparse_.resize(h.universe_);
    for (u64 r = 0; r < h.universe_; ++r) h.sparse_[r] = r;
  }
  h.count_ = h.universe_;
  return h;
}

void Hypergraph::check_rank(u64 rank) const {
  if (rank >= universe_) fail_invalid("edge rank out of range");
}

bool Hypergraph::has_rank(u64 rank) const noexcept {
  if (dense_) return (bits_[rank / 64] >> (rank % 64)) & 1u;
  return std::binary_search(sparse_.begin(), sparse_.end(), rank);
}

bool Hypergraph::has_edge(std::span<const u32> vs) const {
  std::vector<u32> s(vs.begin(), vs.end());
  std::sort(s.begin(), s.end());
  return has_rank(rank_table(n_, k_).rank(s));
}

void Hypergraph::set_rank(u64 rank, bool present) {
  check_rank(rank);
  if (dense_) {
    u64 mask = u64(1) << (rank % 64);
    u64& w = bits_[rank / 64];
    if (((w & mask) != 0) == present) return;
    w ^= mask;
    count_ += present ? 1 : -1;
  } else {
    auto it = std::lower_bound(sparse_.begin(), sparse_.end(), rank);
    bool have = it != sparse_.end() && *it == rank;
    if (have == present) return;
    if (present) {
      sparse_.insert(it, rank);
      ++count_;
    } else {
      sparse_.erase(it);
      --count_;
    }
  }
}

void Hypergraph::set_edge(std::span<const u32> vs, bool present) {
  std::vector<u32> s(vs.begin(), vs.end());
  std::sort(s.begin(), s.end());
  set_rank(rank_table(n_, k_).rank(s), present);
}

void Hypergraph::assign_ranks(std::vector<u64> ranks) {
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  if (!ranks.empty() && ranks.back() >= universe_)
    fail_invalid("edge rank out of range");
  if (dense_) {
    std::fill(bits_.begin(), bits_.end(), 0);
    for (u64 r : ranks) bits_[r / 64] |= u64(1) << (r % 64);
    count_ = ranks.size();
  } else {
    count_ = ranks.size();
    sparse_ = std::move(ranks);
  }
}

std::vector<u64> Hypergraph::edge_ranks() const {
  if (!dense_) return sparse_;
  std::vector<u64> out;
  out.reserve(count_);
  for (u64 w = 0; w < bits_.size(); ++w) {
    u64 word = bits_[w];
    while (word) {
      u32 b = (u32)std::countr_zero(word);
      out.push_back(w * 64 + b);
      word &= word - 1;
    }
  }
  return out;
}

void Hypergraph::for_each_edge(
    const std::function<void(std::span<const u32>)>& fn) const {
  const RankTable& tab = rank_table(n_, k_);
  std::vector<u32> vs(k_);
  if (dense_ && count_ * 64 >= universe_) {
    // Dense enough that a straight scan with an incremental successor beats
    // unranking each set bit.
    first_subset(vs);
    for (u64 r = 0; r < universe_; ++r) {
      if (has_rank(r)) fn(vs);
      if (r + 1 < universe_) next_subset_colex(std::span<u32>(vs), n_);
    }
    return;
  }
  for (u64 r : edge_ranks()) {
    tab.unrank(r, vs);
    fn(vs);
  }
}

std::span<const u64> Hypergraph::words() const {
  if (!dense_) fail_invalid("word storage requested from a sparse hypergraph");
  return bits_;
}

bool Hypergraph::operator==(const Hypergraph& o) const {
  if (n_ != o.n_ || k_ != o.k_ || count_ != o.count_) return false;
  if (dense_) return bits_ == o.bits_;
  return sparse_ == o.sparse_;
}

Hypergraph make_hypergraph(u32 n, u32 k,
                           const std::vector<std::vector<u32>>& edges) {
  if (k < 2) fail_invalid("make_hypergraph: uniformity must be at least 2");
  if (k > n) fail_invalid("make_hypergraph: uniformity exceeds vertex count");
  Hypergraph h(n, k);
  const RankTable& tab = rank_table(n, k);
  std::vector<u64> ranks;
  ranks.reserve(edges.size());
  std::vector<u32> s;
  for (const auto& e : edges) {
    if (e.size() != k) fail_invalid("make_hypergraph: edge of wrong size");
    s.assign(e.begin(), e.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      fail_invalid("make_hypergraph: repeated vertex inside an edge");
    if (s.back() >= n) fail_invalid("make_hypergraph: vertex out of range");
    ranks.push_back(tab.rank(s));
  }
  h.assign_ranks(std::move(ranks));
  return h;
}

u64 sym_diff_size(const Hypergraph& g, const Hypergraph& h) {
  if (g.n() != h.n() || g.k() != h.k())
    fail_invalid("sym_diff_size: mismatched vertex count or uniformity");
  if (g.dense())
    return kernels::active().xor_popcount(g.words().data(), h.words().data(),
                                          g.words().size());
  // Sorted-merge on rank lists.
  auto a = g.edge_ranks();
  auto b = h.edge_ranks();
  std::size_t i = 0, j = 0;
  u64 diff = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
      ++diff;
    } else {
      ++j;
      ++diff;
    }
  }
  return diff + (a.size() - i) + (b.size() - j);
}

mpq_class normalized_distance(const Hypergraph& g, const Hypergraph& h) {
  mpq_class q(sym_diff_size(g, h), g.universe());
  q.canonicalize();
  return q;
}

Hypergraph induced(const Hypergraph& h, std::span<const u32> q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] >= h.n()) fail_invalid("induced: vertex out of range");
    if (i > 0 && q[i] <= q[i - 1])
      fail_invalid("induced: vertex set must be sorted and distinct");
  }
  u32 m = (u32)q.size();
  if (h.k() > m) fail_invalid("induced: fewer vertices than uniformity");
  Hypergraph out(m, h.k());
  const RankTable& sub = rank_table(m, h.k());
  const RankTable& par = rank_table(h.n(), h.k());
  std::vector<u32> pos(h.k());
  std::vector<u32> mapped(h.k());
  first_subset(pos);
  u64 cnt = binom(m, h.k());
  std::vector<u64> ranks;
  for (u64 r = 0; r < cnt; ++r) {
    for (u32 i = 0; i < h.k(); ++i) mapped[i] = q[pos[i]];
    if (h.has_rank(par.rank(mapped))) ranks.push_back(sub.rank(pos));
    if (r + 1 < cnt) next_subset_colex(std::span<u32>(pos), m);
  }
  out.assign_ranks(std::move(ranks));
  return out;
}

Hypergraph complete_partite(const std::vector<u32>& part_sizes, u32 k) {
  u32 n = 0;
  std::vector<std::vector<u32>> parts;
  for (u32 s : part_sizes) {
    std::vector<u32> p(s);
    for (u32 i = 0; i < s; ++i) p[i] = n + i;
    n += s;
    parts.push_back(std::move(p));
  }
  return complete_partite_on(n, parts, k);
}

Hypergraph complete_partite_on(u32 n,
                               const std::vector<std::vector<u32>>& parts,
                               u32 k) {
  if (k < 2) fail_invalid("complete_partite: uniformity must be at least 2");
  Hypergraph h(n, k);
  const RankTable& tab = rank_table(n, k);
  std::vector<u64> ranks;
  std::vector<u32> cur;
  // Pick at most one vertex from each part, parts left to right.
  auto rec = [&](auto&& self, std::size_t part_idx, u32 taken) -> void {
    if (taken == k) {
      std::vector<u32> s = cur;
      std::sort(s.begin(), s.end());
      ranks.push_back(tab.rank(s));
      return;
    }
    if (part_idx >= parts.size()) return;
    if (parts.size() - part_idx < (std::size_t)(k - taken)) return;
    self(self, part_idx + 1, taken);  // skip this part
    for (u32 v : parts[part_idx]) {
      cur.push_back(v);
      self(self, part_idx + 1, taken + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  h.assign_ranks(std::move(ranks));
  return h;
}

namespace {

// Generic clique search: extend a sorted prefix with candidate vertices kept
// incrementally valid. `emit` receives each i-clique.
void clique_search(const Hypergraph& h, u32 i, u64 cap,
                   const std::function<void(std::span<const u32>)>& emit) {
  if (i < h.k()) fail_invalid("cliques: target size below uniformity");
  u32 k = h.k();
  u64 nodes = 0;
  std::vector<u32> cur;
  cur.reserve(i);
  // A candidate list paired with the prefix depth it was filtered against.
  auto rec = [&](auto&& self, const std::vector<u32>& cand) -> void {
    if (cur.size() == i) {
      emit(cur);
      return;
    }
    for (std::size_t ci = 0; ci < cand.size(); ++ci) {
      u32 v = cand[ci];
      if (++nodes > cap)
        fail_guard("cliques: enumeration cap exceeded");
      cur.push_back(v);
      // Remaining candidates: those after v that still form edges with every
      // new (k-1)-subset involving v.
      std::vector<u32> next;
      next.reserve(cand.size() - ci);
      std::vector<u32> probe(k);
      for (std::size_t cj = ci + 1; cj < cand.size(); ++cj) {
        u32 u = cand[cj];
        bool ok = true;
        if (cur.size() >= k - 1) {
          // k-2 vertices from cur\{v} plus v and u must always be an edge.
          std::vector<u32> base(cur.begin(), cur.end() - 1);
          std::vector<u32> pick(k >= 2 ? k - 2 : 0);
          if (k == 2) {
            probe[0] = v;
            probe[1] = u;
            ok = h.has_edge(probe);
          } else {
            if (base.size() >= k - 2) {
              first_subset(pick);
              u64 combos = binom(base.size(), k - 2);
              for (u64 t = 0; t < combos && ok; ++t) {
                for (u32 x = 0; x < k - 2; ++x) probe[x] = base[pick[x]];
                probe[k - 2] = v;
                probe[k - 1] = u;
                ok = h.has_edge(probe);
                if (t + 1 < combos)
                  next_subset_colex(std::span<u32>(pick), (u32)base.size());
              }
            }
          }
        }
        if (ok) next.push_back(u);
      }
      self(self, next);
      cur.pop_back();
    }
  };
  std::vector<u32> all(h.n());
  for (u32 v = 0; v < h.n(); ++v) all[v] = v;
  // Vertices in the prefix below k-1 deep carry no constraints yet; the
  // incremental filter above only fires once |cur| reaches k-1.
  rec(rec, all);
}

}  // namespace

std::vector<std::vector<u32>> cliques(const Hypergraph& h, u32 i, u64 cap) {
  std::vector<std::vector<u32>> out;
  clique_search(h, i, cap, [&](std::span<const u32> c) {
    if (out.size() >= cap) fail_guard("cliques: output cap exceeded");
    out.emplace_back(c.begin(), c.end());
  });
  return out;
}

u64 count_cliques(const Hypergraph& h, u32 i, u64 cap) {
  if (i < h.k()) fail_invalid("count_cliques: target size below uniformity");
  if (i == h.k()) return h.edge_count();
  if (h.k() == 2) {
    // Bitset path: recurse over common-neighbour masks, popcount at the last
    // level. Handles astronomically large counts; the cap only bounds the
    // number of branch nodes.
    AdjacencyRows rows = adjacency_rows(h);
    u32 W = rows.words_per_row;
    std::vector<u64> above((std::size_t)h.n() * W, 0);
    for (u32 v = 0; v < h.n(); ++v) {
      u64* m = &above[(std::size_t)v * W];
      for (u32 u = v + 1; u < h.n(); ++u) m[u / 64] |= u64(1) << (u % 64);
    }
    u64 count = 0;
    u64 nodes = 0;
    std::vector<u64> stack((std::size_t)i * W, 0);
    auto rec = [&](auto&& self, const u64* mask, u32 depth) -> void {
      if (depth == i - 1) {
        count += kernels::active().popcount(mask, W);
        return;
      }
      u64* next = &stack[(std::size_t)depth * W];
      for (u32 w = 0; w < W; ++w) {
        u64 word = mask[w];
        while (word) {
          u32 b = (u32)std::countr_zero(word);
          word &= word - 1;
          u32 v = w * 64 + b;
          if (++nodes > cap) fail_guard("count_cliques: node cap exceeded");
          const u64* rv = rows.bits.data() + (std::size_t)v * W;
          const u64* av = above.data() + (std::size_t)v * W;
          for (u32 x = 0; x < W; ++x) next[x] = mask[x] & rv[x] & av[x];
          self(self, next, depth + 1);
        }
      }
    };
    std::vector<u64> full(W, 0);
    for (u32 v = 0; v < h.n(); ++v) full[v / 64] |= u64(1) << (v % 64);
    // Reuse per-depth scratch rows: recursion writes into stack[depth].
    for (u32 v = 0; v < h.n(); ++v) {
      if (++nodes > cap) fail_guard("count_cliques: node cap exceeded");
      std::vector<u64> first(W);
      const u64* rv = rows.bits.data() + (std::size_t)v * W;
      const u64* av = above.data() + (std::size_t)v * W;
      for (u32 x = 0; x < W; ++x) first[x] = rv[x] & av[x];
      rec(rec, first.data(), 1);
    }
    return count;
  }
  u64 count = 0;
  clique_search(h, i, cap, [&](std::span<const u32>) { ++count; });
  return count;
}

std::vector<std::vector<u32>> crossing_sets(
    const std::vector<std::vector<u32>>& parts, u32 j, u64 cap) {
  std::vector<std::vector<u32>> out;
  std::vector<u32> cur;
  u64 nodes = 0;
  auto rec = [&](auto&& self, std::size_t idx, u32 taken) -> void {
    if (taken == j) {
      std::vector<u32> s = cur;
      std::sort(s.begin(), s.end());
      if (out.size() >= cap) fail_guard("crossing_sets: output cap exceeded");
      out.push_back(std::move(s));
      return;
    }
    if (idx >= parts.size()) return;
    if (parts.size() - idx < (std::size_t)(j - taken)) return;
    self(self, idx + 1, taken);
    for (u32 v : parts[idx]) {
      if (++nodes > cap) fail_guard("crossing_sets: enumeration cap exceeded");
      cur.push_back(v);
      self(self, idx + 1, taken + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

u64 count_crossing_sets(const std::vector<std::vector<u32>>& parts, u32 j) {
  // Elementary symmetric polynomial e_j over part sizes.
  std::vector<unsigned __int128> e(j + 1, 0);
  e[0] = 1;
  for (const auto& p : parts) {
    u64 s = p.size();
    for (u32 t = j; t >= 1; --t) {
      e[t] += e[t - 1] * s;
      if (e[t] > (unsigned __int128)UINT64_MAX)
        fail_guard("count_crossing_sets: count exceeds 64 bits");
    }
  }
  return (u64)e[j];
}

Hypergraph random_kgraph(u32 n, u32 k, const mpq_class& p, u64 seed) {
  Hypergraph h(n, k);
  if (!h.dense())
    fail_guard("random_kgraph: C(n,k) exceeds the dense representation limit");
  BernoulliDraw draw(p);
  SplitMix64 g(seed);
  std::vector<u64> ranks;
  for (u64 r = 0; r < h.universe(); ++r)
    if (draw.sample(g)) ranks.push_back(r);
  h.assign_ranks(std::move(ranks));
  return h;
}

Hypergraph random_edit(const Hypergraph& h, const mpq_class& nu, u64 seed) {
  if (nu < 0 || nu > 1) fail_invalid("random_edit: nu outside [0,1]");
  if (!h.dense())
    fail_guard("random_edit: sparse representation not supported");
  mpz_class m_z = (nu.get_num() * h.universe()) / nu.get_den();
  u64 m = mpz_get_ui(m_z.get_mpz_t());
  SplitMix64 g(seed);
  Hypergraph out = h;
  for (u64 r : sample_distinct(h.universe(), m, g)) out.set_rank(r, !out.has_rank(r));
  return out;
}

AdjacencyRows adjacency_rows(const Hypergraph& h) {
  if (h.k() != 2) fail_invalid("adjacency_rows: defined for 2-graphs only");
  AdjacencyRows rows;
  rows.n = h.n();
  rows.words_per_row = (h.n() + 63) / 64;
  rows.bits.assign((std::size_t)rows.n * rows.words_per_row, 0);
  h.for_each_edge([&](std::span<const u32> e) {
    u32 u = e[0], v = e[1];
    rows.bits[(std::size_t)u * rows.words_per_row + v / 64] |= u64(1) << (v % 64);
    rows.bits[(std::size_t)v * rows.words_per_row + u / 64] |= u64(1) << (u % 64);
  });
  return rows;
}

namespace {

// Exact 3-vertex subgraph census for 2-graphs: triangle count via row
// intersections, then the path/edge/empty counts fall out of |E| and the
// cherry count sum_v C(deg v, 2).
void three_vertex_census(const Hypergraph& h, u64 out_counts[4]) {
  AdjacencyRows rows = adjacency_rows(h);
  u32 W = rows.words_per_row;
  std::vector<u64> above((std::size_t)h.n() * W, 0);
  for (u32 v = 0; v < h.n(); ++v) {
    u64* m = &above[(std::size_t)v * W];
    for (u32 u = v + 1; u < h.n(); ++u) m[u / 64] |= u64(1) << (u % 64);
  }
  u64 triangles = 0;
  u64 cherries = 0;
  h.for_each_edge([&](std::span<const u32> e) {
    const u64* ru = rows.bits.data() + (std::size_t)e[0] * W;
    const u64* rv = rows.bits.data() + (std::size_t)e[1] * W;
    const u64* av = above.data() + (std::size_t)e[1] * W;
    triangles += kernels::active().and3_popcount(ru, rv, av, W);
  });
  for (u32 v = 0; v < h.n(); ++v) {
    u64 d = kernels::active().popcount(rows.bits.data() + (std::size_t)v * W, W);
    cherries += d * (d - 1) / 2;
  }
  u64 e = h.edge_count();
  u64 n = h.n();
  u64 two_edge = cherries - 3 * triangles;
  u64 one_edge = e * (n - 2) - 2 * two_edge - 3 * triangles;
  u64 total = binom(n, 3);
  out_counts[3] = triangles;
  out_counts[2] = two_edge;
  out_counts[1] = one_edge;
  out_counts[0] = total - one_edge - two_edge - triangles;
}

}  // namespace

mpq_class pr_density(const std::vector<Hypergraph>& family, const Hypergraph& h,
                     u64 cap) {
  if (family.empty()) return mpq_class(0);
  u32 q = family[0].n();
  u32 k = family[0].k();
  for (const auto& f : family)
    if (f.n() != q || f.k() != k)
      fail_invalid("pr_density: family members disagree on (q,k)");
  if (k != h.k()) fail_invalid("pr_density: uniformity mismatch");
  if (q > h.n()) fail_invalid("pr_density: q exceeds n");

  if (k == 2 && q == 3 && h.n() >= 3) {
    // 3-vertex 2-graphs are isomorphic exactly when their edge counts agree,
    // so the probability is a sum of census fractions.
    bool want[4] = {false, false, false, false};
    for (const auto& f : family) want[f.edge_count()] = true;
    u64 counts[4];
    three_vertex_census(h, counts);
    u64 num = 0;
    for (int c = 0; c < 4; ++c)
      if (want[c]) num += counts[c];
    mpq_class r(num, binom(h.n(), 3));
    r.canonicalize();
    return r;
  }

  u64 total = binom(h.n(), q);
  if (total > cap) fail_guard("pr_density: C(n,q) exceeds the enumeration cap");
  std::unordered_set<std::string> sigs;
  for (const auto& f : family) sigs.insert(canonical_signature(f));
  std::vector<u32> sub(q);
  first_subset(sub);
  u64 hits = 0;
  for (u64 r = 0; r < total; ++r) {
    Hypergraph ind = induced(h, sub);
    if (sigs.count(canonical_signature(ind))) ++hits;
    if (r + 1 < total) next_subset_colex(std::span<u32>(sub), h.n());
  }
  mpq_class out(hits, total);
  out.canonicalize();
  return out;
}

u64 inj_count(const Hypergraph& f, const Hypergraph& h) {
  if (f.k() != h.k()) fail_invalid("inj_count: uniformity mismatch");
  u32 ell = f.n();
  if (ell > h.n()) return 0;
  // Edges of F grouped by their largest vertex: checked as soon as that
  // vertex is placed.
  std::vector<std::vector<std::vector<u32>>> by_max(ell);
  f.for_each_edge([&](std::span<const u32> e) {
    by_max[e.back()].emplace_back(e.begin(), e.end());
  });
  std::vector<u32> image(ell, 0);
  std::vector<bool> used(h.n(), false);
  std::vector<u32> probe(f.k());
  u64 count = 0;
  auto rec = [&](auto&& self, u32 i) -> void {
    if (i == ell) {
      ++count;
      return;
    }
    for (u32 v = 0; v < h.n(); ++v) {
      if (used[v]) continue;
      image[i] = v;
      bool ok = true;
      for (const auto& e : by_max[i]) {
        for (u32 x = 0; x < f.k(); ++x) probe[x] = image[e[x]];
        if (!h.has_edge(probe)) {
          ok = false;
          break;
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

mpq_class t_inj(const Hypergraph& f, const Hypergraph& h) {
  u64 denom = falling_factorial(h.n(), f.n());
  if (denom == 0 || denom == UINT64_MAX)
    fail_guard("t_inj: falling factorial out of range");
  mpq_class r(inj_count(f, h), denom);
  r.canonicalize();
  return r;
}

}  // namespace hypertest
