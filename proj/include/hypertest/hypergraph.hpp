#pragma once

#include <gmpxx.h>

#include <functional>
#include <span>
#include <vector>

#include "hypertest/binom.hpp"
#include "hypertest/common.hpp"

namespace hypertest {

// k-uniform hypergraph on vertex set {0..n-1}. Edges are k-subsets stored by
// colex rank: densely as a bitset when C(n,k) <= 2^24, otherwise as a sorted
// rank list. The representation is a function of (n,k) alone, so graphs that
// can be compared always share it.
//
// Uniformity 1 is permitted internally (vertex-set "graphs" appear as the
// lowest level of partition families); the public validating constructor
// make_hypergraph rejects k < 2.
class Hypergraph {
 public:
  static constexpr u64 kDenseBitLimit = u64(1) << 24;

  Hypergraph() = default;
  Hypergraph(u32 n, u32 k);

  static Hypergraph complete(u32 n, u32 k);

  u32 n() const noexcept { return n_; }
  u32 k() const noexcept { return k_; }
  u64 universe() const noexcept { return universe_; }
  bool dense() const noexcept { return dense_; }
  u64 edge_count() const noexcept { return count_; }

  bool has_rank(u64 rank) const noexcept;
  // `vs` need not be sorted; must be k distinct vertices below n.
  bool has_edge(std::span<const u32> vs) const;
  void set_rank(u64 rank, bool present);
  void set_edge(std::span<const u32> vs, bool present);

  // Bulk construction: sorts, dedups and flips everything in one pass.
  void assign_ranks(std::vector<u64> ranks);

  std::vector<u64> edge_ranks() const;
  // Visits edges as sorted vertex tuples in colex rank order.
  void for_each_edge(const std::function<void(std::span<const u32>)>& fn) const;

  // Dense word storage (valid only when dense()).
  std::span<const u64> words() const;

  bool operator==(const Hypergraph& o) const;

 private:
  void check_rank(u64 rank) const;

  u32 n_ = 0;
  u32 k_ = 0;
  u64 universe_ = 0;
  bool dense_ = true;
  u64 count_ = 0;
  std::vector<u64> bits_;    // dense path
  std::vector<u64> sparse_;  // sorted ranks
};

// Validating constructor: k >= 2, k <= n, every edge has k distinct
// vertices below n. Duplicate edges collapse.
Hypergraph make_hypergraph(u32 n, u32 k,
                           const std::vector<std::vector<u32>>& edges);

// |G triangle H|; requires matching (n,k).
u64 sym_diff_size(const Hypergraph& g, const Hypergraph& h);

// |G triangle H| / C(n,k) as an exact rational.
mpq_class normalized_distance(const Hypergraph& g, const Hypergraph& h);

// Induced subgraph on the sorted distinct vertex set q, relabelled to
// {0..|q|-1} preserving order.
Hypergraph induced(const Hypergraph& h, std::span<const u32> q);

// Complete l-partite k-graph: all k-sets meeting every part at most once.
// Parts are contiguous blocks of the given sizes.
Hypergraph complete_partite(const std::vector<u32>& part_sizes, u32 k);
// Same with explicit vertex lists inside an ambient {0..n-1}.
Hypergraph complete_partite_on(u32 n, const std::vector<std::vector<u32>>& parts,
                               u32 k);

// All i-sets of vertices whose k-subsets are all edges, i >= k (for i == k
// this is the edge list). Work/output guarded by `cap`.
std::vector<std::vector<u32>> cliques(const Hypergraph& h, u32 i,
                                      u64 cap = kDefaultEnumCap);

// Clique count without materialising; for k == 2 this runs on adjacency
// bitmasks and tolerates counts far beyond the cap (the cap then only limits
// the search frontier, not the result).
u64 count_cliques(const Hypergraph& h, u32 i, u64 cap = kDefaultEnumCap);

// j-sets meeting each of the given disjoint parts at most once ("crossing"
// sets). This is the clique-set convention for unions of vertex classes.
std::vector<std::vector<u32>> crossing_sets(
    const std::vector<std::vector<u32>>& parts, u32 j,
    u64 cap = kDefaultEnumCap);
u64 count_crossing_sets(const std::vector<std::vector<u32>>& parts, u32 j);

// Each k-set becomes an edge independently with rational probability p,
// decided by one 53-bit draw per rank in ascending rank order.
Hypergraph random_kgraph(u32 n, u32 k, const mpq_class& p, u64 seed);

// Flips exactly floor(nu * C(n,k)) distinct uniformly chosen k-sets.
Hypergraph random_edit(const Hypergraph& h, const mpq_class& nu, u64 seed);

// Adjacency rows for 2-graphs: row(v) is a bitset over vertices.
struct AdjacencyRows {
  u32 n = 0;
  u32 words_per_row = 0;
  std::vector<u64> bits;

  std::span<const u64> row(u32 v) const {
    return {bits.data() + (std::size_t)v * words_per_row, words_per_row};
  }
  bool get(u32 u, u32 v) const {
    return (bits[(std::size_t)u * words_per_row + v / 64] >> (v % 64)) & 1u;
  }
};
AdjacencyRows adjacency_rows(const Hypergraph& h);

// Fraction of q-subsets Q whose induced subgraph is isomorphic to a member
// of `family` (all members share (q,k)). Exact rational. The generic path
// enumerates all C(n,q) subsets under `cap`; for k == 2, q == 3 a closed
// form over 3-vertex isomorphism types avoids enumeration entirely.
mpq_class pr_density(const std::vector<Hypergraph>& family, const Hypergraph& h,
                     u64 cap = kDefaultEnumCap);

// Number of injective maps V(F) -> V(H) sending every edge of F to an edge
// of H (not induced: non-edges of F are unconstrained).
u64 inj_count(const Hypergraph& f, const Hypergraph& h);

// inj_count / (n)_{|V(F)|} as an exact rational.
mpq_class t_inj(const Hypergraph& f, const Hypergraph& h);

}  // namespace hypertest
