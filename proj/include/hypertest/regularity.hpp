#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "hypertest/common.hpp"

namespace hypertest {

class Hypergraph;
struct Polyad;

// Base graph against which k-graphs are measured: the vertex classes alone
// when k == 2, a (k, k-1)-graph of crossing (k-1)-sets when k >= 3. The
// "units" of a base are what its subgraphs Q range over: vertices for
// k == 2, base edges otherwise.
struct Scaffold {
  u32 k = 2;
  u32 n = 0;                            // ambient vertex count
  std::vector<std::vector<u32>> parts;  // k disjoint sorted vertex lists
  std::vector<std::vector<u32>> edges;  // sorted crossing (k-1)-sets; k >= 3

  u64 units() const noexcept;
};

// Validates the pieces: exactly k disjoint in-range parts (possibly empty),
// and for k >= 3 every edge a crossing (k-1)-set over them. Edges are
// sorted and deduplicated.
Scaffold make_scaffold(u32 k, u32 n, std::vector<std::vector<u32>> parts,
                       std::vector<std::vector<u32>> edges);

// The base carried by a family polyad at level k-1 (cliques are k-sets).
Scaffold scaffold_of(const Polyad& p, u32 n);

// k-sets spanned by the base: crossing pairs within the parts for k == 2,
// k-sets all of whose (k-1)-subsets are edges otherwise.
std::vector<std::vector<u32>> scaffold_cliques(const Scaffold& s,
                                               u64 cap = kDefaultEnumCap);
u64 count_scaffold_cliques(const Scaffold& s, u64 cap = kDefaultEnumCap);

// Fraction of the base's spanned k-sets lying in H, as an exact rational;
// 0 when the base spans none.
mpq_class rel_density(const Hypergraph& h, const Scaffold& base,
                      u64 cap = kDefaultEnumCap);

// Unit-count bound for the exhaustive checker (2^units subgraphs).
inline constexpr u32 kExactRegularityUnits = 22;

enum class Verdict { Regular, Refuted, Inconclusive };

// Outcome of one regularity check of H against (eps, d) over a base.
// `sound` records whether the verdict covered every admissible subgraph;
// refutations are conclusive either way since they carry the violator.
struct RegularityReport {
  Verdict verdict = Verdict::Inconclusive;
  bool sound = false;
  std::optional<Scaffold> witness;  // violating subgraph when refuted
  mpq_class density;                // fraction of spanned k-sets in H
  mpq_class observed_min;           // relative densities over the
  mpq_class observed_max;           //   admissible subgraphs examined
  u64 candidates = 0;               // admissible subgraphs examined
};

// Exhaustive check: H is (eps, d)-regular over the base iff every subgraph
// Q spanning at least eps * |spanned| many k-sets keeps its H-fraction
// within (d - eps, d + eps) of the k-sets it spans. A base spanning no
// k-sets is regular at every (eps, d). Guard: units <= 22.
RegularityReport check_regular_exact(const Hypergraph& h, const Scaffold& base,
                                     const mpq_class& eps, const mpq_class& d);

// One-sided randomized refuter for bases beyond the exact guard. Tries
// deterministic candidates first (the full base, stars and co-stars of
// every vertex, and for k == 2 the neighbour splits of every vertex), then
// `trials` random subgraphs. "Refuted" carries a witness and is conclusive;
// "regular" only means no violator was found.
RegularityReport check_regular_sampled(const Hypergraph& h,
                                       const Scaffold& base,
                                       const mpq_class& eps,
                                       const mpq_class& d, u32 trials,
                                       u64 seed);

// Exhaustive when the base fits the guard, sampled otherwise.
RegularityReport check_regular(const Hypergraph& h, const Scaffold& base,
                               const mpq_class& eps, const mpq_class& d,
                               u32 trials, u64 seed);

}  // namespace hypertest
