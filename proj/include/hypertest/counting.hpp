#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "hypertest/address.hpp"
#include "hypertest/density.hpp"
#include "hypertest/equitable.hpp"
#include "hypertest/family.hpp"
#include "hypertest/hypergraph.hpp"

namespace hypertest {

// Labeling of the vertices of a small k-graph F by part labels: vertex v of
// F is assigned to_label[v]. Used to place F across the parts named by an
// address (for the closed-form copy count) or by a complex (for the exact
// copy count).
struct SigmaEmbedding {
  std::vector<u32> to_label;
};

// Builds the embedding and checks it is a bijection from {0..l-1} onto the
// given label set.
SigmaEmbedding make_sigma(std::span<const u32> to_label,
                          std::span<const u32> labels);

// Expected density of labeled copies of F placed along sigma at address x:
// the product over the k-subsets of x of d(restriction) when the matching
// F-set is an edge and 1 - d(restriction) when it is not, times the interior
// weight prod_{j=2}^{k-1} a_j^(-C(l, j)). F has l vertices and arity k; x
// has shape (l, k-1) over the part counts of d.
mpq_class ic_sigma(const Hypergraph& f, const DensityFunction& d,
                   const AddressVector& x, const SigmaEmbedding& sigma);

// Average of ic_sigma over all l! placements, divided by |Aut(F)|: the
// expected density of unlabeled induced copies of F at address x.
mpq_class ic_x(const Hypergraph& f, const DensityFunction& d,
               const AddressVector& x);

// Average of ic_x over the whole address space of shape (l, k-1): the
// density of induced copies of F predicted by d. Requires l <= a1.
mpq_class ic(const Hypergraph& f, const DensityFunction& d);

// Sum of ic over the family (members share vertex count and arity).
// Summing one representative of every isomorphism type gives exactly 1.
mpq_class ic_family(std::span<const Hypergraph> family,
                    const DensityFunction& d);

// Exact number of sigma-placed induced copies of F in the top level of the
// complex: transversals (one vertex per part, vertex for v drawn from the
// part labeled sigma(v)) whose (k-1)-subsets all lie in the next-to-top
// level and whose k-subsets agree with the edges of F. The transversal
// count prod |V_i| must not exceed `cap`.
u64 ic_sigma_count(const Hypergraph& f, const Complex& c,
                   const SigmaEmbedding& sigma, u64 cap = kDefaultEnumCap);

// Exact comparison of the measured induced-family density of H against the
// value predicted by d over the family of partitions.
struct PrIcReport {
  mpq_class pr;          // measured induced density of the family in H
  mpq_class ic;          // predicted density from d
  mpq_class deviation;   // |pr - ic|
  mpq_class correction;  // share of vertex l-sets that are not crossing
  mpq_class gamma;
  bool within = false;        // deviation <= gamma + correction
  EquitableReport equitable;  // sampled entry check of (fam, h, d) at gamma
};

// Computes both sides exactly and reports whether they agree. The predicted
// value models crossing placements only, so the non-crossing share of
// C(n, l) is computed exactly and added to the tolerance; the raw deviation
// is reported alongside it. The family must be pairwise non-isomorphic.
// The equitability of (fam, h, d) is checked (sampled, at epsilon = gamma)
// and reported without gating the comparison.
PrIcReport pr_vs_ic_check(const Hypergraph& h, const FamilyOfPartitions& fam,
                          const DensityFunction& d,
                          std::span<const Hypergraph> family,
                          const mpq_class& gamma, u32 trials = 64,
                          u64 seed = 0);

}  // namespace hypertest
