#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "hypertest/density.hpp"
#include "hypertest/family.hpp"
#include "hypertest/hypergraph.hpp"
#include "hypertest/regularity.hpp"

namespace hypertest {

// Shared defaults for the randomized constructions: sampled sub-checks per
// regularity verification, and redraw attempts before giving up with a
// postcondition error.
inline constexpr u32 kDefaultOpTrials = 64;
inline constexpr u32 kDefaultOpRetries = 20;

// floor(2^53 * p^(1/degree)) / 2^53 for p in [0, 1]: the rational stand-in
// used wherever a fractional-power probability appears, so that draws stay
// 53-bit threshold comparisons.
mpq_class root_threshold(const mpq_class& p, unsigned long degree);

// Random partition {H_0, .., H_s} of hk: each edge lands in class i with
// probability probs[i-1] independently, class 0 takes the leftover mass.
// The caller asserts hk (epsilon, d)-regular over the base; d >= 2 epsilon
// and sum(probs) <= 1 are enforced, and each returned slice is verified
// (3 epsilon, p_i d)-regular (class 0 against the leftover share),
// redrawing on failure up to `retries` times.
std::vector<Hypergraph> slicing(const Hypergraph& hk, const Scaffold& base,
                                const mpq_class& d,
                                std::span<const mpq_class> probs,
                                const mpq_class& epsilon, u64 seed,
                                u32 trials = kDefaultOpTrials,
                                u32 retries = kDefaultOpRetries);

// Randomized redistribution trading a slightly loose regularity parameter
// for a slightly perturbed partition: classes must partition the clique set
// of the base (checked exactly), each (epsilon+delta, d[i])-regular with
// sum(d) = 1, and the clique count must reach epsilon * m^k for m the
// smallest base part. Every clique joins a resample pool with probability
// root_threshold(delta, 3) and pool members are reassigned to class i with
// probability d[i]. The result keeps the partition by construction, moves
// at most nu * m^k edges per class (checked exactly), and each class is
// verified (epsilon, d[i])-regular, with redraws up to `retries`.
std::vector<Hypergraph> improve_regularity(
    const std::vector<Hypergraph>& classes, const Scaffold& base,
    std::span<const mpq_class> d, const mpq_class& epsilon,
    const mpq_class& delta, const mpq_class& nu, u64 seed,
    u32 trials = kDefaultOpTrials, u32 retries = kDefaultOpRetries);

// Moves H toward the target densities dg address by address: windows that
// already agree within 2 epsilon are kept, overfull polyads are sliced down
// (keep probability max{g/h, 1-g/h}, first branch on ties), underfull ones
// grow by slicing the complement of H inside the polyad's clique set.
// Requires fam an (epsilon, a, dh)-equitable partition of H (checked). The
// result G leaves non-crossing edges untouched, satisfies |H sym G| <=
// (dist(dh, dg) + nu) * C(n, k) exactly, and fam is verified a
// (3 epsilon, a, dg)-equitable partition of G, with redraws up to `retries`.
Hypergraph adjust_to_density(const Hypergraph& h,
                             const FamilyOfPartitions& fam,
                             const DensityFunction& dh,
                             const DensityFunction& dg,
                             const mpq_class& epsilon, const mpq_class& nu,
                             u64 seed, u32 trials = kDefaultOpTrials,
                             u32 retries = kDefaultOpRetries);

// Refinement to the part vector b (componentwise multiples of fam's a):
// vertex parts split into equal chunks deterministically; each higher class
// splits into b_j / a_j random slices of equal probability, and sets that
// cross the refined parts without crossing the original ones spread over
// all b_j classes uniformly. The input's parts must be balanced to floor/
// ceil. The result is validated as a family, checked equitable at
// root_threshold(epsilon, 3) with lambda dropped, and rebuilt on failure up
// to `retries` times (empty random slices count as failures).
FamilyOfPartitions refine_family(const FamilyOfPartitions& fam,
                                 const std::vector<u32>& b,
                                 const mpq_class& epsilon, u64 seed,
                                 u32 trials = kDefaultOpTrials,
                                 u32 retries = kDefaultOpRetries);

}  // namespace hypertest
