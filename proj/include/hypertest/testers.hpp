#pragma once

#include <gmpxx.h>

#include <functional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypertest/common.hpp"
#include "hypertest/density.hpp"
#include "hypertest/equitable.hpp"
#include "hypertest/hypergraph.hpp"
#include "hypertest/partition.hpp"

namespace hypertest {

// Two-sided 95% Wilson score interval for `accepts` successes out of
// `trials`, clamped to [0,1]; the whole unit interval when trials is 0.
std::pair<double, double> wilson95(u64 accepts, u64 trials);

// Outcome of repeated independent runs of a sampling tester.
struct TesterReport {
  std::string property;
  u32 n = 0;
  u32 q = 0;
  u64 trials = 0;
  u64 accepts = 0;
  mpq_class frequency;                 // accepts / trials (0 when no trials)
  std::pair<double, double> wilson;    // 95% interval around frequency
  u64 seed = 0;
  std::vector<u32> sample_sizes;       // per-trial sample size
  std::vector<std::string> flags;      // caveats, e.g. heuristic decisions
};

// A single accept/reject run keyed by its own seed.
using Tester = std::function<bool(u64 seed)>;

// Runs `trials` independent trials with per-trial seeds derived from `seed`
// and assembles the report. Deterministic given (tester, trials, seed).
TesterReport run_trials(const std::string& property, u32 n, u32 q,
                        const Tester& tester, u64 trials, u64 seed,
                        std::vector<std::string> flags = {});

// Membership set of a canonical tester: signatures of the accepted
// q-vertex k-graphs, closed under isomorphism by construction.
struct DecisionSet {
  u32 q = 0;
  u32 k = 2;
  std::set<std::string> signatures;
};

// Signatures of the listed graphs (each must have q vertices, arity k).
DecisionSet make_decision_set(u32 q, u32 k,
                              std::span<const Hypergraph> members);

// All q-vertex k-graphs passing `keep`, by enumeration of the 2^C(q,k)
// labeled graphs (guarded by `cap` on that count).
DecisionSet decision_set_where(u32 q, u32 k,
                               const std::function<bool(const Hypergraph&)>& keep,
                               u64 cap = kDefaultEnumCap);

// Samples a uniform q-subset Q and accepts iff the signature of H[Q] lies
// in the decision set. In expectation the acceptance probability equals the
// induced-family density of the set.
bool canonical_tester(const Hypergraph& h, u32 q, const DecisionSet& dset,
                      u64 seed);

// Majority vote over 6r+1 independent runs of the base tester (accept iff
// at least 3r+1 accepts); lifts a 2/3-correct base to error probability
// at most 2 exp(-2 r^2 / (6r+1)).
Tester amplify(Tester base, u32 r);

// Exact maximum over all l-part labelings (empty parts allowed) of the
// number of crossing k-sets lying in H, normalized by C(n,k); ties broken
// by the lexicographically smallest label vector. Guard: l^n enumerable.
struct MaxcutResult {
  mpq_class value;
  VertexPartition partition;
};
MaxcutResult maxcut_exact(const Hypergraph& h, u32 ell);

// Normalized crossing-set count of the complete l-partite k-graph with the
// most balanced part sizes: C(n,k)^(-1) sum over k-subsets L of [l] of
// prod_{i in L} floor((n+i-1)/l). Zero when l < k.
mpq_class c_lk(u64 n, u32 ell, u32 k);

// Weighted density mass on the addresses whose label set crosses the
// blocks: k! prod_i a_i^(-C(k,i)) * sum over crossing addresses of d. The
// blocks must partition [a1]; empty blocks are allowed.
mpq_class cut_value(const DensityFunction& d,
                    const std::vector<std::vector<u32>>& blocks);

// Max of cut_value over all l-part labelings of [a1] (guard: l^a1).
mpq_class maxcut_of_density(const DensityFunction& d, u32 ell);

// Threshold decision "maxcut_l(H) >= c" with certificates where possible:
// exact enumeration under the guard; otherwise a certified lower bound
// (2-colorable components, local search from spectral and random starts)
// against a certified upper bound (edge count minus an edge-disjoint
// odd-cycle packing), then bounded branch and bound. `certified` is false
// only when the budget ran out and the best lower bound decided.
struct CutDecision {
  bool at_least = false;
  bool certified = true;
  mpq_class lower;  // best cut found, normalized
  mpq_class upper;  // best upper bound, normalized
};
CutDecision maxcut_at_least(const Hypergraph& h, u32 ell, const mpq_class& c,
                            u64 budget = 200000, u64 seed = 0);

// Knobs for the sampling testers.
struct TesterConfig {
  u32 q = 10;        // sample size
  mpq_class nu;      // closeness slack for the regularity-instance tester
  u64 budget = 200000;  // branch-and-bound node budget for cut decisions
};

// Samples q vertices and accepts iff maxcut_l(H[Q]) >= c - alpha/2, the
// decision made by maxcut_at_least.
bool test_maxcut(const Hypergraph& h, u32 ell, const mpq_class& c,
                 const mpq_class& alpha, const TesterConfig& cfg, u64 seed);

// Samples q vertices and accepts iff |t_inj(F, H[Q]) - p| <= delta + margin
// with margin = (alpha/4)^l * min{p - delta, 1 - p - delta, 1} clamped to
// [0, inf); the slack absorbs the sampling noise of the injective density.
bool test_hom_density(const Hypergraph& h, const Hypergraph& f,
                      const mpq_class& p, const mpq_class& delta,
                      const mpq_class& alpha, const TesterConfig& cfg,
                      u64 seed);

// Samples cfg.q vertices and accepts iff some graph on the sample within
// nu * C(q,k) edits satisfies the instance. At tiny scale (cfg.q <= 8 and
// edit budget <= 3) the decision is exact: breadth-first over edit sets,
// each candidate checked by the full partition search. Beyond that it is a
// documented heuristic: hill-climbing over balanced vertex labelings on
// the density-window edit count, accepting when the best labeling needs at
// most the budget (the per-polyad regularity clause is not re-edited).
bool test_regularity_instance(const Hypergraph& h, const RegularityInstance& r,
                              const mpq_class& alpha, const TesterConfig& cfg,
                              u64 seed);

// Moves the injective F-density of H into alpha_target +- 1/n by greedy
// single-edge edits inside a vertex subset of size (2 nu / alpha')^(1/l) n
// (alpha' = alpha_target for removal, 1 - alpha_target for addition),
// growing the subset if its capacity falls short. Requires t_inj(F,H)
// within alpha_target +- nu and 2 nu <= min{alpha, 1-alpha}; asserts the
// edit bound (2 nu / min{alpha, 1-alpha})^(1/l) C(n,k) afterwards.
Hypergraph repair_hom_density(const Hypergraph& h, const Hypergraph& f,
                              const mpq_class& alpha_target,
                              const mpq_class& nu);

// Raises maxcut_l to at least c by rebalancing the exact witness partition
// to the most balanced sizes and adding missing crossing k-sets in rank
// order until the cut reaches ceil(c C(n,k)). Requires maxcut_l(H)
// >= c - nu and c <= c_lk(n); asserts |G triangle H| <= beta C(n,k).
Hypergraph repair_maxcut(const Hypergraph& h, u32 ell, const mpq_class& c,
                         const mpq_class& nu, const mpq_class& beta);

// A testable property: an exact membership oracle plus an exact distance
// oracle (normalized minimum edit count into the property).
struct PropertySpec {
  std::string name;
  std::function<bool(const Hypergraph&)> membership;
  std::function<mpq_class(const Hypergraph&)> distance;
};

// Wraps a membership oracle with the generic distance search: flip sets of
// increasing size until a member appears (guard: C(n,k) <= 24).
PropertySpec make_property(std::string name,
                           std::function<bool(const Hypergraph&)> membership);

// maxcut_l(H) >= c, with an exact distance oracle by enumeration over
// labelings: additions toward the best-capacity labeling are optimal, so
// distance = min over labelings of the missing crossing-set count.
PropertySpec maxcut_property(u32 ell, const mpq_class& c);

// |t_inj(F, H) - p| <= delta, with the generic distance search.
PropertySpec hom_density_property(Hypergraph f, const mpq_class& p,
                                  const mpq_class& delta);

// Samples cfg.q vertices and accepts iff the sample's exact distance to
// the property is at most max(alpha - beta/2, 0); distinguishes
// (alpha-beta)-close graphs from alpha-far ones.
bool estimate_distance(const Hypergraph& h, const PropertySpec& p,
                       const mpq_class& alpha, const mpq_class& beta,
                       const TesterConfig& cfg, u64 seed);

// The property's exact distance oracle with the postcondition checks
// (range [0,1], zero iff membership).
mpq_class distance_to_property_exact(const Hypergraph& h,
                                     const PropertySpec& p);

}  // namespace hypertest
