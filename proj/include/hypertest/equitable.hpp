#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypertest/density.hpp"
#include "hypertest/family.hpp"

namespace hypertest {

class Hypergraph;

enum class EquitableClause {
  PartSizes,       // a vertex part leaves the balance window
  ComplexRegular,  // a class misses (eps, 1/a_j) over its polyad
  DensityWindow,   // H misses (eps, d(x)) over a top-level polyad
};

struct ClauseViolation {
  EquitableClause clause = EquitableClause::PartSizes;
  std::string where;
  std::string detail;
};

// Verdict of an equitability check. `sound` is false when some regularity
// sub-check ran beyond the exact guard and had to sample; a violation is
// conclusive either way. `eta` reports the tightest part-count threshold
// the family meets, which is always 1/a1.
struct EquitableReport {
  bool passed = false;
  bool sound = true;
  mpq_class eta;
  std::vector<ClauseViolation> violations;
  u64 checks = 0;  // regularity sub-checks run
};

// Balance and internal regularity of the family: every part size within
// (1 +- lambda) n/a1 (within {floor(n/a1), floor(n/a1)+1} when lambda is
// absent), and for k >= 3 every class regular at (eps, 1/a_j) over its
// polyad, across all polyads supporting at least one spanned k-set.
// Sub-checks are exhaustive when the base fits the exact guard and sampled
// otherwise, with per-check seeds derived from `seed`.
EquitableReport check_equitable(const FamilyOfPartitions& fam,
                                const mpq_class& eps,
                                const std::optional<mpq_class>& lambda,
                                u32 trials = 64, u64 seed = 0);

// The above (lambda absent) plus the density windows: H regular at
// (eps, d(x)) over the top-level polyad of every address x.
EquitableReport check_equitable_partition_of(const FamilyOfPartitions& fam,
                                             const Hypergraph& h,
                                             const mpq_class& eps,
                                             const DensityFunction& d,
                                             u32 trials = 64, u64 seed = 0);

// Configured counting threshold stand-in (gamma * d0)^(2^l); the k slot is
// carried so sharper bounds can drop in without interface changes.
mpq_class eps_cnt(const mpq_class& gamma, const mpq_class& d0, u32 k, u32 l);

// Default instance threshold t^(-4^k) * eps_cnt(1/t, 1/t, k-1, k) / 8,
// strictly inside the /4 budget and decreasing in both arguments.
mpq_class eps_def(u32 t, u32 k);

using ThresholdFn = std::function<mpq_class(u32 t, u32 k)>;

// The checkable property R = (epsilon, a, d): a k-graph H satisfies R when
// some family of partitions over its vertices forms an (epsilon, a, d)-
// equitable partition of H.
struct RegularityInstance {
  u32 k = 2;
  mpq_class epsilon;
  std::vector<u32> a;
  DensityFunction d;
  ThresholdFn threshold;  // the eps_def in force when the instance was made
};

// Validates shape agreement and 0 < epsilon <= threshold(max a, k). The
// default threshold is eps_def.
RegularityInstance make_instance(u32 k, mpq_class epsilon, std::vector<u32> a,
                                 DensityFunction d,
                                 ThresholdFn threshold = nullptr);

// 1 / epsilon.
mpq_class complexity(const RegularityInstance& r);

// Outcome of a satisfies-instance query. `partition` holds the validated
// or discovered family when satisfied; `report` the equitability detail of
// the supplied witness (witness mode) or of the confirmed family (search
// mode, default-constructed on a miss); `examined` the candidate count.
struct SatisfiesResult {
  bool satisfied = false;
  bool sound = true;
  std::optional<FamilyOfPartitions> partition;
  EquitableReport report;
  u64 examined = 0;
};

// Witness mode: validates that the supplied family is an (epsilon, a, d)-
// equitable partition of H for the instance's parameters.
SatisfiesResult satisfies_instance(const Hypergraph& h,
                                   const RegularityInstance& r,
                                   const FamilyOfPartitions& witness,
                                   u32 trials = 64, u64 seed = 0);

// Search mode: exhaustive over balanced labeled vertex partitions into a1
// parts; class partitions above the vertex level are forced complete
// (a_j = 1) or provably impossible at instance-scale epsilon, see the
// implementation note. Guard: n <= 12 and max(a) <= 3.
SatisfiesResult satisfies_instance_search(const Hypergraph& h,
                                          const RegularityInstance& r,
                                          u32 trials = 64, u64 seed = 0);

}  // namespace hypertest
