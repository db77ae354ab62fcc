#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "hypertest/common.hpp"

namespace hypertest {

// Partition of the vertex set {0..n-1} into labelled parts. Labels are
// 1-based and equal to (index + 1). Raw vertex partitions may contain empty
// parts; partition families layer a nonemptiness requirement on top.
struct VertexPartition {
  u32 n = 0;
  std::vector<std::vector<u32>> parts;  // each sorted ascending

  u32 part_count() const noexcept { return (u32)parts.size(); }
  // 1-based label of the part containing v.
  u32 label_of(u32 v) const;

 private:
  friend VertexPartition make_vertex_partition(
      u32 n, const std::vector<std::vector<u32>>& parts);
  friend VertexPartition equipartition(u32 n, u32 t);
  std::vector<u32> label_;  // label_[v] in [1, parts.size()]
};

// Validates that `parts` partitions {0..n-1}: disjoint, in range, covering.
// Parts are sorted; empty parts are allowed.
VertexPartition make_vertex_partition(u32 n,
                                      const std::vector<std::vector<u32>>& parts);

// Contiguous partition into t parts of sizes floor(n/t) or floor(n/t)+1,
// larger parts first.
VertexPartition equipartition(u32 n, u32 t);

// Sorted distinct part labels met by the vertex set `s` ("cl" of a set).
std::vector<u32> labels_of(const VertexPartition& p, std::span<const u32> s);

// True when `s` meets every part at most once (and lies inside {0..n-1}).
bool is_crossing(const VertexPartition& p, std::span<const u32> s);

// Abstract partition of a finite element set. Classes hold sorted distinct
// element ids; the ground set is the union of the classes. Used for
// refinement arithmetic where elements are vertices or subset ranks.
using SetPartition = std::vector<std::vector<u64>>;

// Validates pairwise disjointness and sortedness; returns the ground size.
u64 set_partition_ground_size(const SetPartition& p);

// Exact refinement: every class of `fine` lies inside one class of `coarse`
// or inside ground(fine) \ ground(coarse). Requires nested ground sets.
bool refines(const SetPartition& fine, const SetPartition& coarse);

// Least nu such that some map f from classes of `fine` to classes of
// `coarse` plus the leftover ground(fine) \ ground(coarse) satisfies
// sum |A \ f(A)| <= nu * |ground(fine)|. The optimum assigns each class
// independently to its maximum-overlap target, so it is computed exactly.
mpq_class nu_refines(const SetPartition& fine, const SetPartition& coarse);

}  // namespace hypertest
