#pragma once

#include <span>
#include <string>
#include <vector>

#include "hypertest/address.hpp"
#include "hypertest/common.hpp"
#include "hypertest/hypergraph.hpp"
#include "hypertest/partition.hpp"

namespace hypertest {

// "x1=[1,2] x2=[2,1]" rendering used by diagnostics.
std::string address_to_string(const AddressVector& x);

// Union of the classes selected by an address: a level-j graph whose edges
// are the j-sets grouped under that address, together with the vertex parts
// named by the address's labels. Level 1 carries the parts alone.
struct Polyad {
  u32 level = 0;
  AddressVector addr;
  std::vector<u32> part_labels;          // = addr.x1
  std::vector<std::vector<u32>> parts;   // vertex parts, aligned with labels
  Hypergraph edges;                      // level >= 2; empty handle otherwise
};

// i-sets spanned by a polyad: for level 1 the crossing i-sets of its parts,
// for level >= 2 the i-cliques of its edge graph.
std::vector<std::vector<u32>> polyad_cliques(const Polyad& p, u32 i,
                                             u64 cap = kDefaultEnumCap);
u64 count_polyad_cliques(const Polyad& p, u32 i, u64 cap = kDefaultEnumCap);
// Membership of one i-set in the span (all level-j subsets present).
bool polyad_spans(const Polyad& p, std::span<const u32> set);

// Lowered tower of polyads sharing one address prefix: parts at level 1 and
// an i-graph per level i in [2, top], each level underlying the next.
struct Complex {
  u32 n = 0;
  std::vector<u32> part_labels;
  std::vector<std::vector<u32>> parts;
  std::vector<Hypergraph> levels;  // levels[i-2] holds the i-graph

  u32 top() const noexcept { return (u32)levels.size() + 1; }
};

// Checks the underlying property level by level; throws Postcondition on
// violation (unreachable for graphs produced by valid families).
void validate_complex(const Complex& c);

// One supplied or extracted partition class: the j-graph assigned to
// (address, b) at level j.
struct ClassSpec {
  u32 level = 0;
  AddressVector addr;  // shape (level, level - 1)
  u32 b = 0;           // 1-based label within the polyad
  std::vector<std::vector<u32>> edges;
};

// Which structural requirement a family build violated.
enum class FamilyDefect {
  EmptyClass,    // a vertex part or a class has no elements
  NotAPartition, // classes of one polyad fail to tile its clique set
  BadClassMap,   // class keys missing, duplicated, or out of range
};

class FamilyBuildError : public Error {
 public:
  FamilyBuildError(FamilyDefect defect, u32 level, std::string address_text,
                   u32 b, const std::string& msg)
      : Error(ErrorKind::InvalidArgument, msg),
        defect_(defect),
        level_(level),
        address_text_(std::move(address_text)),
        b_(b) {}

  FamilyDefect defect() const noexcept { return defect_; }
  u32 level() const noexcept { return level_; }
  const std::string& address_text() const noexcept { return address_text_; }
  u32 b() const noexcept { return b_; }

 private:
  FamilyDefect defect_;
  u32 level_;
  std::string address_text_;
  u32 b_;
};

// Family of partitions on {0..n-1}: a vertex partition into a[0] parts plus,
// for each level j in [2, k-1], one j-graph class per (address, b) pair,
// where the classes of each address tile the clique set of its polyad.
// Immutable once built; every query is read-only.
class FamilyOfPartitions {
 public:
  u32 n() const noexcept { return n_; }
  u32 k() const noexcept { return k_; }
  const std::vector<u32>& a() const noexcept { return a_; }
  const VertexPartition& vertex_partition() const noexcept { return p1_; }
  u32 part_label(u32 v) const { return p1_.label_of(v); }

  // Canonically ordered address space A(j, j-1, a) for a level j in [2, k-1].
  const std::vector<AddressVector>& addresses(u32 j) const;
  u64 address_index(const AddressVector& x) const;  // rank within addresses()

  const Hypergraph& class_graph(u32 level, u64 addr_idx, u32 b) const;

  struct ClassRef {
    u32 level = 0;
    u64 addr_idx = 0;
    u32 b = 0;
  };
  // Class containing a crossing j-set, j in [2, k-1].
  ClassRef class_of(std::span<const u32> set) const;
  // Its label alone (the paper-facing query).
  u32 class_label(std::span<const u32> set) const;

  bool operator==(const FamilyOfPartitions& o) const;

 private:
  friend FamilyOfPartitions build_family(u32 n, u32 k, std::vector<u32> a,
                                         const std::vector<std::vector<u32>>& vertex_parts,
                                         const std::vector<ClassSpec>& classes);
  FamilyOfPartitions() = default;

  u32 n_ = 0;
  u32 k_ = 0;
  std::vector<u32> a_;
  VertexPartition p1_;
  // Indexed by level j (entries below 2 unused).
  std::vector<std::vector<AddressVector>> spaces_;
  std::vector<std::vector<Hypergraph>> classes_;  // [j][addr_idx * a_j + b-1]
  std::vector<std::vector<u64>> members_;  // sorted colex ranks per level
  std::vector<std::vector<u64>> member_slots_;  // aligned packed (addr_idx, b)
};

// Validates the construction requirements and assembles the family:
// nonempty vertex parts and classes, exactly one class per (address, b) key,
// and per-address classes tiling the polyad clique set. Throws
// FamilyBuildError naming the defect and the offending (level, address, b).
FamilyOfPartitions build_family(u32 n, u32 k, std::vector<u32> a,
                                const std::vector<std::vector<u32>>& vertex_parts,
                                const std::vector<ClassSpec>& classes);

// Inverse of build_family's input: all classes in canonical order.
std::vector<ClassSpec> extract_classes(const FamilyOfPartitions& fam);

// The polyad of an address at level x.level in [1, k-1]: the union of the
// classes picked out by x's top-level coordinates across its restrictions.
Polyad polyad(const FamilyOfPartitions& fam, const AddressVector& x);

// Tower {polyad of x truncated to level i} for i in [1, x.level];
// validated to be a complex before returning.
Complex polyad_complex(const FamilyOfPartitions& fam, const AddressVector& x);

// Address of a crossing set L: part labels plus, per level i in
// [2, min(k-1, |L|-1)], the class labels of L's i-subsets.
AddressVector address_of(const FamilyOfPartitions& fam,
                         std::span<const u32> set);

// Crossing j-sets of the family's vertex partition (the level-j ground set).
std::vector<std::vector<u32>> family_crossing_sets(
    const FamilyOfPartitions& fam, u32 j, u64 cap = kDefaultEnumCap);

}  // namespace hypertest
