#pragma once

#include <span>
#include <vector>

#include "hypertest/binom.hpp"
#include "hypertest/common.hpp"

namespace hypertest {

// Point of the address space A^(ell, level, a): a strictly increasing tuple
// x1 of `ell` part labels from [1, a1], plus for each i in [2, level] a
// coordinate vector of length C(ell, i) with entries in [1, a_i]. The entry
// for an i-subset of x1 sits at the lex rank of that subset.
//
// level == 0 carries x1 alone (ell == 1 gives the a1 singleton addresses).
struct AddressVector {
  u32 ell = 0;
  u32 level = 0;
  std::vector<u32> a;                // part counts; size >= max(level, 1)
  std::vector<u32> x1;               // size ell, strictly increasing, 1-based
  std::vector<std::vector<u32>> xi;  // xi[i-2] for i in [2, level]

  bool operator==(const AddressVector& o) const {
    return ell == o.ell && level == o.level && x1 == o.x1 && xi == o.xi;
  }

  // Coordinate lookup by sorted label subset of x1 (size i in [2, level]).
  u32 coord(std::span<const u32> labels) const;

  // Position (0-based index into x1) of a label; errors if absent.
  u32 position_of(u32 label) const;
};

// Shape checks: ell >= level + 1 when level >= 1 (ell >= 1 for level 0),
// a long enough with positive entries, x1 strictly increasing within
// [1, a[0]], coordinate vectors of length C(ell, i) within [1, a[i-1]].
void validate_address(const AddressVector& x);

// Number of addresses: C(a1, ell) * prod_{i=2}^{level} a_i^C(ell, i).
// Errors if the count does not fit into 64 bits.
u64 address_space_size(u32 ell, u32 level, const std::vector<u32>& a);

// Rank of an address in the canonical enumeration: lex rank of x1 is most
// significant, then the level-2 coordinates as big-endian digits, then
// level 3, and so on (the lexicographically last subset varies fastest).
u64 address_rank(const AddressVector& x);
AddressVector address_unrank(u32 ell, u32 level, const std::vector<u32>& a,
                             u64 rank);

// All addresses in canonical rank order. Errors when the count exceeds cap.
std::vector<AddressVector> address_space(u32 ell, u32 level,
                                         const std::vector<u32>& a,
                                         u64 cap = kDefaultEnumCap);

// Restriction of x to the ell2 positions listed in `positions` (sorted,
// 0-based indices into x.x1), truncated to `level2` <= min(x.level,
// ell2 - 1, or 0 for ell2 == 1). Coordinates carry over by label subset.
AddressVector restrict_to(const AddressVector& x,
                          std::span<const u32> positions, u32 level2);

// All C(ell, ell2) restrictions at shape (ell2, level2), ordered by the lex
// rank of the chosen position subset.
std::vector<AddressVector> restrictions(const AddressVector& x, u32 ell2,
                                        u32 level2);

// True iff y's labels form a subset of x's and every coordinate of y equals
// the corresponding coordinate of x. Errors when the shared entries of the
// part-count vectors disagree (incomparable spaces).
bool is_restriction(const AddressVector& y, const AddressVector& x);

}  // namespace hypertest
