#include "hypertest/address.hpp"

#include <algorithm>

namespace hypertest {

namespace {

// a_i^C(ell,i) with overflow detection.
u64 checked_pow(u64 base, u64 exp) {
  u64 r = 1;
  for (u64 e = 0; e < exp; ++e) {
    if (base != 0 && r > UINT64_MAX / base)
      fail_guard("address space size exceeds 64 bits");
    r *= base;
  }
  return r;
}

}  // namespace

u32 AddressVector::position_of(u32 label) const {
  auto it = std::lower_bound(x1.begin(), x1.end(), label);
  if (it == x1.end() || *it != label)
    fail_invalid("label not present in address");
  return (u32)(it - x1.begin());
}

u32 AddressVector::coord(std::span<const u32> labels) const {
  u32 i = (u32)labels.size();
  if (i < 2 || i > level) fail_invalid("coordinate level out of range");
  std::vector<u32> pos(i);
  for (u32 t = 0; t < i; ++t) pos[t] = position_of(labels[t]);
  return xi[i - 2][lex_rank(ell, pos)];
}

void validate_address(const AddressVector& x) {
  if (x.ell == 0) fail_invalid("address needs at least one position");
  if (x.level >= 1 && x.ell < x.level + 1)
    fail_invalid("address level exceeds position count minus one");
  if (x.a.size() < std::max(x.level, u32(1)))
    fail_invalid("part-count vector too short for address level");
  for (u32 ai : x.a)
    if (ai == 0) fail_invalid("part counts must be positive");
  if (x.x1.size() != x.ell) fail_invalid("x1 length mismatch");
  for (u32 t = 0; t < x.ell; ++t) {
    if (x.x1[t] < 1 || x.x1[t] > x.a[0])
      fail_invalid("x1 label out of range");
    if (t > 0 && x.x1[t - 1] >= x.x1[t])
      fail_invalid("x1 not strictly increasing");
  }
  if (x.xi.size() != (x.level >= 2 ? x.level - 1 : 0))
    fail_invalid("coordinate vector count mismatch");
  for (u32 i = 2; i <= x.level; ++i) {
    const auto& v = x.xi[i - 2];
    if (v.size() != binom(x.ell, i))
      fail_invalid("coordinate vector length mismatch");
    for (u32 e : v)
      if (e < 1 || e > x.a[i - 1])
        fail_invalid("coordinate entry out of range");
  }
}

u64 address_space_size(u32 ell, u32 level, const std::vector<u32>& a) {
  if (ell == 0) fail_invalid("address space needs ell >= 1");
  if (level >= 1 && ell < level + 1)
    fail_invalid("address space needs ell >= level + 1");
  if (a.size() < std::max(level, u32(1)))
    fail_invalid("part-count vector too short");
  if (binom_overflows(a[0], ell))
    fail_guard("address space size exceeds 64 bits");
  u64 total = binom(a[0], ell);
  for (u32 i = 2; i <= level; ++i) {
    u64 block = checked_pow(a[i - 1], binom(ell, i));
    if (block != 0 && total > UINT64_MAX / block)
      fail_guard("address space size exceeds 64 bits");
    total *= block;
  }
  return total;
}

u64 address_rank(const AddressVector& x) {
  validate_address(x);
  std::vector<u32> zero_based(x.ell);
  for (u32 t = 0; t < x.ell; ++t) zero_based[t] = x.x1[t] - 1;
  u64 rank = lex_rank(x.a[0], zero_based);
  for (u32 i = 2; i <= x.level; ++i) {
    u64 radix = x.a[i - 1];
    for (u32 m = 0; m < x.xi[i - 2].size(); ++m)
      rank = rank * radix + (x.xi[i - 2][m] - 1);
  }
  return rank;
}

AddressVector address_unrank(u32 ell, u32 level, const std::vector<u32>& a,
                             u64 rank) {
  u64 total = address_space_size(ell, level, a);
  if (rank >= total) fail_invalid("address rank out of range");
  AddressVector x;
  x.ell = ell;
  x.level = level;
  x.a = a;
  // Peel levels from the least significant end (highest level last).
  std::vector<std::vector<u32>> coords;
  for (u32 i = level; i >= 2; --i) {
    u64 len = binom(ell, i);
    u64 radix = a[i - 1];
    std::vector<u32> v(len);
    for (u64 m = len; m-- > 0;) {
      v[m] = (u32)(rank % radix) + 1;
      rank /= radix;
    }
    coords.push_back(std::move(v));
  }
  std::reverse(coords.begin(), coords.end());
  x.xi = std::move(coords);
  std::vector<u32> zero_based(ell);
  lex_unrank(a[0], ell, rank, zero_based);
  x.x1.resize(ell);
  for (u32 t = 0; t < ell; ++t) x.x1[t] = zero_based[t] + 1;
  return x;
}

std::vector<AddressVector> address_space(u32 ell, u32 level,
                                         const std::vector<u32>& a, u64 cap) {
  u64 total = address_space_size(ell, level, a);
  if (total > cap) fail_guard("address space enumeration exceeds cap");
  std::vector<AddressVector> out;
  out.reserve(total);
  for (u64 r = 0; r < total; ++r) out.push_back(address_unrank(ell, level, a, r));
  return out;
}

AddressVector restrict_to(const AddressVector& x,
                          std::span<const u32> positions, u32 level2) {
  validate_address(x);
  u32 ell2 = (u32)positions.size();
  if (ell2 == 0 || ell2 > x.ell) fail_invalid("restriction position count out of range");
  if (level2 > x.level) fail_invalid("restriction level exceeds source level");
  if (level2 >= 1 && ell2 < level2 + 1)
    fail_invalid("restriction needs ell2 >= level2 + 1");
  for (u32 t = 0; t < ell2; ++t) {
    if (positions[t] >= x.ell) fail_invalid("restriction position out of range");
    if (t > 0 && positions[t - 1] >= positions[t])
      fail_invalid("restriction positions not strictly increasing");
  }
  AddressVector y;
  y.ell = ell2;
  y.level = level2;
  y.a = x.a;
  y.x1.resize(ell2);
  for (u32 t = 0; t < ell2; ++t) y.x1[t] = x.x1[positions[t]];
  std::vector<u32> sub(ell2), mapped;
  for (u32 i = 2; i <= level2; ++i) {
    std::vector<u32> v(binom(ell2, i));
    first_subset(std::span<u32>(sub.data(), i));
    u64 m = 0;
    do {
      mapped.assign(sub.begin(), sub.begin() + i);
      for (u32 t = 0; t < i; ++t) mapped[t] = positions[sub[t]];
      v[m++] = x.xi[i - 2][lex_rank(x.ell, std::span<const u32>(mapped.data(), i))];
    } while (next_subset_lex(std::span<u32>(sub.data(), i), ell2));
    y.xi.push_back(std::move(v));
  }
  return y;
}

std::vector<AddressVector> restrictions(const AddressVector& x, u32 ell2,
                                        u32 level2) {
  validate_address(x);
  if (ell2 == 0 || ell2 > x.ell) fail_invalid("restriction position count out of range");
  std::vector<AddressVector> out;
  out.reserve(binom(x.ell, ell2));
  std::vector<u32> pos(ell2);
  first_subset(pos);
  do {
    out.push_back(restrict_to(x, pos, level2));
  } while (next_subset_lex(pos, x.ell));
  return out;
}

bool is_restriction(const AddressVector& y, const AddressVector& x) {
  validate_address(x);
  validate_address(y);
  u32 shared = (u32)std::min(x.a.size(), y.a.size());
  for (u32 i = 0; i < shared; ++i)
    if (x.a[i] != y.a[i]) fail_invalid("part-count vectors disagree");
  if (y.ell > x.ell || y.level > x.level) return false;
  std::vector<u32> pos(y.ell);
  for (u32 t = 0; t < y.ell; ++t) {
    auto it = std::lower_bound(x.x1.begin(), x.x1.end(), y.x1[t]);
    if (it == x.x1.end() || *it != y.x1[t]) return false;
    pos[t] = (u32)(it - x.x1.begin());
  }
  return restrict_to(x, pos, y.level) == y;
}

}  // namespace hypertest
