#include "hypertest/binom.hpp"

#include <algorithm>

namespace hypertest {

namespace {

// Small Pascal triangle cache: rows 0..63 fit every coefficient in 64 bits
// only up to n=61 overall, so the cache stores saturated values too and the
// multiplicative path is never needed.
constexpr u32 kCacheRows = 64;

struct BinomCache {
  u64 c[kCacheRows][kCacheRows + 1];
  bool sat[kCacheRows][kCacheRows + 1];

  BinomCache() {
    for (u32 n = 0; n < kCacheRows; ++n) {
      for (u32 k = 0; k <= kCacheRows; ++k) {
        c[n][k] = 0;
        sat[n][k] = false;
      }
      c[n][0] = 1;
      if (n > 0) {
        for (u32 k = 1; k <= n; ++k) {
          u64 a = c[n - 1][k - 1];
          u64 b = c[n - 1][k];
          bool s = sat[n - 1][k - 1] || sat[n - 1][k] || a > UINT64_MAX - b;
          c[n][k] = s ? UINT64_MAX : a + b;
          sat[n][k] = s;
        }
      }
    }
  }
};

const BinomCache& cache() {
  static const BinomCache instance;
  return instance;
}

// Multiplicative evaluation with saturation for n >= kCacheRows.
u64 binom_big(u64 n, u64 k, bool* overflow) noexcept {
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (u64 i = 1; i <= k; ++i) {
    acc = acc * (n - k + i);
    acc /= i;  // exact: C(n-k+i, i) is integral
    if (acc > (unsigned __int128)UINT64_MAX) {
      // The running value can only grow from here (factors (n-k+i)/i >= 1).
      if (overflow) *overflow = true;
      return UINT64_MAX;
    }
  }
  if (overflow) *overflow = false;
  return (u64)acc;
}

}  // namespace

u64 binom(u64 n, u64 k) noexcept {
  if (k > n) return 0;
  if (n < kCacheRows) return cache().c[n][k];
  return binom_big(n, k, nullptr);
}

bool binom_overflows(u64 n, u64 k) noexcept {
  if (k > n) return false;
  if (n < kCacheRows) return cache().sat[n][k];
  bool ov = false;
  (void)binom_big(n, k, &ov);
  return ov;
}

u64 colex_rank(std::span<const u32> set) noexcept {
  u64 r = 0;
  for (u32 i = 0; i < set.size(); ++i) r += binom(set[i], i + 1);
  return r;
}

void colex_unrank(u64 rank, u32 k, std::span<u32> out) noexcept {
  // Greedy from the top: the largest element v satisfies C(v,k) <= rank.
  for (u32 i = k; i >= 1; --i) {
    u32 v = i - 1;
    while (binom(v + 1, i) <= rank) ++v;
    out[i - 1] = v;
    rank -= binom(v, i);
  }
}

bool next_subset_colex(std::span<u32> set, u32 n) noexcept {
  u32 k = (u32)set.size();
  for (u32 i = 0; i < k; ++i) {
    u32 limit = (i + 1 < k) ? set[i + 1] : n;
    if (set[i] + 1 < limit) {
      ++set[i];
      for (u32 j = 0; j < i; ++j) set[j] = j;
      return true;
    }
  }
  return false;
}

u64 lex_rank(u32 n, std::span<const u32> set) noexcept {
  u32 k = (u32)set.size();
  u64 r = 0;
  u32 prev = 0;  // next candidate value
  for (u32 i = 0; i < k; ++i) {
    for (u32 v = prev; v < set[i]; ++v) r += binom(n - 1 - v, k - 1 - i);
    prev = set[i] + 1;
  }
  return r;
}

void lex_unrank(u32 n, u32 k, u64 rank, std::span<u32> out) noexcept {
  u32 v = 0;
  for (u32 i = 0; i < k; ++i) {
    while (true) {
      u64 block = binom(n - 1 - v, k - 1 - i);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    out[i] = v++;
  }
}

bool next_subset_lex(std::span<u32> set, u32 n) noexcept {
  u32 k = (u32)set.size();
  for (u32 i = k; i-- > 0;) {
    if (set[i] < n - k + i) {
      ++set[i];
      for (u32 j = i + 1; j < k; ++j) set[j] = set[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void first_subset(std::span<u32> set) noexcept {
  for (u32 i = 0; i < set.size(); ++i) set[i] = i;
}

std::vector<std::vector<u32>> all_subsets_lex(u32 n, u32 k) {
  std::vector<std::vector<u32>> out;
  if (k > n) return out;
  out.reserve(binom(n, k));
  std::vector<u32> cur(k);
  first_subset(cur);
  if (k == 0) {
    out.push_back({});
    return out;
  }
  do {
    out.push_back(cur);
  } while (next_subset_lex(cur, n));
  return out;
}

u64 falling_factorial(u64 n, u64 k) noexcept {
  unsigned __int128 acc = 1;
  for (u64 i = 0; i < k; ++i) {
    if (n < i + 1) return 0;
    acc *= (n - i);
    if (acc > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
  }
  return (u64)acc;
}

}  // namespace hypertest
