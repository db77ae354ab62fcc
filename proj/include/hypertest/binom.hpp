#pragma once

#include <span>
#include <vector>

#include "hypertest/common.hpp"

namespace hypertest {

// Binomial coefficient, saturating at UINT64_MAX when the true value does
// not fit into 64 bits. binom(n, 0) == 1, binom(n, k) == 0 for k > n.
u64 binom(u64 n, u64 k) noexcept;

// True if binom(n, k) overflows 64 bits (callers use this to reject
// representations rather than silently saturate).
bool binom_overflows(u64 n, u64 k) noexcept;

// ---- colexicographic order ------------------------------------------------
//
// Sorted k-subsets of {0..n-1} are identified with ranks in [0, C(n,k)) by
// colex: rank(v) = sum_i C(v[i], i+1). Colex has the prefix property used
// throughout: every subset of {0..m-1} has rank < C(m,k).

u64 colex_rank(std::span<const u32> set) noexcept;
void colex_unrank(u64 rank, u32 k, std::span<u32> out) noexcept;

// In-place successor in colex order; `set` must be sorted. Returns false
// when `set` was the last subset ({n-k..n-1}).
bool next_subset_colex(std::span<u32> set, u32 n) noexcept;

// ---- lexicographic order ----------------------------------------------------
//
// Address-vector coordinates are indexed by the lex rank of subsets; lex
// compares the sorted tuples entry by entry.

u64 lex_rank(u32 n, std::span<const u32> set) noexcept;
void lex_unrank(u32 n, u32 k, u64 rank, std::span<u32> out) noexcept;
bool next_subset_lex(std::span<u32> set, u32 n) noexcept;

// Fills `set` with {0,1,..,k-1}, the first subset in both orders.
void first_subset(std::span<u32> set) noexcept;

// All k-subsets of {0..n-1} in lex order (small n utility).
std::vector<std::vector<u32>> all_subsets_lex(u32 n, u32 k);

// Falling factorial n * (n-1) * ... * (n-k+1), saturating at UINT64_MAX.
u64 falling_factorial(u64 n, u64 k) noexcept;

}  // namespace hypertest
