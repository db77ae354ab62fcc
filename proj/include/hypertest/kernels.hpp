#pragma once

#include <cstddef>

#include "hypertest/common.hpp"

namespace hypertest::kernels {

// Word-array population-count kernels. These sit under symmetric-difference
// sizes, pair/triple intersection counts and clique counting, which is where
// virtually all cycles go at the larger test scales. A scalar reference
// implementation always exists; an AVX2 variant is selected at runtime when
// the CPU supports it. HYPERTEST_KERNEL=scalar|avx2 forces a choice.
struct Ops {
  const char* name;
  u64 (*popcount)(const u64* a, std::size_t words);
  u64 (*xor_popcount)(const u64* a, const u64* b, std::size_t words);
  u64 (*and_popcount)(const u64* a, const u64* b, std::size_t words);
  u64 (*andnot_popcount)(const u64* a, const u64* b, std::size_t words);  // |a & ~b|
  u64 (*and3_popcount)(const u64* a, const u64* b, const u64* c, std::size_t words);
};

const Ops& scalar();

// nullptr when the running CPU lacks AVX2 (the translation unit is compiled
// with -mavx2, so it must never be entered on such machines).
const Ops* avx2();

// The dispatched implementation. Resolved once on first use.
const Ops& active();

}  // namespace hypertest::kernels
