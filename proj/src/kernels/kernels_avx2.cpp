// AVX2 variants of the popcount kernels. This file is compiled with -mavx2;
// dispatch.cpp only hands out these entry points after checking CPU support,
// so nothing here may be called on a non-AVX2 machine.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

#include "hypertest/kernels.hpp"

namespace hypertest::kernels {

namespace {

// Per-byte popcount via a nibble lookup table; the caller widens byte sums
// to 64-bit lanes with _mm256_sad_epu8 after every vector, which is cheap
// enough and avoids counter-overflow bookkeeping.
inline __m256i byte_popcount(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3,
                                       3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3,
                                       2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                         _mm256_shuffle_epi8(lut, hi));
}

inline u64 horizontal_sum(__m256i acc) {
  __m128i lo = _mm256_castsi256_si128(acc);
  __m128i hi = _mm256_extracti128_si256(acc, 1);
  __m128i s = _mm_add_epi64(lo, hi);
  return (u64)_mm_cvtsi128_si64(s) + (u64)_mm_extract_epi64(s, 1);
}

// The four loop bodies differ only in how the input vector is combined;
// a tiny functor keeps the accumulation logic in one place.
template <class Combine>
inline u64 run(std::size_t words, Combine&& combine) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i v = combine(i);
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(byte_popcount(v),
                                                _mm256_setzero_si256()));
  }
  u64 s = horizontal_sum(acc);
  return s;
}

u64 popcount_avx2(const u64* a, std::size_t words) {
  std::size_t head = words & ~std::size_t(3);
  u64 s = run(words, [&](std::size_t i) {
    return _mm256_loadu_si256((const __m256i*)(a + i));
  });
  for (std::size_t i = head; i < words; ++i) s += std::popcount(a[i]);
  return s;
}

u64 xor_popcount_avx2(const u64* a, const u64* b, std::size_t words) {
  std::size_t head = words & ~std::size_t(3);
  u64 s = run(words, [&](std::size_t i) {
    return _mm256_xor_si256(_mm256_loadu_si256((const __m256i*)(a + i)),
                            _mm256_loadu_si256((const __m256i*)(b + i)));
  });
  for (std::size_t i = head; i < words; ++i) s += std::popcount(a[i] ^ b[i]);
  return s;
}

u64 and_popcount_avx2(const u64* a, const u64* b, std::size_t words) {
  std::size_t head = words & ~std::size_t(3);
  u64 s = run(words, [&](std::size_t i) {
    return _mm256_and_si256(_mm256_loadu_si256((const __m256i*)(a + i)),
                            _mm256_loadu_si256((const __m256i*)(b + i)));
  });
  for (std::size_t i = head; i < words; ++i) s += std::popcount(a[i] & b[i]);
  return s;
}

u64 andnot_popcount_avx2(const u64* a, const u64* b, std::size_t words) {
  std::size_t head = words & ~std::size_t(3);
  u64 s = run(words, [&](std::size_t i) {
    // _mm256_andnot_si256 computes ~x & y, so feed b first.
    return _mm256_andnot_si256(_mm256_loadu_si256((const __m256i*)(b + i)),
                               _mm256_loadu_si256((const __m256i*)(a + i)));
  });
  for (std::size_t i = head; i < words; ++i) s += std::popcount(a[i] & ~b[i]);
  return s;
}

u64 and3_popcount_avx2(const u64* a, const u64* b, const u64* c,
                       std::size_t words) {
  std::size_t head = words & ~std::size_t(3);
  u64 s = run(words, [&](std::size_t i) {
    __m256i v = _mm256_and_si256(_mm256_loadu_si256((const __m256i*)(a + i)),
                                 _mm256_loadu_si256((const __m256i*)(b + i)));
    return _mm256_and_si256(v, _mm256_loadu_si256((const __m256i*)(c + i)));
  });
  for (std::size_t i = head; i < words; ++i)
    s += std::popcount(a[i] & b[i] & c[i]);
  return s;
}

}  // namespace

const Ops* avx2() {
  static const Ops ops{
      "avx2",
      &popcount_avx2,
      &xor_popcount_avx2,
      &and_popcount_avx2,
      &andnot_popcount_avx2,
      &and3_popcount_avx2,
  };
  return &ops;
}

}  // namespace hypertest::kernels

#else

#include "hypertest/kernels.hpp"

namespace hypertest::kernels {
const Ops* avx2() { return nullptr; }
}  // namespace hypertest::kernels

#endif
