#include <bit>

#include "hypertest/kernels.hpp"

namespace hypertest::kernels {

namespace {

u64 popcount_scalar(const u64* a, std::size_t words) {
  u64 s = 0;
  for (std::size_t i = 0; i < words; ++i) s += std::popcount(a[i]);
  return s;
}

u64 xor_popcount_scalar(const u64* a, const u64* b, std::size_t words) {
  u64 s = 0;
  for (std::size_t i = 0; i < words; ++i) s += std::popcount(a[i] ^ b[i]);
  return s;
}

u64 and_popcount_scalar(const u64* a, const u64* b, std::size_t words) {
  u64 s = 0;
  for (std::size_t i = 0; i < words; ++i) s += std::popcount(a[i] & b[i]);
  return s;
}

u64 andnot_popcount_scalar(const u64* a, const u64* b, std::size_t words) {
  u64 s = 0;
  for (std::size_t i = 0; i < words; ++i) s += std::popcount(a[i] & ~b[i]);
  return s;
}

u64 and3_popcount_scalar(const u64* a, const u64* b, const u64* c,
                         std::size_t words) {
  u64 s = 0;
  for (std::size_t i = 0; i < words; ++i) s += std::popcount(a[i] & b[i] & c[i]);
  return s;
}

}  // namespace

const Ops& scalar() {
  static const Ops ops{
      "scalar",
      &popcount_scalar,
      &xor_popcount_scalar,
      &and_popcount_scalar,
      &andnot_popcount_scalar,
      &and3_popcount_scalar,
  };
  return ops;
}

}  // namespace hypertest::kernels
