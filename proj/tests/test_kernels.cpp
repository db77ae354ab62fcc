#include <doctest.h>

#include <vector>

#include "hypertest/kernels.hpp"
#include "hypertest/rng.hpp"

using namespace hypertest;

TEST_SUITE_BEGIN("kernels");

namespace {

std::vector<u64> random_words(std::size_t n, u64 seed) {
  SplitMix64 g(seed);
  std::vector<u64> w(n);
  for (auto& x : w) x = g.next();
  return w;
}

}  // namespace

TEST_CASE("scalar and avx2 agree on random buffers including ragged tails") {
  const kernels::Ops& s = kernels::scalar();
  const kernels::Ops* v = kernels::avx2();
  if (v == nullptr) {
    MESSAGE("AVX2 unavailable on this machine; scalar-only run");
    return;
  }
  for (std::size_t words : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 15u, 64u, 129u}) {
    auto a = random_words(words, 11 + words);
    auto b = random_words(words, 77 + words);
    auto c = random_words(words, 133 + words);
    CHECK(s.popcount(a.data(), words) == v->popcount(a.data(), words));
    CHECK(s.xor_popcount(a.data(), b.data(), words) ==
          v->xor_popcount(a.data(), b.data(), words));
    CHECK(s.and_popcount(a.data(), b.data(), words) ==
          v->and_popcount(a.data(), b.data(), words));
    CHECK(s.andnot_popcount(a.data(), b.data(), words) ==
          v->andnot_popcount(a.data(), b.data(), words));
    CHECK(s.and3_popcount(a.data(), b.data(), c.data(), words) ==
          v->and3_popcount(a.data(), b.data(), c.data(), words));
  }
}

TEST_CASE("known counts") {
  std::vector<u64> a = {0xffffffffffffffffULL, 0x0, 0x1};
  CHECK(kernels::scalar().popcount(a.data(), 3) == 65);
  std::vector<u64> b = {0x0, 0xffffffffffffffffULL, 0x1};
  CHECK(kernels::scalar().xor_popcount(a.data(), b.data(), 3) == 128);
  CHECK(kernels::scalar().and_popcount(a.data(), b.data(), 3) == 1);
  CHECK(kernels::scalar().andnot_popcount(a.data(), b.data(), 3) == 64);
  const kernels::Ops* v = kernels::avx2();
  if (v != nullptr) {
    CHECK(v->popcount(a.data(), 3) == 65);
    CHECK(v->xor_popcount(a.data(), b.data(), 3) == 128);
  }
}

TEST_CASE("active dispatch returns a working implementation") {
  const kernels::Ops& ops = kernels::active();
  std::vector<u64> a = {0xf0f0f0f0f0f0f0f0ULL};
  CHECK(ops.popcount(a.data(), 1) == 32);
}

TEST_SUITE_END();
