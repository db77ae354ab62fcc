#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "hypertest/common.hpp"

namespace hypertest {

// SplitMix64: the single PRNG used everywhere. Per-trial generators are
// derived by mixing the master seed with the trial index (see derive_seed),
// which makes every report bit-identical regardless of thread count.
class SplitMix64 {
 public:
  explicit SplitMix64(u64 seed) : state_(seed) {}

  u64 next() noexcept {
    u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Top 53 bits: the resolution at which uniform draws are compared against
  // rational thresholds.
  u64 bits53() noexcept { return next() >> 11; }

  double unit() noexcept { return (double)bits53() * 0x1p-53; }

  // Unbiased uniform integer in [0, bound), bound >= 1.
  u64 below(u64 bound) noexcept;

 private:
  u64 state_;
};

// Stream derivation: two extra scrambling rounds over (master, index) so
// that adjacent indices land in unrelated states.
u64 derive_seed(u64 master, u64 index) noexcept;

// Bernoulli(p) for rational p in [0,1], decided by comparing a 53-bit draw
// against floor/ceil of p * 2^53 (exact when that product is integral,
// within 2^-53 otherwise).
class BernoulliDraw {
 public:
  explicit BernoulliDraw(const mpq_class& p);

  bool sample(SplitMix64& g) const noexcept { return g.bits53() < threshold_; }

  u64 threshold() const noexcept { return threshold_; }

 private:
  u64 threshold_;  // accept iff bits53 < threshold_
};

// Categorical draw over rational probabilities p_1..p_s with sum <= 1;
// returns an index in {0,..,s} where 0 means "leftover" mass 1 - sum(p).
class CategoricalDraw {
 public:
  explicit CategoricalDraw(std::span<const mpq_class> probs);

  u32 sample(SplitMix64& g) const noexcept;

 private:
  std::vector<u64> cuts_;  // ascending 53-bit cutpoints, one per category
};

// Sorted uniform q-subset of {0..n-1} without replacement.
std::vector<u32> sample_subset(u32 n, u32 q, SplitMix64& g);

// m distinct uniform values from {0..universe-1} (Floyd's algorithm),
// returned sorted.
std::vector<u64> sample_distinct(u64 universe, u64 m, SplitMix64& g);

}  // namespace hypertest
