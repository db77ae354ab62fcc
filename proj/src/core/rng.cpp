#include "hypertest/rng.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace hypertest {

u64 SplitMix64::below(u64 bound) noexcept {
  if (bound <= 1) return 0;
  // Lemire reduction with rejection to stay exactly uniform.
  u64 reject_below = (0 - bound) % bound;
  while (true) {
    u64 x = next();
    unsigned __int128 m = (unsigned __int128)x * bound;
    if ((u64)m >= reject_below) return (u64)(m >> 64);
  }
}

u64 derive_seed(u64 master, u64 index) noexcept {
  SplitMix64 g(master ^ (0x632be59bd9b4e019ULL * (index + 1)));
  g.next();
  return g.next();
}

namespace {

constexpr u64 kOne53 = u64(1) << 53;

// Number of draws u in [0, 2^53) with u < c * 2^53, i.e. ceil(c * 2^53)
// clamped to [0, 2^53].
u64 cut_below(const mpq_class& c) {
  if (c <= 0) return 0;
  if (c >= 1) return kOne53;
  mpz_class num = c.get_num() << 53;
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), c.get_den().get_mpz_t());
  if (q > kOne53) return kOne53;
  return q.get_ui();
}

}  // namespace

BernoulliDraw::BernoulliDraw(const mpq_class& p) {
  if (p < 0 || p > 1) fail_invalid("Bernoulli probability outside [0,1]");
  threshold_ = cut_below(p);
}

CategoricalDraw::CategoricalDraw(std::span<const mpq_class> probs) {
  mpq_class cum = 0;
  cuts_.reserve(probs.size());
  for (const mpq_class& p : probs) {
    if (p < 0) fail_invalid("categorical probability below 0");
    cum += p;
    cuts_.push_back(cut_below(cum));
  }
  if (cum > 1) fail_invalid("categorical probabilities sum above 1");
}

u32 CategoricalDraw::sample(SplitMix64& g) const noexcept {
  u64 u = g.bits53();
  for (u32 i = 0; i < cuts_.size(); ++i)
    if (u < cuts_[i]) return i + 1;
  return 0;  // leftover mass
}

std::vector<u32> sample_subset(u32 n, u32 q, SplitMix64& g) {
  if (q > n) fail_invalid("sample_subset: q exceeds n");
  std::vector<u32> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  for (u32 i = 0; i < q; ++i) {
    u64 j = i + g.below(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(q);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<u64> sample_distinct(u64 universe, u64 m, SplitMix64& g) {
  if (m > universe) fail_invalid("sample_distinct: m exceeds universe");
  std::unordered_set<u64> chosen;
  chosen.reserve((std::size_t)m * 2);
  for (u64 j = universe - m; j < universe; ++j) {
    u64 t = g.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<u64> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hypertest
