#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>

#include "hypertest/binom.hpp"
#include "hypertest/iso.hpp"
#include "hypertest/random_ops.hpp"
#include "hypertest/rational.hpp"
#include "hypertest/rng.hpp"
#include "hypertest/testers.hpp"

namespace hypertest {

namespace {

mpq_class mpq_pow(const mpq_class& base, u32 exp) {
  mpq_class out = 1;
  for (u32 i = 0; i < exp; ++i) out *= base;
  return out;
}

mpq_class clamp_nonneg(mpq_class q) { return q < 0 ? mpq_class(0) : q; }

}  // namespace

std::pair<double, double> wilson95(u64 accepts, u64 trials) {
  if (trials == 0) return {0.0, 1.0};
  if (accepts > trials) fail_invalid("more accepts than trials");
  const double z = 1.959963984540054;
  double n = (double)trials;
  double ph = (double)accepts / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (ph + z2 / (2.0 * n)) / denom;
  double half = z * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n)) / denom;
  // The algebra gives exactly 0 and 1 at the boundary counts; pin them so
  // rounding cannot pull the interval off the endpoints.
  double lo = accepts == 0 ? 0.0 : std::max(0.0, center - half);
  double hi = accepts == trials ? 1.0 : std::min(1.0, center + half);
  return {lo, hi};
}

TesterReport run_trials(const std::string& property, u32 n, u32 q,
                        const Tester& tester, u64 trials, u64 seed,
                        std::vector<std::string> flags) {
  if (!tester) fail_invalid("tester is empty");
  TesterReport rep;
  rep.property = property;
  rep.n = n;
  rep.q = q;
  rep.trials = trials;
  rep.seed = seed;
  rep.flags = std::move(flags);
  rep.sample_sizes.reserve(trials);
  for (u64 t = 0; t < trials; ++t) {
    if (tester(derive_seed(seed, t))) ++rep.accepts;
    rep.sample_sizes.push_back(q);
  }
  rep.frequency = trials == 0 ? mpq_class(0) : frac(rep.accepts, trials);
  rep.wilson = wilson95(rep.accepts, trials);
  return rep;
}

DecisionSet make_decision_set(u32 q, u32 k,
                              std::span<const Hypergraph> members) {
  if (q < k) fail_invalid("sample size below the arity");
  DecisionSet d;
  d.q = q;
  d.k = k;
  for (const Hypergraph& m : members) {
    if (m.n() != q || m.k() != k)
      fail_invalid("member shape disagrees with the set");
    d.signatures.insert(canonical_signature(m));
  }
  return d;
}

DecisionSet decision_set_where(
    u32 q, u32 k, const std::function<bool(const Hypergraph&)>& keep,
    u64 cap) {
  if (q < k) fail_invalid("sample size below the arity");
  if (!keep) fail_invalid("predicate is empty");
  u64 ranks = binom(q, k);
  if (ranks >= 63 || (u64(1) << ranks) > cap)
    fail_guard("labeled graph count exceeds the cap");
  DecisionSet d;
  d.q = q;
  d.k = k;
  for (u64 mask = 0; mask < (u64(1) << ranks); ++mask) {
    Hypergraph g(q, k);
    for (u64 r = 0; r < ranks; ++r)
      if ((mask >> r) & 1) g.set_rank(r, true);
    if (keep(g)) d.signatures.insert(canonical_signature(g));
  }
  return d;
}

bool canonical_tester(const Hypergraph& h, u32 q, const DecisionSet& dset,
                      u64 seed) {
  if (q != dset.q || h.k() != dset.k)
    fail_invalid("sample shape disagrees with the decision set");
  if (q > h.n()) fail_invalid("sample exceeds the graph");
  SplitMix64 g(seed);
  std::vector<u32> qset = sample_subset(h.n(), q, g);
  return dset.signatures.count(canonical_signature(induced(h, qset))) > 0;
}

Tester amplify(Tester base, u32 r) {
  if (!base) fail_invalid("tester is empty");
  if (r < 1) fail_invalid("amplification needs r >= 1");
  return [base = std::move(base), r](u64 seed) {
    u64 accepts = 0;
    u64 runs = 6ull * r + 1;
    for (u64 i = 0; i < runs; ++i)
      if (base(derive_seed(seed, i))) ++accepts;
    return accepts >= 3ull * r + 1;
  };
}

bool test_hom_density(const Hypergraph& h, const Hypergraph& f,
                      const mpq_class& p, const mpq_class& delta,
                      const mpq_class& alpha, const TesterConfig& cfg,
                      u64 seed) {
  if (f.k() != h.k()) fail_invalid("pattern arity disagrees with the graph");
  if (cfg.q < f.n() || cfg.q > h.n())
    fail_invalid("sample size outside [pattern order, n]");
  if (p < 0 || p > 1) fail_invalid("target density outside [0, 1]");
  if (delta < 0) fail_invalid("window radius must be nonnegative");
  if (alpha <= 0 || alpha > 1) fail_invalid("alpha must lie in (0, 1]");
  SplitMix64 g(seed);
  std::vector<u32> qset = sample_subset(h.n(), cfg.q, g);
  mpq_class t = t_inj(f, induced(h, qset));
  mpq_class slack = p - delta;
  mpq_class other = 1 - p - delta;
  if (other < slack) slack = other;
  if (slack > 1) slack = 1;
  mpq_class margin = mpq_pow(alpha / 4, f.n()) * clamp_nonneg(slack);
  return abs(t - p) <= delta + margin;
}

namespace {

// Density-window edit count of one balanced labeling: for each address the
// distance from the crossing-edge count to [ceil((d-eps)M), floor((d+eps)M)].
struct WindowObjective {
  u32 a1 = 0;
  u32 k = 2;
  std::vector<std::vector<u32>> edges;        // sorted vertex tuples
  std::vector<std::vector<u32>> edges_at;     // edge ids per vertex
  std::vector<u64> volume;                    // M_x per address (lex by x1)
  std::vector<u64> lo, hi;                    // windows per address
  std::vector<u64> count;                     // crossing edges per address
  std::vector<u32> label;                     // 1-based part labels

  // Lex rank of the sorted distinct label set, or UINT64_MAX if repeated.
  u64 address_of(const std::vector<u32>& verts) const {
    std::vector<u32> labs(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
      labs[i] = label[verts[i]] - 1;
    std::sort(labs.begin(), labs.end());
    for (std::size_t i = 0; i + 1 < labs.size(); ++i)
      if (labs[i] == labs[i + 1]) return UINT64_MAX;
    return lex_rank(a1, labs);
  }

  void recount() {
    std::fill(count.begin(), count.end(), 0);
    for (const std::vector<u32>& e : edges) {
      u64 x = address_of(e);
      if (x != UINT64_MAX) ++count[x];
    }
  }

  u64 objective() const {
    u64 total = 0;
    for (std::size_t x = 0; x < count.size(); ++x) {
      if (count[x] < lo[x]) total += lo[x] - count[x];
      if (count[x] > hi[x]) total += count[x] - hi[x];
    }
    return total;
  }

  void swap_labels(u32 u, u32 w) {
    for (u32 id : edges_at[u]) {
      const std::vector<u32>& e = edges[id];
      if (std::find(e.begin(), e.end(), w) != e.end()) continue;
      u64 x = address_of(e);
      if (x != UINT64_MAX) --count[x];
    }
    for (u32 id : edges_at[w]) {
      const std::vector<u32>& e = edges[id];
      if (std::find(e.begin(), e.end(), u) != e.end()) continue;
      u64 x = address_of(e);
      if (x != UINT64_MAX) --count[x];
    }
    std::swap(label[u], label[w]);
    for (u32 id : edges_at[u]) {
      const std::vector<u32>& e = edges[id];
      if (std::find(e.begin(), e.end(), w) != e.end()) continue;
      u64 x = address_of(e);
      if (x != UINT64_MAX) ++count[x];
    }
    for (u32 id : edges_at[w]) {
      const std::vector<u32>& e = edges[id];
      if (std::find(e.begin(), e.end(), u) != e.end()) continue;
      u64 x = address_of(e);
      if (x != UINT64_MAX) ++count[x];
    }
  }
};

}  // namespace

bool test_regularity_instance(const Hypergraph& h, const RegularityInstance& r,
                              const mpq_class& alpha, const TesterConfig& cfg,
                              u64 seed) {
  u32 k = h.k();
  if (r.k != k) fail_invalid("instance arity disagrees with the graph");
  if (cfg.q < k || cfg.q > h.n()) fail_invalid("sample size outside [k, n]");
  if (cfg.q < r.a[0]) fail_invalid("sample smaller than the part count");
  if (cfg.nu < 0) fail_invalid("closeness slack must be nonnegative");
  if (alpha <= 0 || alpha > 1) fail_invalid("alpha must lie in (0, 1]");
  SplitMix64 g(seed);
  std::vector<u32> qset = sample_subset(h.n(), cfg.q, g);
  Hypergraph s = induced(h, qset);
  u64 ranks = binom(cfg.q, k);
  u64 edits = floor_to_u64(cfg.nu * mpq_class((unsigned long)ranks));
  u32 amax = *std::max_element(r.a.begin(), r.a.end());
  if (cfg.q <= 8 && edits <= 3 && amax <= 3) {
    // Exact decision: breadth-first over edit sets, each candidate settled
    // by the exhaustive partition search.
    if (satisfies_instance_search(s, r, 32, derive_seed(seed, 1)).satisfied)
      return true;
    u64 tag = 2;
    for (u64 size = 1; size <= edits; ++size) {
      std::vector<u32> sub(size);
      first_subset(std::span<u32>(sub));
      do {
        Hypergraph cand = s;
        for (u32 t = 0; t < size; ++t)
          cand.set_rank(sub[t], !s.has_rank(sub[t]));
        if (satisfies_instance_search(cand, r, 32, derive_seed(seed, tag++))
                .satisfied)
          return true;
      } while (next_subset_lex(std::span<u32>(sub), (u32)ranks));
    }
    return false;
  }
  for (std::size_t j = 1; j < r.a.size(); ++j)
    if (r.a[j] != 1)
      fail_guard("the closeness heuristic needs complete higher classes");
  u32 a1 = r.a[0];
  // Balanced part sizes on the sample, larger parts first.
  std::vector<u32> sizes(a1, cfg.q / a1);
  for (u32 i = 0; i < cfg.q % a1; ++i) ++sizes[i];
  WindowObjective obj;
  obj.a1 = a1;
  obj.k = k;
  s.for_each_edge([&](std::span<const u32> e) {
    obj.edges.emplace_back(e.begin(), e.end());
  });
  obj.edges_at.resize(cfg.q);
  for (u32 id = 0; id < obj.edges.size(); ++id)
    for (u32 v : obj.edges[id]) obj.edges_at[v].push_back(id);
  std::vector<AddressVector> space = address_space(k, k - 1, r.a);
  obj.volume.resize(space.size());
  obj.lo.resize(space.size());
  obj.hi.resize(space.size());
  obj.count.resize(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    u64 m = 1;
    for (u32 lab : space[x].x1) m *= sizes[lab - 1];
    obj.volume[x] = m;
    const mpq_class& d = r.d.values[x];
    obj.lo[x] = ceil_to_u64(clamp_nonneg((d - r.epsilon) * mpq_class((unsigned long)m)));
    mpq_class top = (d + r.epsilon) * mpq_class((unsigned long)m);
    obj.hi[x] = top >= m ? m : floor_to_u64(top);
  }
  // Hill-climbing with label swaps from seeded balanced starts; accept as
  // soon as some labeling needs at most the edit budget.
  u64 best = UINT64_MAX;
  for (u32 restart = 0; restart < 6 && best > edits; ++restart) {
    std::vector<u32> perm(cfg.q);
    std::iota(perm.begin(), perm.end(), 0u);
    SplitMix64 rg(derive_seed(seed, 100 + restart));
    for (u32 i = cfg.q; i > 1; --i)
      std::swap(perm[i - 1], perm[rg.below(i)]);
    obj.label.assign(cfg.q, 0);
    u32 at = 0;
    for (u32 part = 0; part < a1; ++part)
      for (u32 c = 0; c < sizes[part]; ++c) obj.label[perm[at++]] = part + 1;
    obj.recount();
    u64 cur = obj.objective();
    bool improved = true;
    for (u32 sweep = 0; sweep < 60 && improved && cur > edits; ++sweep) {
      improved = false;
      for (u32 u = 0; u < cfg.q && cur > edits; ++u)
        for (u32 w = u + 1; w < cfg.q; ++w) {
          if (obj.label[u] == obj.label[w]) continue;
          obj.swap_labels(u, w);
          u64 cand = obj.objective();
          if (cand < cur) {
            cur = cand;
            improved = true;
            if (cur <= edits) break;
          } else {
            obj.swap_labels(u, w);
          }
        }
    }
    best = std::min(best, cur);
  }
  return best <= edits;
}

Hypergraph repair_hom_density(const Hypergraph& h, const Hypergraph& f,
                              const mpq_class& alpha_target,
                              const mpq_class& nu) {
  u32 k = h.k(), n = h.n(), l = f.n();
  if (f.k() != k) fail_invalid("pattern arity disagrees with the graph");
  if (l > n) fail_invalid("pattern larger than the graph");
  if (alpha_target < 0 || alpha_target > 1)
    fail_invalid("target density outside [0, 1]");
  if (nu < 0) fail_invalid("closeness slack must be nonnegative");
  mpq_class lo = alpha_target - frac(1, n);
  mpq_class hi = alpha_target + frac(1, n);
  if (f.edge_count() == 0) {
    // The injective density of an edgeless pattern is constantly one.
    if (1 >= lo && 1 <= hi) return h;
    fail_invalid("edgeless pattern has constant density one");
  }
  mpq_class t = t_inj(f, h);
  if (abs(t - alpha_target) > nu)
    fail_invalid("density not within the stated slack");
  if (t >= lo && t <= hi) return h;
  mpq_class low_side = 1 - alpha_target;
  if (alpha_target < low_side) low_side = alpha_target;
  if (2 * nu > low_side)
    fail_invalid("slack too large for the target (needs 2 nu <= min(a, 1-a))");
  bool over = t > hi;
  mpq_class ratio = 2 * nu / (over ? alpha_target : 1 - alpha_target);
  if (ratio > 1) ratio = 1;
  mpq_class eps = root_threshold(ratio, l);
  u64 s0 = ceil_to_u64(eps * n);
  s0 = std::max<u64>(s0, k);
  s0 = std::min<u64>(s0, n);
  // Edits concentrate where they act: the densest vertices carry the
  // removals, the sparsest receive the additions.
  std::vector<u64> deg(n, 0);
  h.for_each_edge([&](std::span<const u32> e) {
    for (u32 v : e) ++deg[v];
  });
  std::vector<u32> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](u32 x, u32 y) {
    if (deg[x] != deg[y]) return over ? deg[x] > deg[y] : deg[x] < deg[y];
    return x < y;
  });
  Hypergraph g = h;
  bool done = false;
  for (u64 s = s0; s <= n && !done; ++s) {
    std::vector<u32> comb(k);
    first_subset(std::span<u32>(comb));
    do {
      std::vector<u32> verts(k);
      for (u32 i = 0; i < k; ++i) verts[i] = order[comb[i]];
      if (g.has_edge(verts) != over) continue;
      g.set_edge(verts, !over);
      mpq_class tg = t_inj(f, g);
      if (tg == t) {
        g.set_edge(verts, over);  // inert flip, keep the budget
        continue;
      }
      t = tg;
      if (over ? t <= hi : t >= lo) {
        if (over ? t < lo : t > hi)
          fail_postcondition("edit step overshot the window");
        done = true;
      }
    } while (!done && next_subset_lex(std::span<u32>(comb), (u32)s));
  }
  if (!done) fail_postcondition("density window unreachable by interior edits");
  mpq_class bound_ratio = 2 * nu / low_side;
  if (bound_ratio > 1) bound_ratio = 1;
  mpq_class bound = root_threshold(bound_ratio, l) *
                    mpq_class((unsigned long)binom(n, k));
  if (mpq_class((unsigned long)sym_diff_size(g, h)) > bound)
    fail_postcondition("edit count exceeds the stated bound");
  return g;
}

Hypergraph repair_maxcut(const Hypergraph& h, u32 ell, const mpq_class& c,
                         const mpq_class& nu, const mpq_class& beta) {
  u32 n = h.n(), k = h.k();
  if (c < 0) fail_invalid("cut target must be nonnegative");
  if (nu < 0 || beta < 0) fail_invalid("slacks must be nonnegative");
  if (c > c_lk(n, ell, k))
    fail_invalid("cut target exceeds the multipartite bound");
  MaxcutResult mc = maxcut_exact(h, ell);
  if (mc.value < c - nu) fail_invalid("cut deficit exceeds the stated slack");
  if (mc.value >= c) return h;
  u64 cnk = binom(n, k);
  u64 need = ceil_to_u64(c * mpq_class((unsigned long)cnk));
  // Rebalance the witness to the most balanced sizes, pairing larger parts
  // with larger targets and moving the largest vertex ids.
  std::vector<u64> target(ell);
  for (u32 i = 1; i <= ell; ++i) target[i - 1] = (n + i - 1) / ell;
  std::vector<u32> by_size(ell), by_target(ell);
  std::iota(by_size.begin(), by_size.end(), 0u);
  std::iota(by_target.begin(), by_target.end(), 0u);
  std::vector<std::vector<u32>> parts = mc.partition.parts;
  std::stable_sort(by_size.begin(), by_size.end(), [&](u32 x, u32 y) {
    return parts[x].size() > parts[y].size();
  });
  std::stable_sort(by_target.begin(), by_target.end(), [&](u32 x, u32 y) {
    return target[x] > target[y];
  });
  std::vector<u64> goal(ell);
  for (u32 i = 0; i < ell; ++i) goal[by_size[i]] = target[by_target[i]];
  std::vector<u32> pool;
  for (u32 p = 0; p < ell; ++p)
    while (parts[p].size() > goal[p]) {
      pool.push_back(parts[p].back());
      parts[p].pop_back();
    }
  std::sort(pool.begin(), pool.end());
  std::size_t next = 0;
  for (u32 p = 0; p < ell; ++p)
    while (parts[p].size() < goal[p]) parts[p].push_back(pool[next++]);
  VertexPartition balanced = make_vertex_partition(n, parts);
  // Add missing crossing k-sets in enumeration order until the cut of the
  // rebalanced partition reaches the target.
  Hypergraph g = h;
  std::vector<std::vector<u32>> crossing =
      crossing_sets(balanced.parts, k, kDefaultEnumCap);
  u64 cur = 0;
  for (const std::vector<u32>& e : crossing)
    if (g.has_edge(e)) ++cur;
  for (std::size_t i = 0; i < crossing.size() && cur < need; ++i)
    if (!g.has_edge(crossing[i])) {
      g.set_edge(crossing[i], true);
      ++cur;
    }
  if (cur < need)
    fail_postcondition("crossing capacity below the cut target");
  if (mpq_class((unsigned long)sym_diff_size(g, h)) >
      beta * mpq_class((unsigned long)cnk))
    fail_postcondition("edit count exceeds the stated bound");
  return g;
}

PropertySpec make_property(std::string name,
                           std::function<bool(const Hypergraph&)> membership) {
  if (!membership) fail_invalid("membership oracle is empty");
  PropertySpec p;
  p.name = std::move(name);
  p.membership = std::move(membership);
  std::function<bool(const Hypergraph&)> member = p.membership;
  p.distance = [member](const Hypergraph& h) -> mpq_class {
    u64 ranks = binom(h.n(), h.k());
    if (ranks > 24) fail_guard("distance search needs at most 24 edge slots");
    if (member(h)) return 0;
    for (u64 size = 1; size <= ranks; ++size) {
      std::vector<u32> sub(size);
      first_subset(std::span<u32>(sub));
      do {
        Hypergraph g = h;
        for (u32 t = 0; t < size; ++t)
          g.set_rank(sub[t], !h.has_rank(sub[t]));
        if (member(g)) return frac(size, ranks);
      } while (next_subset_lex(std::span<u32>(sub), (u32)ranks));
    }
    fail_postcondition("property holds nowhere at this size");
  };
  return p;
}

PropertySpec maxcut_property(u32 ell, const mpq_class& c) {
  if (ell < 1) fail_invalid("cut needs at least one part");
  if (c < 0) fail_invalid("cut target must be nonnegative");
  PropertySpec p;
  p.name = "maxcut_" + std::to_string(ell) + "_ge_" + c.get_str();
  p.membership = [ell, c](const Hypergraph& h) {
    return maxcut_exact(h, ell).value >= c;
  };
  // Deletions never help and additions never hurt, so the distance is the
  // smallest number of missing crossing k-sets over labelings with enough
  // crossing capacity.
  p.distance = [ell, c](const Hypergraph& h) -> mpq_class {
    u32 n = h.n(), k = h.k();
    if (c > c_lk(n, ell, k))
      fail_invalid("cut target exceeds the multipartite bound at this size");
    u64 cnk = binom(n, k);
    u64 need = ceil_to_u64(c * mpq_class((unsigned long)cnk));
    u64 total = 1;
    for (u32 i = 0; i < n; ++i) {
      if (total > kDefaultEnumCap / ell)
        fail_guard("labeling count exceeds the enumeration cap");
      total *= ell;
    }
    std::vector<std::vector<u32>> edges;
    h.for_each_edge([&](std::span<const u32> e) {
      edges.emplace_back(e.begin(), e.end());
    });
    std::vector<u32> label(n, 0);
    std::vector<u32> sub(k);
    u64 best = UINT64_MAX;
    while (true) {
      std::vector<u64> sizes(ell, 0);
      for (u32 v = 0; v < n; ++v) ++sizes[label[v]];
      u64 capacity = 0;
      first_subset(std::span<u32>(sub));
      do {
        u64 prod = 1;
        for (u32 t = 0; t < k; ++t) prod *= sizes[sub[t]];
        capacity += prod;
      } while (next_subset_lex(std::span<u32>(sub), ell));
      if (capacity >= need) {
        u64 cut = 0;
        for (const std::vector<u32>& e : edges) {
          bool crossing = true;
          for (u32 i = 0; i + 1 < k && crossing; ++i)
            for (u32 j = i + 1; j < k; ++j)
              if (label[e[i]] == label[e[j]]) {
                crossing = false;
                break;
              }
          if (crossing) ++cut;
        }
        best = std::min(best, need > cut ? need - cut : 0);
      }
      u32 i = n;
      while (i > 0) {
        if (++label[i - 1] < ell) break;
        label[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
    if (best == UINT64_MAX)
      fail_postcondition("no labeling offers enough crossing capacity");
    return frac(best, cnk);
  };
  return p;
}

PropertySpec hom_density_property(Hypergraph f, const mpq_class& p,
                                  const mpq_class& delta) {
  if (p < 0 || p > 1) fail_invalid("target density outside [0, 1]");
  if (delta < 0) fail_invalid("window radius must be nonnegative");
  auto member = [f = std::move(f), p, delta](const Hypergraph& h) {
    if (h.k() != f.k()) fail_invalid("pattern arity disagrees with the graph");
    if (h.n() < f.n()) fail_invalid("pattern larger than the graph");
    return abs(t_inj(f, h) - p) <= delta;
  };
  return make_property("hom_density_window", std::move(member));
}

bool estimate_distance(const Hypergraph& h, const PropertySpec& p,
                       const mpq_class& alpha, const mpq_class& beta,
                       const TesterConfig& cfg, u64 seed) {
  if (alpha <= 0 || alpha > 1) fail_invalid("alpha must lie in (0, 1]");
  if (beta <= 0) fail_invalid("beta must be positive");
  if (cfg.q < h.k() || cfg.q > h.n())
    fail_invalid("sample size outside [k, n]");
  SplitMix64 g(seed);
  std::vector<u32> qset = sample_subset(h.n(), cfg.q, g);
  mpq_class dist = distance_to_property_exact(induced(h, qset), p);
  return dist <= clamp_nonneg(alpha - beta / 2);
}

mpq_class distance_to_property_exact(const Hypergraph& h,
                                     const PropertySpec& p) {
  if (!p.membership || !p.distance)
    fail_invalid("property carries no oracle");
  mpq_class d = p.distance(h);
  if (d < 0 || d > 1) fail_postcondition("distance outside [0, 1]");
  if (p.membership(h) != (d == 0))
    fail_postcondition("distance and membership disagree");
  return d;
}

}  // namespace hypertest
