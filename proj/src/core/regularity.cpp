#include "hypertest/regularity.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "hypertest/family.hpp"
#include "hypertest/hypergraph.hpp"
#include "hypertest/rational.hpp"
#include "hypertest/rng.hpp"

namespace hypertest {

namespace {

// Spanned k-sets of a base, each with the unit indices it depends on and
// its H-membership. Unit indexing: vertices in part order for k == 2
// (parts[0] first), edge positions for k >= 3.
struct CliqueTable {
  u32 k = 2;
  u64 unit_count = 0;
  std::vector<u32> unit_ids;  // size() * k entries
  std::vector<u8> in_h;

  u64 size() const noexcept { return in_h.size(); }
  u64 hits() const noexcept {
    u64 s = 0;
    for (u8 b : in_h) s += b;
    return s;
  }
};

CliqueTable build_table(const Hypergraph& h, const Scaffold& base, u64 cap) {
  CliqueTable t;
  t.k = base.k;
  t.unit_count = base.units();
  if (base.k == 2) {
    const auto& p0 = base.parts[0];
    const auto& p1 = base.parts[1];
    u32 pair[2];
    for (u32 i = 0; i < p0.size(); ++i)
      for (u32 j = 0; j < p1.size(); ++j) {
        t.unit_ids.push_back(i);
        t.unit_ids.push_back((u32)p0.size() + j);
        pair[0] = p0[i];
        pair[1] = p1[j];
        t.in_h.push_back(h.has_edge(pair) ? 1 : 0);
      }
    return t;
  }
  std::unordered_map<u64, u32> unit_of;
  unit_of.reserve(base.edges.size() * 2);
  for (u32 e = 0; e < base.edges.size(); ++e)
    unit_of.emplace(colex_rank(base.edges[e]), e);
  Hypergraph b = make_hypergraph(base.n, base.k - 1, base.edges);
  std::vector<u32> sub(base.k - 1);
  for (const auto& c : cliques(b, base.k, cap)) {
    for (u32 drop = 0; drop < base.k; ++drop) {
      u32 at = 0;
      for (u32 i = 0; i < base.k; ++i)
        if (i != drop) sub[at++] = c[i];
      t.unit_ids.push_back(unit_of.at(colex_rank(sub)));
    }
    t.in_h.push_back(h.has_edge(c) ? 1 : 0);
  }
  return t;
}

struct Eval {
  u64 f = 0;
  u64 h = 0;
};

Eval evaluate(const CliqueTable& t, const std::vector<u8>& q) {
  Eval e;
  const u32* ids = t.unit_ids.data();
  for (u64 c = 0; c < t.size(); ++c, ids += t.k) {
    bool all = true;
    for (u32 i = 0; i < t.k; ++i)
      if (!q[ids[i]]) {
        all = false;
        break;
      }
    if (all) {
      ++e.f;
      e.h += t.in_h[c];
    }
  }
  return e;
}

// ceil(q * f) clamped below at 0.
u64 ceil_times(const mpq_class& q, u64 f) {
  if (q <= 0) return 0;
  mpz_class t = q.get_num() * f;
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), t.get_mpz_t(), q.get_den().get_mpz_t());
  return mpz_get_ui(r.get_mpz_t());
}

// floor(q * f) clamped above at f (q is positive where this is used).
u64 floor_times(const mpq_class& q, u64 f) {
  mpz_class t = q.get_num() * f;
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), t.get_mpz_t(), q.get_den().get_mpz_t());
  if (r > f) return f;
  return mpz_get_ui(r.get_mpz_t());
}

// h1/f1 < h2/f2 by cross multiplication (all values fit well under 2^63).
bool frac_less(u64 h1, u64 f1, u64 h2, u64 f2) {
  return (unsigned __int128)h1 * f2 < (unsigned __int128)h2 * f1;
}

void check_inputs(const Hypergraph& h, const Scaffold& base,
                  const mpq_class& eps, const mpq_class& d) {
  if (h.n() != base.n || h.k() != base.k)
    fail_invalid("regularity: hypergraph does not match the base");
  if (eps <= 0 || eps > 1) fail_invalid("regularity: eps must lie in (0,1]");
  if (d < 0 || d > 1) fail_invalid("regularity: d must lie in [0,1]");
}

Scaffold witness_from_units(const Scaffold& base, const std::vector<u8>& q) {
  if (base.k == 2) {
    std::vector<std::vector<u32>> parts(2);
    u64 u = 0;
    for (u32 p = 0; p < 2; ++p)
      for (u32 v : base.parts[p]) {
        if (q[u]) parts[p].push_back(v);
        ++u;
      }
    return make_scaffold(2, base.n, std::move(parts), {});
  }
  std::vector<std::vector<u32>> edges;
  for (u64 e = 0; e < base.edges.size(); ++e)
    if (q[e]) edges.push_back(base.edges[e]);
  return make_scaffold(base.k, base.n, base.parts, std::move(edges));
}

// Shared verdict plumbing for one admissible candidate. Returns true when
// the candidate violates the window and the report was finalized.
struct CandidateTracker {
  const CliqueTable& table;
  const Scaffold& base;
  const mpq_class& eps;
  const mpq_class& d;
  RegularityReport& report;
  u64 thresh;
  u64 min_h = 0, min_f = 0, max_h = 0, max_f = 0;  // f == 0 means unset

  bool consider(const std::vector<u8>& q) {
    Eval e = evaluate(table, q);
    if (e.f < thresh) return false;
    ++report.candidates;
    if (min_f == 0 || frac_less(e.h, e.f, min_h, min_f)) {
      min_h = e.h;
      min_f = e.f;
    }
    if (max_f == 0 || frac_less(max_h, max_f, e.h, e.f)) {
      max_h = e.h;
      max_f = e.f;
    }
    u64 lo = ceil_times(d - eps, e.f);
    u64 hi = floor_times(d + eps, e.f);
    if (e.h >= lo && e.h <= hi) return false;
    report.verdict = Verdict::Refuted;
    report.witness = witness_from_units(base, q);
    return true;
  }

  void finish(Verdict when_clean, bool sound) {
    if (report.verdict != Verdict::Refuted) report.verdict = when_clean;
    report.sound = report.verdict == Verdict::Refuted ? true : sound;
    if (min_f != 0) {
      report.observed_min = frac(min_h, min_f);
      report.observed_max = frac(max_h, max_f);
    }
  }
};

}  // namespace

u64 Scaffold::units() const noexcept {
  if (k == 2) return parts[0].size() + parts[1].size();
  return edges.size();
}

Scaffold make_scaffold(u32 k, u32 n, std::vector<std::vector<u32>> parts,
                       std::vector<std::vector<u32>> edges) {
  if (k < 2) fail_invalid("scaffold: k must be at least 2");
  if (parts.size() != k) fail_invalid("scaffold: expected k vertex parts");
  std::vector<i32> owner(n, -1);
  for (u32 p = 0; p < k; ++p) {
    for (u32 v : parts[p]) {
      if (v >= n) fail_invalid("scaffold: part vertex out of range");
      if (owner[v] != -1) fail_invalid("scaffold: parts must be disjoint");
      owner[v] = (i32)p;
    }
    if (!std::is_sorted(parts[p].begin(), parts[p].end()) ||
        std::adjacent_find(parts[p].begin(), parts[p].end()) != parts[p].end())
      fail_invalid("scaffold: parts must be sorted and distinct");
  }
  if (k == 2) {
    if (!edges.empty()) fail_invalid("scaffold: k == 2 carries no edges");
  } else {
    for (auto& e : edges) {
      std::sort(e.begin(), e.end());
      if (e.size() != (std::size_t)k - 1 ||
          std::adjacent_find(e.begin(), e.end()) != e.end())
        fail_invalid("scaffold: edges must be distinct (k-1)-sets");
      u64 seen = 0;
      for (u32 v : e) {
        if (v >= n || owner[v] == -1)
          fail_invalid("scaffold: edge vertex outside the parts");
        u64 bit = u64(1) << owner[v];
        if (seen & bit) fail_invalid("scaffold: edge is not crossing");
        seen |= bit;
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  Scaffold s;
  s.k = k;
  s.n = n;
  s.parts = std::move(parts);
  s.edges = std::move(edges);
  return s;
}

Scaffold scaffold_of(const Polyad& p, u32 n) {
  if (p.level < 1) fail_invalid("scaffold: polyad level must be positive");
  std::vector<std::vector<u32>> edges;
  if (p.level >= 2)
    p.edges.for_each_edge([&](std::span<const u32> e) {
      edges.emplace_back(e.begin(), e.end());
    });
  return make_scaffold(p.level + 1, n, p.parts, std::move(edges));
}

std::vector<std::vector<u32>> scaffold_cliques(const Scaffold& s, u64 cap) {
  if (s.k == 2) return crossing_sets(s.parts, 2, cap);
  return cliques(make_hypergraph(s.n, s.k - 1, s.edges), s.k, cap);
}

u64 count_scaffold_cliques(const Scaffold& s, u64 cap) {
  if (s.k == 2) return (u64)s.parts[0].size() * s.parts[1].size();
  return count_cliques(make_hypergraph(s.n, s.k - 1, s.edges), s.k, cap);
}

mpq_class rel_density(const Hypergraph& h, const Scaffold& base, u64 cap) {
  if (h.n() != base.n || h.k() != base.k)
    fail_invalid("rel_density: hypergraph does not match the base");
  CliqueTable t = build_table(h, base, cap);
  if (t.size() == 0) return 0;
  return frac(t.hits(), t.size());
}

RegularityReport check_regular_exact(const Hypergraph& h, const Scaffold& base,
                                     const mpq_class& eps,
                                     const mpq_class& d) {
  check_inputs(h, base, eps, d);
  u64 u = base.units();
  if (u > kExactRegularityUnits)
    fail_guard("check_regular_exact: base has " + std::to_string(u) +
               " units, limit is " + std::to_string(kExactRegularityUnits) +
               "; use check_regular_sampled");
  CliqueTable t = build_table(h, base, kDefaultEnumCap);
  RegularityReport report;
  const u64 total = t.size();
  if (total == 0) {
    // Convention: a base spanning nothing is regular at every (eps, d).
    report.verdict = Verdict::Regular;
    report.sound = true;
    return report;
  }
  report.density = frac(t.hits(), total);

  // Spanning counts for all unit subsets by a subset-sum transform: seed
  // each k-set at the mask of its units, then fold supersets in.
  const u64 size = u64(1) << u;
  std::vector<u32> fcnt(size, 0), hcnt(size, 0);
  {
    const u32* ids = t.unit_ids.data();
    for (u64 c = 0; c < total; ++c, ids += t.k) {
      u64 mask = 0;
      for (u32 i = 0; i < t.k; ++i) mask |= u64(1) << ids[i];
      ++fcnt[mask];
      hcnt[mask] += t.in_h[c];
    }
  }
  for (u32 b = 0; b < u; ++b) {
    const u64 bit = u64(1) << b;
    for (u64 m = 0; m < size; ++m)
      if (m & bit) {
        fcnt[m] += fcnt[m ^ bit];
        hcnt[m] += hcnt[m ^ bit];
      }
  }

  const u64 thresh = ceil_times(eps, total);  // >= 1 since eps > 0
  std::vector<u64> lo(total + 1), hi(total + 1);
  for (u64 f = 0; f <= total; ++f) {
    lo[f] = ceil_times(d - eps, f);
    hi[f] = floor_times(d + eps, f);
  }

  u64 min_h = 0, min_f = 0, max_h = 0, max_f = 0;
  for (u64 m = 1; m < size; ++m) {
    const u64 f = fcnt[m];
    if (f < thresh) continue;
    const u64 hc = hcnt[m];
    ++report.candidates;
    if (min_f == 0 || frac_less(hc, f, min_h, min_f)) {
      min_h = hc;
      min_f = f;
    }
    if (max_f == 0 || frac_less(max_h, max_f, hc, f)) {
      max_h = hc;
      max_f = f;
    }
    if (hc < lo[f] || hc > hi[f]) {
      std::vector<u8> q(u, 0);
      for (u32 b = 0; b < u; ++b) q[b] = (m >> b) & 1;
      report.verdict = Verdict::Refuted;
      report.witness = witness_from_units(base, q);
      break;
    }
  }
  if (report.verdict != Verdict::Refuted) report.verdict = Verdict::Regular;
  report.sound = true;
  if (min_f != 0) {
    report.observed_min = frac(min_h, min_f);
    report.observed_max = frac(max_h, max_f);
  }
  return report;
}

RegularityReport check_regular_sampled(const Hypergraph& h,
                                       const Scaffold& base,
                                       const mpq_class& eps,
                                       const mpq_class& d, u32 trials,
                                       u64 seed) {
  check_inputs(h, base, eps, d);
  if (trials == 0) fail_invalid("check_regular_sampled: trials must be >= 1");
  CliqueTable table = build_table(h, base, kDefaultEnumCap);
  RegularityReport report;
  if (table.size() == 0) {
    report.verdict = Verdict::Regular;
    report.sound = true;
    return report;
  }
  report.density = frac(table.hits(), table.size());
  const u64 u = base.units();
  CandidateTracker tracker{table,  base,
                           eps,    d,
                           report, ceil_times(eps, table.size())};

  std::vector<u8> q(u, 1);
  if (tracker.consider(q)) {  // the full base first
    tracker.finish(Verdict::Regular, false);
    return report;
  }

  // Deterministic candidates: stars and co-stars of every vertex, and for
  // k == 2 each vertex's split into H-neighbours and the rest.
  if (base.k == 2) {
    const auto& p0 = base.parts[0];
    const auto& p1 = base.parts[1];
    u32 pr[2];
    for (u32 side = 0; side < 2; ++side) {
      const auto& mine = side == 0 ? p0 : p1;
      const auto& other = side == 0 ? p1 : p0;
      const u64 my_off = side == 0 ? 0 : p0.size();
      const u64 other_off = side == 0 ? p0.size() : 0;
      for (u32 i = 0; i < mine.size(); ++i) {
        for (u32 keep = 0; keep < 2; ++keep) {
          std::fill(q.begin(), q.end(), 0);
          q[my_off + i] = 1;
          for (u32 j = 0; j < other.size(); ++j) {
            pr[0] = mine[i];
            pr[1] = other[j];
            q[other_off + j] = h.has_edge(pr) == (keep == 0);
          }
          if (tracker.consider(q)) {
            tracker.finish(Verdict::Regular, false);
            return report;
          }
        }
      }
    }
  } else {
    // Per unit and part, the vertex the edge uses there (n as "none").
    std::vector<u32> at(u * base.k, base.n);
    std::vector<u32> part_of(base.n, base.k);
    for (u32 p = 0; p < base.k; ++p)
      for (u32 v : base.parts[p]) part_of[v] = p;
    for (u64 e = 0; e < u; ++e)
      for (u32 v : base.edges[e]) at[e * base.k + part_of[v]] = v;
    for (u32 p = 0; p < base.k; ++p)
      for (u32 v : base.parts[p]) {
        for (u32 star = 0; star < 2; ++star) {
          for (u64 e = 0; e < u; ++e) {
            u32 there = at[e * base.k + p];
            q[e] = star == 0 ? (there == v || there == base.n) : (there != v);
          }
          if (tracker.consider(q)) {
            tracker.finish(Verdict::Regular, false);
            return report;
          }
        }
      }
  }

  // Random candidates: unit coins at several densities, plus subgraphs
  // induced by a random vertex half for k >= 3.
  SplitMix64 g(seed);
  const BernoulliDraw half(frac(1, 2)), quarter(frac(1, 4)),
      three_quarters(frac(3, 4));
  for (u32 trial = 0; trial < trials; ++trial) {
    u32 mode = trial % 4;
    if (mode == 3 && base.k >= 3) {
      std::vector<u8> keep(base.n, 0);
      for (const auto& part : base.parts)
        for (u32 v : part) keep[v] = half.sample(g);
      for (u64 e = 0; e < u; ++e) {
        q[e] = 1;
        for (u32 v : base.edges[e])
          if (!keep[v]) {
            q[e] = 0;
            break;
          }
      }
    } else {
      const BernoulliDraw& coin =
          mode == 1 ? quarter : (mode == 2 ? three_quarters : half);
      for (u64 i = 0; i < u; ++i) q[i] = coin.sample(g);
    }
    if (tracker.consider(q)) break;
  }
  tracker.finish(Verdict::Regular, false);
  return report;
}

RegularityReport check_regular(const Hypergraph& h, const Scaffold& base,
                               const mpq_class& eps, const mpq_class& d,
                               u32 trials, u64 seed) {
  if (base.units() <= kExactRegularityUnits)
    return check_regular_exact(h, base, eps, d);
  return check_regular_sampled(h, base, eps, d, trials, seed);
}

}  // namespace hypertest
