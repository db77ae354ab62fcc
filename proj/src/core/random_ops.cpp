#include "hypertest/random_ops.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hypertest/binom.hpp"
#include "hypertest/equitable.hpp"
#include "hypertest/rational.hpp"
#include "hypertest/rng.hpp"

namespace hypertest {

namespace {

mpq_class clamp_unit(mpq_class q) {
  if (q > 1) q = 1;
  return q;
}

std::string range_text(const RegularityReport& rep) {
  return "[" + rational_to_string(rep.observed_min) + ", " +
         rational_to_string(rep.observed_max) + "]";
}

// m^k as an exact rational, m the smallest part of the base.
mpq_class min_part_power(const Scaffold& base) {
  u64 m = base.n;
  for (const auto& p : base.parts) m = std::min<u64>(m, p.size());
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), (unsigned long)m, base.k);
  return mpq_class(z);
}

}  // namespace

mpq_class root_threshold(const mpq_class& p, unsigned long degree) {
  if (p < 0 || p > 1) fail_invalid("root_threshold: p must lie in [0, 1]");
  if (degree < 1) fail_invalid("root_threshold: degree must be positive");
  mpz_class scaled = (p.get_num() << (53 * degree)) / p.get_den();
  mpz_class root;
  mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), degree);
  return frac_z(root, mpz_class(1) << 53);
}

std::vector<Hypergraph> slicing(const Hypergraph& hk, const Scaffold& base,
                                const mpq_class& d,
                                std::span<const mpq_class> probs,
                                const mpq_class& epsilon, u64 seed, u32 trials,
                                u32 retries) {
  if (epsilon <= 0 || epsilon > 1)
    fail_invalid("slicing: epsilon must lie in (0, 1]");
  if (d < 2 * epsilon) fail_invalid("slicing: d must be at least 2 epsilon");
  if (retries < 1) fail_invalid("slicing: retries must be positive");
  mpq_class total = 0;
  for (const mpq_class& p : probs) {
    if (p < 0) fail_invalid("slicing: probabilities must be nonnegative");
    total += p;
  }
  if (total > 1) fail_invalid("slicing: probabilities must sum to at most 1");

  const u32 s = (u32)probs.size();
  const std::vector<u64> ranks = hk.edge_ranks();
  const CategoricalDraw draw(probs);
  const mpq_class eps3 = clamp_unit(3 * epsilon);
  std::string diag = "no attempt recorded";

  for (u32 attempt = 0; attempt < retries; ++attempt) {
    const u64 akey = derive_seed(seed, attempt);
    SplitMix64 g(derive_seed(akey, 0));
    std::vector<std::vector<u64>> buckets(s + 1);
    for (u64 rank : ranks) buckets[draw.sample(g)].push_back(rank);

    std::vector<Hypergraph> slices;
    slices.reserve(s + 1);
    for (u32 i = 0; i <= s; ++i) {
      Hypergraph hi(hk.n(), hk.k());
      hi.assign_ranks(std::move(buckets[i]));
      slices.push_back(std::move(hi));
    }

    bool ok = true;
    for (u32 i = 0; i <= s && ok; ++i) {
      const mpq_class share = (i == 0 ? 1 - total : probs[i - 1]) * d;
      const auto rep = check_regular(slices[i], base, eps3, share, trials,
                                     derive_seed(akey, i + 1));
      if (rep.verdict == Verdict::Refuted) {
        ok = false;
        diag = "slice " + std::to_string(i) + " missed (3 epsilon, " +
               rational_to_string(share) + "); observed range " +
               range_text(rep);
      }
    }
    if (ok) return slices;
  }
  fail_postcondition("slicing: no draw passed the slice checks within " +
                     std::to_string(retries) + " attempts; last failure: " +
                     diag);
}

std::vector<Hypergraph> improve_regularity(
    const std::vector<Hypergraph>& classes, const Scaffold& base,
    std::span<const mpq_class> d, const mpq_class& epsilon,
    const mpq_class& delta, const mpq_class& nu, u64 seed, u32 trials,
    u32 retries) {
  const u32 s = (u32)classes.size();
  if (s < 1) fail_invalid("improve_regularity: needs at least one class");
  if (d.size() != s)
    fail_invalid("improve_regularity: class and density counts differ");
  if (epsilon <= 0 || epsilon > 1)
    fail_invalid("improve_regularity: epsilon must lie in (0, 1]");
  if (delta < 0 || delta > 1)
    fail_invalid("improve_regularity: delta must lie in [0, 1]");
  if (nu < 0) fail_invalid("improve_regularity: nu must be nonnegative");
  if (retries < 1) fail_invalid("improve_regularity: retries must be positive");
  mpq_class dsum = 0;
  for (const mpq_class& di : d) {
    if (di < 0) fail_invalid("improve_regularity: densities must be nonnegative");
    dsum += di;
  }
  if (dsum != 1) fail_invalid("improve_regularity: densities must sum to 1");

  // The classes must tile the clique set of the base, checked exactly.
  const auto clique_sets = scaffold_cliques(base);
  const u64 m_count = clique_sets.size();
  std::vector<u64> clique_ranks(m_count);
  for (u64 i = 0; i < m_count; ++i) clique_ranks[i] = colex_rank(clique_sets[i]);
  std::sort(clique_ranks.begin(), clique_ranks.end());
  std::vector<u32> owner(m_count, s);
  u64 assigned = 0;
  for (u32 i = 0; i < s; ++i) {
    if (classes[i].n() != base.n || classes[i].k() != base.k)
      fail_invalid("improve_regularity: class shape does not match the base");
    for (u64 rank : classes[i].edge_ranks()) {
      const auto it = std::lower_bound(clique_ranks.begin(), clique_ranks.end(), rank);
      if (it == clique_ranks.end() || *it != rank)
        fail_invalid("improve_regularity: a class leaves the clique set");
      const u64 idx = (u64)(it - clique_ranks.begin());
      if (owner[idx] != s)
        fail_invalid("improve_regularity: classes overlap on the clique set");
      owner[idx] = i;
      ++assigned;
    }
  }
  if (assigned != m_count)
    fail_invalid("improve_regularity: classes do not cover the clique set");

  const mpq_class mk = min_part_power(base);
  if (m_count < epsilon * mk)
    fail_invalid("improve_regularity: clique set is thinner than epsilon * m^k");

  const mpq_class pre_eps = clamp_unit(epsilon + delta);
  for (u32 i = 0; i < s; ++i) {
    const auto rep = check_regular(classes[i], base, pre_eps, d[i], trials,
                                   derive_seed(seed, ~u64{i}));
    if (rep.verdict == Verdict::Refuted)
      fail_invalid("improve_regularity: class " + std::to_string(i + 1) +
                   " is not (epsilon+delta, d)-regular; observed range " +
                   range_text(rep));
  }

  const BernoulliDraw pool(root_threshold(delta, 3));
  // Indices 1..s-1 map to classes 1..s-1, the leftover mass is class s; the
  // cutpoints are exact because the densities sum to 1.
  const CategoricalDraw reassign(d.subspan(0, s - 1));
  const mpq_class edit_cap = nu * mk;
  std::string diag = "no attempt recorded";

  for (u32 attempt = 0; attempt < retries; ++attempt) {
    const u64 akey = derive_seed(seed, attempt);
    SplitMix64 g(derive_seed(akey, 0));
    std::vector<std::vector<u64>> buckets(s);
    for (u64 idx = 0; idx < m_count; ++idx) {
      u32 to = owner[idx];
      if (pool.sample(g)) {
        const u32 j = reassign.sample(g);
        to = (j == 0) ? s - 1 : j - 1;
      }
      buckets[to].push_back(clique_ranks[idx]);
    }

    std::vector<Hypergraph> out;
    out.reserve(s);
    for (u32 i = 0; i < s; ++i) {
      Hypergraph gi(base.n, base.k);
      gi.assign_ranks(std::move(buckets[i]));
      out.push_back(std::move(gi));
    }

    bool ok = true;
    for (u32 i = 0; i < s && ok; ++i) {
      const u64 edits = sym_diff_size(out[i], classes[i]);
      if (mpq_class((unsigned long)edits) > edit_cap) {
        ok = false;
        diag = "class " + std::to_string(i + 1) + " moved " +
               std::to_string(edits) + " cliques, cap " +
               rational_to_string(edit_cap);
        continue;
      }
      const auto rep = check_regular(out[i], base, epsilon, d[i], trials,
                                     derive_seed(akey, i + 1));
      if (rep.verdict == Verdict::Refuted) {
        ok = false;
        diag = "class " + std::to_string(i + 1) +
               " missed (epsilon, d); observed range " + range_text(rep);
      }
    }
    if (ok) return out;
  }
  fail_postcondition(
      "improve_regularity: no redistribution passed within " +
      std::to_string(retries) + " attempts; last failure: " + diag);
}

Hypergraph adjust_to_density(const Hypergraph& h,
                             const FamilyOfPartitions& fam,
                             const DensityFunction& dh,
                             const DensityFunction& dg,
                             const mpq_class& epsilon, const mpq_class& nu,
                             u64 seed, u32 trials, u32 retries) {
  if (epsilon <= 0 || epsilon > 1)
    fail_invalid("adjust_to_density: epsilon must lie in (0, 1]");
  if (nu < 0) fail_invalid("adjust_to_density: nu must be nonnegative");
  if (retries < 1) fail_invalid("adjust_to_density: retries must be positive");
  if (dg.k != dh.k || dg.a != dh.a)
    fail_invalid("adjust_to_density: target and source shapes differ");

  const auto pre = check_equitable_partition_of(fam, h, epsilon, dh, trials,
                                                derive_seed(seed, ~u64{0}));
  if (!pre.passed)
    fail_invalid(
        "adjust_to_density: fam is not an (epsilon, a, dh)-equitable "
        "partition of H (" +
        std::to_string(pre.violations.size()) + " clause violations)");

  const u32 n = fam.n();
  const u32 k = fam.k();
  const auto top = address_space(k, k - 1, fam.a());
  struct Site {
    Scaffold base;
    std::vector<u64> ranks;  // clique ranks in the ambient (n, k) space
  };
  std::vector<Site> sites;
  sites.reserve(top.size());
  for (const auto& x : top) {
    Site site{scaffold_of(polyad(fam, x), n), {}};
    const auto sets = scaffold_cliques(site.base);
    site.ranks.reserve(sets.size());
    for (const auto& set : sets) site.ranks.push_back(colex_rank(set));
    sites.push_back(std::move(site));
  }

  const mpq_class bound =
      (dist(dh, dg) + nu) * mpq_class((unsigned long)binom(n, k));
  const mpq_class eps3 = clamp_unit(3 * epsilon);
  const mpq_class two_eps = 2 * epsilon;
  std::string diag = "no attempt recorded";

  for (u32 attempt = 0; attempt < retries; ++attempt) {
    const u64 akey = derive_seed(seed, attempt);
    Hypergraph g = h;
    bool ok = true;
    for (u64 rt = 0; rt < top.size() && ok; ++rt) {
      const Site& site = sites[rt];
      if (site.ranks.empty()) continue;
      const mpq_class& hv = dh.values[rt];
      const mpq_class& gv = dg.values[rt];
      const mpq_class gap = hv > gv ? hv - gv : gv - hv;
      if (gap <= two_eps) continue;

      Hypergraph inside(n, k);
      {
        std::vector<u64> in_ranks;
        for (u64 rank : site.ranks)
          if (h.has_rank(rank)) in_ranks.push_back(rank);
        inside.assign_ranks(std::move(in_ranks));
      }

      try {
        if (hv > gv) {
          // Shrink: keep a slice of relative share gv, taking whichever of
          // the slice and its remainder is larger (ties keep the slice).
          const mpq_class p = gv / hv;
          const bool direct = p >= 1 - p;
          const mpq_class probs[1] = {direct ? p : 1 - p};
          const auto parts = slicing(inside, site.base, hv, probs, epsilon,
                                     derive_seed(akey, rt), trials, retries);
          const Hypergraph& keep = direct ? parts[1] : parts[0];
          for (u64 rank : site.ranks) g.set_rank(rank, keep.has_rank(rank));
        } else {
          // Grow: slice the complement within the clique set, which is
          // (epsilon, 1 - hv)-regular, and add the share that lifts the
          // window to gv.
          Hypergraph outside(n, k);
          {
            std::vector<u64> out_ranks;
            for (u64 rank : site.ranks)
              if (!h.has_rank(rank)) out_ranks.push_back(rank);
            outside.assign_ranks(std::move(out_ranks));
          }
          const mpq_class p = (gv - hv) / (1 - hv);
          const bool direct = p >= 1 - p;
          const mpq_class probs[1] = {direct ? p : 1 - p};
          const auto parts = slicing(outside, site.base, 1 - hv, probs,
                                     epsilon, derive_seed(akey, rt), trials,
                                     retries);
          const Hypergraph& add = direct ? parts[1] : parts[0];
          for (u64 rank : site.ranks)
            g.set_rank(rank, h.has_rank(rank) || add.has_rank(rank));
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Postcondition) throw;
        ok = false;
        diag = e.what();
      }
    }
    if (!ok) continue;

    const u64 edits = sym_diff_size(h, g);
    if (mpq_class((unsigned long)edits) > bound) {
      diag = "edit " + std::to_string(edits) + " exceeds (dist + nu) * C(n,k) = " +
             rational_to_string(bound);
      continue;
    }
    const auto post = check_equitable_partition_of(fam, g, eps3, dg, trials,
                                                   derive_seed(akey, ~u64{1}));
    if (!post.passed) {
      diag = "target windows failed at 3 epsilon (" +
             std::to_string(post.violations.size()) + " clause violations)";
      continue;
    }
    return g;
  }
  fail_postcondition("adjust_to_density: no draw met the edit bound and "
                     "target windows within " +
                     std::to_string(retries) + " attempts; last failure: " +
                     diag);
}

FamilyOfPartitions refine_family(const FamilyOfPartitions& fam,
                                 const std::vector<u32>& b,
                                 const mpq_class& epsilon, u64 seed,
                                 u32 trials, u32 retries) {
  const u32 k = fam.k();
  const auto& a = fam.a();
  const u32 n = fam.n();
  if (b.size() != a.size())
    fail_invalid("refine_family: b must match the family's part vector");
  for (size_t i = 0; i < a.size(); ++i)
    if (b[i] < a[i] || b[i] % a[i] != 0)
      fail_invalid("refine_family: each b_i must be a positive multiple of a_i");
  if (b[0] > n)
    fail_invalid("refine_family: more vertex parts than vertices");
  if (epsilon <= 0 || epsilon > 1)
    fail_invalid("refine_family: epsilon must lie in (0, 1]");
  if (retries < 1) fail_invalid("refine_family: retries must be positive");
  {
    const u64 fl = n / a[0];
    for (const auto& part : fam.vertex_partition().parts)
      if (part.size() != fl && part.size() != fl + 1)
        fail_invalid("refine_family: input parts must be balanced to floor/ceil");
  }

  // Deterministic vertex split: chunks as equal as possible, larger first,
  // preserving vertex order; chunk sizes stay within the floor/ceil window
  // of n / b1 because the input sizes are within that of n / a1.
  const u32 c1 = b[0] / a[0];
  std::vector<std::vector<u32>> new_parts;
  new_parts.reserve(b[0]);
  for (const auto& part : fam.vertex_partition().parts) {
    const u64 lo = part.size() / c1;
    const u64 extra = part.size() % c1;
    u64 at = 0;
    for (u32 c = 0; c < c1; ++c) {
      const u64 len = lo + (c < extra ? 1 : 0);
      new_parts.emplace_back(part.begin() + at, part.begin() + at + len);
      at += len;
    }
  }

  const auto& old_vp = fam.vertex_partition();
  std::string diag = "no attempt recorded";

  for (u32 attempt = 0; attempt < retries; ++attempt) {
    SplitMix64 g(derive_seed(seed, attempt));
    std::vector<ClassSpec> specs;
    // Edge lists per (level, new address index, class label), kept so the
    // polyads of higher levels can be assembled without a built family.
    using EdgeList = std::vector<std::vector<u32>>;
    std::vector<std::vector<std::vector<EdgeList>>> built(k);

    for (u32 j = 2; j < k; ++j) {
      const u32 cj = b[j - 1] / a[j - 1];
      std::vector<mpq_class> within(cj, frac(1, cj));
      std::vector<mpq_class> anywhere(b[j - 1], frac(1, b[j - 1]));
      const CategoricalDraw slice_draw(within);
      const CategoricalDraw spread_draw(anywhere);
      const auto space = address_space(j, j - 1, b);
      built[j].assign(space.size(), {});

      for (u64 zi = 0; zi < space.size(); ++zi) {
        const AddressVector& z = space[zi];
        // Spanned j-sets of the refined polyad at this address.
        std::vector<std::vector<u32>> sets;
        if (j == 2) {
          const auto& pa = new_parts[z.x1[0] - 1];
          const auto& pb = new_parts[z.x1[1] - 1];
          for (u32 u : pa)
            for (u32 v : pb)
              sets.push_back({std::min(u, v), std::max(u, v)});
        } else {
          // The level-(j-1) polyad under z: union of the refined classes its
          // coordinates select across the (j-1)-subsets of its labels.
          std::vector<std::vector<u32>> lower;
          for (const auto& y : restrictions(z, j - 1, j - 2)) {
            std::vector<u32> labels(y.x1.begin(), y.x1.end());
            const u32 bb = z.coord(labels);
            const u64 yi = address_rank(y);
            const auto& edges = built[j - 1][yi][bb - 1];
            lower.insert(lower.end(), edges.begin(), edges.end());
          }
          sets = cliques(make_hypergraph(n, j - 1, lower), j);
        }

        std::vector<EdgeList> into(b[j - 1]);
        for (auto& set : sets) {
          u32 label;
          if (is_crossing(old_vp, set)) {
            // Refine the original class: slice c keeps targets
            // (c-1)*cj+1 .. c*cj.
            const u32 c = fam.class_label(set);
            const u32 sl = slice_draw.sample(g);
            label = (c - 1) * cj + sl;
          } else {
            // Crossing for the refinement only: no original class
            // constrains it, spread uniformly.
            label = spread_draw.sample(g);
          }
          into[label - 1].push_back(std::move(set));
        }

        built[j][zi] = into;
        for (u32 bb = 1; bb <= b[j - 1]; ++bb)
          specs.push_back({j, z, bb, std::move(into[bb - 1])});
      }
    }

    try {
      FamilyOfPartitions out = build_family(n, k, b, new_parts, specs);
      const auto rep = check_equitable(out, root_threshold(epsilon, 3),
                                       std::nullopt, trials,
                                       derive_seed(seed, ~u64{attempt}));
      if (!rep.passed) {
        diag = "refined family missed the equitability check (" +
               std::to_string(rep.violations.size()) + " clause violations)";
        continue;
      }
      return out;
    } catch (const FamilyBuildError& e) {
      diag = e.what();
      continue;
    }
  }
  fail_postcondition("refine_family: no draw produced a valid refined family "
                     "within " +
                     std::to_string(retries) + " attempts; last failure: " +
                     diag);
}

}  // namespace hypertest
