#include "hypertest/counting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hypertest/binom.hpp"
#include "hypertest/iso.hpp"
#include "hypertest/rational.hpp"

namespace hypertest {

namespace {

void check_formula_shapes(const Hypergraph& f, const DensityFunction& d,
                          const AddressVector& x) {
  validate_address(x);
  if (f.k() != d.k) fail_invalid("graph arity disagrees with the densities");
  if (x.ell != f.n()) fail_invalid("address width disagrees with the graph");
  if (x.level + 1 != f.k()) fail_invalid("address level must be arity - 1");
  if (x.a != d.a)
    fail_invalid("address part counts disagree with the densities");
}

// prod_{j=2}^{k-1} a_j^(-C(l, j)); equals 1 for k == 2.
mpq_class interior_weight(u32 l, u32 k, const std::vector<u32>& a) {
  mpz_class den = 1;
  for (u32 j = 2; j < k; ++j) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), a[j - 1], (unsigned long)binom(l, j));
    den *= p;
  }
  return frac_z(1, den);
}

// The k-subsets of positions of x in lex order, with the density at the
// matching restriction of x.
struct RestrictionTable {
  std::vector<std::vector<u32>> positions;
  std::vector<mpq_class> values;
};

RestrictionTable restriction_table(const DensityFunction& d,
                                   const AddressVector& x, u32 k) {
  RestrictionTable t;
  for (const AddressVector& y : restrictions(x, k, k - 1))
    t.values.push_back(d.at(y));
  std::vector<u32> sub(k);
  first_subset(std::span<u32>(sub));
  do {
    t.positions.emplace_back(sub.begin(), sub.end());
  } while (next_subset_lex(std::span<u32>(sub), x.ell));
  return t;
}

// Product over the table rows for the placement that puts F-vertex v at
// position perm[v] of x1.
mpq_class placement_product(const Hypergraph& f, const RestrictionTable& t,
                            std::span<const u32> perm) {
  u32 l = f.n();
  std::vector<u32> at_position(l);
  for (u32 v = 0; v < l; ++v) at_position[perm[v]] = v;
  std::vector<u32> verts(f.k());
  mpq_class out = 1;
  for (std::size_t r = 0; r < t.positions.size(); ++r) {
    for (std::size_t i = 0; i < t.positions[r].size(); ++i)
      verts[i] = at_position[t.positions[r][i]];
    if (f.has_edge(verts))
      out *= t.values[r];
    else
      out *= 1 - t.values[r];
  }
  return out;
}

void check_distinct(std::vector<u32> entries, const char* what) {
  std::sort(entries.begin(), entries.end());
  if (std::adjacent_find(entries.begin(), entries.end()) != entries.end())
    fail_invalid(what);
}

mpq_class ic_x_prechecked(const Hypergraph& f, const DensityFunction& d,
                          const AddressVector& x, u64 aut) {
  RestrictionTable t = restriction_table(d, x, f.k());
  std::vector<u32> perm(f.n());
  std::iota(perm.begin(), perm.end(), 0u);
  mpq_class sum = 0;
  do {
    sum += placement_product(f, t, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  sum *= interior_weight(f.n(), f.k(), d.a);
  return sum / mpq_class((unsigned long)aut);
}

}  // namespace

SigmaEmbedding make_sigma(std::span<const u32> to_label,
                          std::span<const u32> labels) {
  if (to_label.size() != labels.size())
    fail_invalid("embedding and label set sizes disagree");
  std::vector<u32> lhs(to_label.begin(), to_label.end());
  std::vector<u32> rhs(labels.begin(), labels.end());
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  if (std::adjacent_find(rhs.begin(), rhs.end()) != rhs.end())
    fail_invalid("label set repeats a label");
  if (lhs != rhs) fail_invalid("embedding is not a bijection onto the labels");
  return SigmaEmbedding{std::vector<u32>(to_label.begin(), to_label.end())};
}

mpq_class ic_sigma(const Hypergraph& f, const DensityFunction& d,
                   const AddressVector& x, const SigmaEmbedding& sigma) {
  check_formula_shapes(f, d, x);
  u32 l = f.n();
  if (sigma.to_label.size() != l)
    fail_invalid("embedding size disagrees with the graph");
  std::vector<u32> perm(l);
  for (u32 v = 0; v < l; ++v) perm[v] = x.position_of(sigma.to_label[v]);
  check_distinct(perm, "embedding repeats a label");
  RestrictionTable t = restriction_table(d, x, f.k());
  return placement_product(f, t, perm) * interior_weight(l, f.k(), d.a);
}

mpq_class ic_x(const Hypergraph& f, const DensityFunction& d,
               const AddressVector& x) {
  check_formula_shapes(f, d, x);
  return ic_x_prechecked(f, d, x, automorphism_count(f));
}

mpq_class ic(const Hypergraph& f, const DensityFunction& d) {
  if (f.k() != d.k) fail_invalid("graph arity disagrees with the densities");
  if (f.n() > d.a[0])
    fail_invalid("graph has more vertices than there are parts");
  u64 aut = automorphism_count(f);
  mpq_class sum = 0;
  for (const AddressVector& x : address_space(f.n(), f.k() - 1, d.a))
    sum += ic_x_prechecked(f, d, x, aut);
  return sum / mpq_class((unsigned long)binom(d.a[0], f.n()));
}

mpq_class ic_family(std::span<const Hypergraph> family,
                    const DensityFunction& d) {
  if (family.empty()) fail_invalid("family of graphs is empty");
  for (const Hypergraph& f : family)
    if (f.n() != family[0].n() || f.k() != family[0].k())
      fail_invalid("family members disagree on shape");
  mpq_class sum = 0;
  for (const Hypergraph& f : family) sum += ic(f, d);
  return sum;
}

u64 ic_sigma_count(const Hypergraph& f, const Complex& c,
                   const SigmaEmbedding& sigma, u64 cap) {
  validate_complex(c);
  if (c.levels.empty()) fail_invalid("complex carries no levels");
  if (c.part_labels.size() != c.parts.size())
    fail_invalid("part labels and parts disagree in number");
  u32 l = (u32)c.parts.size();
  u32 k = c.top();
  if (f.n() != l) fail_invalid("graph order disagrees with the parts");
  if (f.k() != k) fail_invalid("graph arity disagrees with the top level");
  if (sigma.to_label.size() != l)
    fail_invalid("embedding size disagrees with the graph");

  // Part index hosting each F-vertex, and the F-vertex at each part index.
  std::vector<u32> to_part(l, UINT32_MAX);
  for (u32 v = 0; v < l; ++v) {
    for (u32 t = 0; t < l; ++t)
      if (c.part_labels[t] == sigma.to_label[v]) to_part[v] = t;
    if (to_part[v] == UINT32_MAX)
      fail_invalid("embedding uses a label outside the complex");
  }
  check_distinct(to_part, "embedding repeats a label");
  std::vector<u32> vertex_at(l);
  for (u32 v = 0; v < l; ++v) vertex_at[to_part[v]] = v;

  u64 total = 1;
  for (const std::vector<u32>& part : c.parts) {
    u64 s = part.size();
    if (s == 0) return 0;
    if (total > cap / s)
      fail_guard("transversal count exceeds the enumeration cap");
    total *= s;
  }

  // Position subsets probed per transversal: the (k-1)-subsets must all lie
  // in the next-to-top level, and each k-subset must match F.
  std::vector<std::vector<u32>> span_sets;
  if (k >= 3) {
    std::vector<u32> sub(k - 1);
    first_subset(std::span<u32>(sub));
    do {
      span_sets.emplace_back(sub.begin(), sub.end());
    } while (next_subset_lex(std::span<u32>(sub), l));
  }
  struct Probe {
    std::vector<u32> pos;
    bool edge;
  };
  std::vector<Probe> top_sets;
  {
    std::vector<u32> sub(k), verts(k);
    first_subset(std::span<u32>(sub));
    do {
      for (u32 i = 0; i < k; ++i) verts[i] = vertex_at[sub[i]];
      top_sets.push_back(
          Probe{std::vector<u32>(sub.begin(), sub.end()), f.has_edge(verts)});
    } while (next_subset_lex(std::span<u32>(sub), l));
  }

  const Hypergraph& top_graph = c.levels[k - 2];
  const Hypergraph* span_graph = k >= 3 ? &c.levels[k - 3] : nullptr;
  std::vector<u32> idx(l, 0), w(l), verts(k);
  u64 count = 0;
  while (true) {
    for (u32 i = 0; i < l; ++i) w[i] = c.parts[i][idx[i]];
    bool spans = true;
    if (span_graph != nullptr) {
      std::vector<u32> sverts(k - 1);
      for (const std::vector<u32>& pos : span_sets) {
        for (u32 i = 0; i + 1 < k; ++i) sverts[i] = w[pos[i]];
        if (!span_graph->has_edge(sverts)) {
          spans = false;
          break;
        }
      }
    }
    if (spans) {
      bool match = true;
      for (const Probe& probe : top_sets) {
        for (u32 i = 0; i < k; ++i) verts[i] = w[probe.pos[i]];
        if (top_graph.has_edge(verts) != probe.edge) {
          match = false;
          break;
        }
      }
      if (match) ++count;
    }
    u32 i = 0;
    while (i < l && ++idx[i] == (u32)c.parts[i].size()) idx[i++] = 0;
    if (i == l) break;
  }
  return count;
}

PrIcReport pr_vs_ic_check(const Hypergraph& h, const FamilyOfPartitions& fam,
                          const DensityFunction& d,
                          std::span<const Hypergraph> family,
                          const mpq_class& gamma, u32 trials, u64 seed) {
  if (h.n() != fam.n() || h.k() != fam.k())
    fail_invalid("graph shape disagrees with the family of partitions");
  if (d.k != fam.k() || d.a != fam.a())
    fail_invalid("densities disagree with the family of partitions");
  if (family.empty()) fail_invalid("family of graphs is empty");
  u32 l = family[0].n();
  for (const Hypergraph& f : family)
    if (f.n() != l || f.k() != h.k())
      fail_invalid("family members disagree on shape");
  if (gamma <= 0 || gamma > 1) fail_invalid("gamma must lie in (0, 1]");
  // The measured side counts each vertex set at most once, so repeated
  // isomorphism types would skew the predicted side only.
  std::vector<std::string> sigs;
  for (const Hypergraph& f : family) sigs.push_back(canonical_signature(f));
  std::sort(sigs.begin(), sigs.end());
  if (std::adjacent_find(sigs.begin(), sigs.end()) != sigs.end())
    fail_invalid("family repeats an isomorphism type");

  PrIcReport r;
  r.gamma = gamma;
  r.equitable = check_equitable_partition_of(fam, h, gamma, d, trials, seed);
  r.pr = pr_density(std::vector<Hypergraph>(family.begin(), family.end()), h);
  r.ic = ic_family(family, d);
  r.deviation = abs(r.pr - r.ic);
  u64 crossing = count_crossing_sets(fam.vertex_partition().parts, l);
  r.correction = 1 - frac(crossing, binom(h.n(), l));
  r.within = r.deviation <= r.gamma + r.correction;
  return r;
}

}  // namespace hypertest
