#include "hypertest/family.hpp"

#include <algorithm>
#include <sstream>

namespace hypertest {

std::string address_to_string(const AddressVector& x) {
  std::ostringstream os;
  os << "x1=[";
  for (u32 t = 0; t < x.x1.size(); ++t) os << (t ? "," : "") << x.x1[t];
  os << "]";
  for (u32 i = 2; i <= x.level; ++i) {
    os << " x" << i << "=[";
    const auto& v = x.xi[i - 2];
    for (u32 t = 0; t < v.size(); ++t) os << (t ? "," : "") << v[t];
    os << "]";
  }
  return os.str();
}

std::vector<std::vector<u32>> polyad_cliques(const Polyad& p, u32 i, u64 cap) {
  if (i == 0) fail_invalid("clique dimension must be positive");
  if (p.level == 1) return crossing_sets(p.parts, i, cap);
  if (i < p.level) fail_invalid("clique dimension below polyad level");
  return cliques(p.edges, i, cap);
}

u64 count_polyad_cliques(const Polyad& p, u32 i, u64 cap) {
  if (i == 0) fail_invalid("clique dimension must be positive");
  if (p.level == 1) return count_crossing_sets(p.parts, i);
  if (i < p.level) fail_invalid("clique dimension below polyad level");
  return count_cliques(p.edges, i, cap);
}

bool polyad_spans(const Polyad& p, std::span<const u32> set) {
  if (p.level == 1) {
    std::vector<u32> labels;
    for (u32 v : set) {
      u32 label = UINT32_MAX;
      for (u32 t = 0; t < p.parts.size(); ++t)
        if (std::binary_search(p.parts[t].begin(), p.parts[t].end(), v))
          label = t;
      if (label == UINT32_MAX) return false;
      labels.push_back(label);
    }
    std::sort(labels.begin(), labels.end());
    return std::adjacent_find(labels.begin(), labels.end()) == labels.end();
  }
  u32 j = p.level;
  if (set.size() < j) return false;
  std::vector<u32> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<u32> sub(j), pick(j);
  first_subset(sub);
  do {
    for (u32 t = 0; t < j; ++t) pick[t] = sorted[sub[t]];
    if (!p.edges.has_edge(pick)) return false;
  } while (next_subset_lex(sub, (u32)sorted.size()));
  return true;
}

void validate_complex(const Complex& c) {
  if (c.levels.empty()) return;
  // Level 2 edges must cross the listed parts.
  std::vector<u32> owner(c.n, UINT32_MAX);
  for (u32 t = 0; t < c.parts.size(); ++t)
    for (u32 v : c.parts[t]) owner[v] = t;
  c.levels[0].for_each_edge([&](std::span<const u32> e) {
    if (owner[e[0]] == UINT32_MAX || owner[e[1]] == UINT32_MAX ||
        owner[e[0]] == owner[e[1]])
      fail_postcondition("complex level 2 edge does not cross the parts");
  });
  for (u32 i = 3; i <= c.top(); ++i) {
    const Hypergraph& lower = c.levels[i - 3];
    std::vector<u32> sub(i - 1), pick(i - 1);
    c.levels[i - 2].for_each_edge([&](std::span<const u32> e) {
      first_subset(std::span<u32>(sub.data(), i - 1));
      do {
        for (u32 t = 0; t + 1 < i; ++t) pick[t] = e[sub[t]];
        if (!lower.has_edge(std::span<const u32>(pick.data(), i - 1)))
          fail_postcondition("complex level does not underlie the next");
      } while (next_subset_lex(std::span<u32>(sub.data(), i - 1), i));
    });
  }
}

const std::vector<AddressVector>& FamilyOfPartitions::addresses(u32 j) const {
  if (j < 2 || j > k_ - 1) fail_invalid("class level out of range");
  return spaces_[j];
}

u64 FamilyOfPartitions::address_index(const AddressVector& x) const {
  for (u32 i = 0; i < std::max(x.level, u32(1)); ++i)
    if (i >= a_.size() || x.a[i] != a_[i])
      fail_invalid("address part counts disagree with family");
  return address_rank(x);
}

const Hypergraph& FamilyOfPartitions::class_graph(u32 level, u64 addr_idx,
                                                  u32 b) const {
  if (level < 2 || level > k_ - 1) fail_invalid("class level out of range");
  u32 aj = a_[level - 1];
  if (b < 1 || b > aj) fail_invalid("class label out of range");
  if (addr_idx >= spaces_[level].size()) fail_invalid("address index out of range");
  return classes_[level][addr_idx * aj + (b - 1)];
}

FamilyOfPartitions::ClassRef FamilyOfPartitions::class_of(
    std::span<const u32> set) const {
  u32 j = (u32)set.size();
  if (j < 2 || j > k_ - 1) fail_invalid("class query size out of range");
  std::vector<u32> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  u64 rank = colex_rank(sorted);
  const auto& ranks = members_[j];
  auto it = std::lower_bound(ranks.begin(), ranks.end(), rank);
  if (it == ranks.end() || *it != rank)
    fail_invalid("set is not a crossing set of the family");
  u64 slot = member_slots_[j][it - ranks.begin()];
  u32 aj = a_[j - 1];
  return ClassRef{j, slot / aj, (u32)(slot % aj) + 1};
}

u32 FamilyOfPartitions::class_label(std::span<const u32> set) const {
  return class_of(set).b;
}

bool FamilyOfPartitions::operator==(const FamilyOfPartitions& o) const {
  return n_ == o.n_ && k_ == o.k_ && a_ == o.a_ && p1_.parts == o.p1_.parts &&
         classes_ == o.classes_;
}

namespace {

[[noreturn]] void defect_error(FamilyDefect d, u32 level,
                               const AddressVector& addr, u32 b,
                               const std::string& what) {
  std::ostringstream os;
  switch (d) {
    case FamilyDefect::EmptyClass: os << "empty class"; break;
    case FamilyDefect::NotAPartition: os << "classes do not tile the polyad"; break;
    case FamilyDefect::BadClassMap: os << "malformed class map"; break;
  }
  os << ": " << what << " (level " << level << ", " << address_to_string(addr)
     << ", b=" << b << ")";
  throw FamilyBuildError(d, level, address_to_string(addr), b, os.str());
}

// Union of the level-j classes selected by x's top coordinates; valid once
// levels <= j are populated. x must sit at level j >= 2.
Hypergraph polyad_union(const FamilyOfPartitions& fam, const AddressVector& x) {
  u32 j = x.level;
  std::vector<u64> acc;
  std::vector<u32> pos(j);
  first_subset(pos);
  do {
    AddressVector z = restrict_to(x, pos, j - 1);
    u32 b = x.xi[j - 2][lex_rank(x.ell, pos)];
    const Hypergraph& cls = fam.class_graph(j, fam.address_index(z), b);
    auto r = cls.edge_ranks();
    acc.insert(acc.end(), r.begin(), r.end());
  } while (next_subset_lex(pos, x.ell));
  Hypergraph out(fam.n(), j);
  out.assign_ranks(std::move(acc));
  return out;
}

}  // namespace

FamilyOfPartitions build_family(u32 n, u32 k, std::vector<u32> a,
                                const std::vector<std::vector<u32>>& vertex_parts,
                                const std::vector<ClassSpec>& classes) {
  if (k < 2) fail_invalid("family uniformity must be at least 2");
  if (a.size() != (std::size_t)k - 1)
    fail_invalid("part-count vector must have k-1 entries");
  for (u32 ai : a)
    if (ai == 0) fail_invalid("part counts must be positive");
  if (a[0] != vertex_parts.size())
    fail_invalid("vertex part count disagrees with a[0]");
  if (a[0] < k) fail_invalid("family needs at least k vertex parts");

  FamilyOfPartitions fam;
  fam.n_ = n;
  fam.k_ = k;
  fam.a_ = std::move(a);
  fam.p1_ = make_vertex_partition(n, vertex_parts);
  for (u32 b = 1; b <= fam.a_[0]; ++b) {
    if (fam.p1_.parts[b - 1].empty()) {
      AddressVector part_addr;
      part_addr.ell = 1;
      part_addr.level = 0;
      part_addr.a = fam.a_;
      part_addr.x1 = {b};
      defect_error(FamilyDefect::EmptyClass, 1, part_addr, b,
                   "vertex part has no vertices");
    }
  }

  fam.spaces_.resize(k);
  fam.classes_.resize(k);
  fam.members_.resize(k);
  fam.member_slots_.resize(k);
  for (u32 j = 2; j + 1 <= k; ++j)
    fam.spaces_[j] = address_space(j, j - 1, fam.a_);

  // Slot every supplied class, rejecting bad keys and duplicates.
  std::vector<std::vector<bool>> seen(k);
  for (u32 j = 2; j + 1 <= k; ++j) {
    fam.classes_[j].assign(fam.spaces_[j].size() * fam.a_[j - 1],
                           Hypergraph(n, j));
    seen[j].assign(fam.classes_[j].size(), false);
  }
  for (const auto& spec : classes) {
    u32 j = spec.level;
    if (j < 2 || j + 1 > k)
      defect_error(FamilyDefect::BadClassMap, j, spec.addr, spec.b,
                   "class level outside [2, k-1]");
    if (spec.b < 1 || spec.b > fam.a_[j - 1])
      defect_error(FamilyDefect::BadClassMap, j, spec.addr, spec.b,
                   "class label outside [1, a_j]");
    if (spec.addr.ell != j || spec.addr.level != j - 1)
      defect_error(FamilyDefect::BadClassMap, j, spec.addr, spec.b,
                   "address shape is not (j, j-1)");
    u64 idx;
    try {
      idx = fam.address_index(spec.addr);
    } catch (const Error& e) {
      defect_error(FamilyDefect::BadClassMap, j, spec.addr, spec.b, e.what());
    }
    u64 slot = idx * fam.a_[j - 1] + (spec.b - 1);
    if (seen[j][slot])
      defect_error(FamilyDefect::BadClassMap, j, spec.addr, spec.b,
                   "duplicate class key");
    seen[j][slot] = true;
    try {
      fam.classes_[j][slot] = make_hypergraph(n, j, spec.edges);
    } catch (const Error& e) {
      defect_error(FamilyDefect::BadClassMap, j, spec.addr, spec.b, e.what());
    }
  }
  for (u32 j = 2; j + 1 <= k; ++j)
    for (u64 slot = 0; slot < seen[j].size(); ++slot)
      if (!seen[j][slot])
        defect_error(FamilyDefect::BadClassMap, j,
                     fam.spaces_[j][slot / fam.a_[j - 1]],
                     (u32)(slot % fam.a_[j - 1]) + 1, "missing class key");

  // Level by level: classes nonempty and tiling their polyad's clique set.
  for (u32 j = 2; j + 1 <= k; ++j) {
    u32 aj = fam.a_[j - 1];
    for (u64 idx = 0; idx < fam.spaces_[j].size(); ++idx) {
      const AddressVector& x = fam.spaces_[j][idx];
      for (u32 b = 1; b <= aj; ++b)
        if (fam.classes_[j][idx * aj + (b - 1)].edge_count() == 0)
          defect_error(FamilyDefect::EmptyClass, j, x, b, "class has no edges");

      std::vector<std::vector<u32>> clique_sets;
      if (j == 2) {
        clique_sets = crossing_sets({fam.p1_.parts[x.x1[0] - 1],
                                     fam.p1_.parts[x.x1[1] - 1]},
                                    2);
      } else {
        Hypergraph poly = polyad_union(fam, x);
        clique_sets = cliques(poly, j);
      }
      std::vector<u64> kj;
      kj.reserve(clique_sets.size());
      for (const auto& s : clique_sets) kj.push_back(colex_rank(s));
      std::sort(kj.begin(), kj.end());
      std::vector<bool> claimed(kj.size(), false);
      u64 total = 0;
      for (u32 b = 1; b <= aj; ++b) {
        for (u64 r : fam.classes_[j][idx * aj + (b - 1)].edge_ranks()) {
          auto it = std::lower_bound(kj.begin(), kj.end(), r);
          if (it == kj.end() || *it != r)
            defect_error(FamilyDefect::NotAPartition, j, x, b,
                         "class edge outside the polyad clique set");
          u64 p = it - kj.begin();
          if (claimed[p])
            defect_error(FamilyDefect::NotAPartition, j, x, b,
                         "class edge claimed twice");
          claimed[p] = true;
          ++total;
        }
      }
      if (total != kj.size())
        defect_error(FamilyDefect::NotAPartition, j, x, 0,
                     "classes do not cover the polyad clique set");
    }

    // Membership index for class_of queries.
    std::vector<std::pair<u64, u64>> entries;
    for (u64 idx = 0; idx < fam.spaces_[j].size(); ++idx)
      for (u32 b = 1; b <= aj; ++b)
        for (u64 r : fam.classes_[j][idx * aj + (b - 1)].edge_ranks())
          entries.emplace_back(r, idx * aj + (b - 1));
    std::sort(entries.begin(), entries.end());
    fam.members_[j].reserve(entries.size());
    fam.member_slots_[j].reserve(entries.size());
    for (const auto& [r, slot] : entries) {
      fam.members_[j].push_back(r);
      fam.member_slots_[j].push_back(slot);
    }
  }
  return fam;
}

std::vector<ClassSpec> extract_classes(const FamilyOfPartitions& fam) {
  std::vector<ClassSpec> out;
  for (u32 j = 2; j + 1 <= fam.k(); ++j) {
    const auto& space = fam.addresses(j);
    for (u64 idx = 0; idx < space.size(); ++idx) {
      for (u32 b = 1; b <= fam.a()[j - 1]; ++b) {
        ClassSpec spec;
        spec.level = j;
        spec.addr = space[idx];
        spec.b = b;
        fam.class_graph(j, idx, b).for_each_edge([&](std::span<const u32> e) {
          spec.edges.emplace_back(e.begin(), e.end());
        });
        out.push_back(std::move(spec));
      }
    }
  }
  return out;
}

Polyad polyad(const FamilyOfPartitions& fam, const AddressVector& x) {
  validate_address(x);
  if (x.level < 1 || x.level > fam.k() - 1)
    fail_invalid("polyad level outside [1, k-1]");
  if (x.ell < x.level + 1) fail_invalid("polyad needs ell >= level + 1");
  for (u32 i = 0; i < std::max(x.level, u32(1)); ++i)
    if (x.a[i] != fam.a()[i])
      fail_invalid("address part counts disagree with family");
  if (x.x1.back() > fam.a()[0]) fail_invalid("part label out of range");
  Polyad p;
  p.level = x.level;
  p.addr = x;
  p.part_labels = x.x1;
  for (u32 s : x.x1) p.parts.push_back(fam.vertex_partition().parts[s - 1]);
  if (x.level >= 2) p.edges = polyad_union(fam, x);
  return p;
}

Complex polyad_complex(const FamilyOfPartitions& fam, const AddressVector& x) {
  validate_address(x);
  if (x.level < 1 || x.level > fam.k() - 1)
    fail_invalid("complex level outside [1, k-1]");
  Complex c;
  c.n = fam.n();
  c.part_labels = x.x1;
  for (u32 s : x.x1) c.parts.push_back(fam.vertex_partition().parts[s - 1]);
  for (u32 i = 2; i <= x.level; ++i) {
    AddressVector xt = x;
    xt.level = i;
    xt.xi.resize(i - 1);
    c.levels.push_back(polyad(fam, xt).edges);
  }
  validate_complex(c);
  return c;
}

AddressVector address_of(const FamilyOfPartitions& fam,
                         std::span<const u32> set) {
  u32 ell = (u32)set.size();
  if (ell == 0) fail_invalid("address of the empty set is undefined");
  std::vector<std::pair<u32, u32>> labelled;  // (label, vertex)
  for (u32 v : set) labelled.emplace_back(fam.part_label(v), v);
  std::sort(labelled.begin(), labelled.end());
  for (u32 t = 0; t + 1 < ell; ++t)
    if (labelled[t].first == labelled[t + 1].first)
      fail_invalid("set is not crossing");
  AddressVector x;
  x.ell = ell;
  x.level = std::min(fam.k() - 1, ell - 1);
  x.a = fam.a();
  x.x1.resize(ell);
  for (u32 t = 0; t < ell; ++t) x.x1[t] = labelled[t].first;
  std::vector<u32> sub(x.level), pick(x.level);
  for (u32 i = 2; i <= x.level; ++i) {
    std::vector<u32> coords(binom(ell, i));
    first_subset(std::span<u32>(sub.data(), i));
    u64 m = 0;
    do {
      for (u32 t = 0; t < i; ++t) pick[t] = labelled[sub[t]].second;
      coords[m++] =
          fam.class_label(std::span<const u32>(pick.data(), i));
    } while (next_subset_lex(std::span<u32>(sub.data(), i), ell));
    x.xi.push_back(std::move(coords));
  }
  validate_address(x);
  return x;
}

std::vector<std::vector<u32>> family_crossing_sets(
    const FamilyOfPartitions& fam, u32 j, u64 cap) {
  return crossing_sets(fam.vertex_partition().parts, j, cap);
}

}  // namespace hypertest
