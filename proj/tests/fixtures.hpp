#pragma once

#include <algorithm>
#include <vector>

#include "hypertest/density.hpp"
#include "hypertest/family.hpp"
#include "hypertest/rng.hpp"

namespace fixtures {

using namespace hypertest;

// Six vertices in three parts of two; each pair of parts splits its four
// crossing pairs into the two perfect matchings ("diagonal" classes).
// Pair {u, v} gets label 1 when u and v have equal within-part index.
inline FamilyOfPartitions diagonal_family() {
  std::vector<std::vector<u32>> parts{{0, 1}, {2, 3}, {4, 5}};
  std::vector<ClassSpec> classes;
  auto pair_space = address_space(2, 1, {3, 2});
  for (const auto& addr : pair_space) {
    u32 s = addr.x1[0] - 1, t = addr.x1[1] - 1;
    ClassSpec match, cross;
    match.level = cross.level = 2;
    match.addr = cross.addr = addr;
    match.b = 1;
    cross.b = 2;
    match.edges = {{parts[s][0], parts[t][0]}, {parts[s][1], parts[t][1]}};
    cross.edges = {{parts[s][0], parts[t][1]}, {parts[s][1], parts[t][0]}};
    classes.push_back(match);
    classes.push_back(cross);
  }
  return build_family(6, 3, {3, 2}, parts, classes);
}

// Eight vertices in four parts of two, k = 4 with a = (4,1,1): one class per
// address at levels 2 and 3, each equal to its polyad's whole clique set.
inline FamilyOfPartitions full_family_k4() {
  std::vector<std::vector<u32>> parts{{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  std::vector<ClassSpec> classes;
  for (const auto& addr : address_space(2, 1, {4, 1, 1})) {
    ClassSpec spec;
    spec.level = 2;
    spec.addr = addr;
    spec.b = 1;
    for (u32 u : parts[addr.x1[0] - 1])
      for (u32 v : parts[addr.x1[1] - 1]) spec.edges.push_back({u, v});
    classes.push_back(spec);
  }
  for (const auto& addr : address_space(3, 2, {4, 1, 1})) {
    ClassSpec spec;
    spec.level = 3;
    spec.addr = addr;
    spec.b = 1;
    for (u32 u : parts[addr.x1[0] - 1])
      for (u32 v : parts[addr.x1[1] - 1])
        for (u32 w : parts[addr.x1[2] - 1]) spec.edges.push_back({u, v, w});
    classes.push_back(spec);
  }
  return build_family(8, 4, {4, 1, 1}, parts, classes);
}

// Vertex-partition-only family: n vertices equipartitioned into a1 parts.
inline FamilyOfPartitions graph_family(u32 n, u32 a1) {
  return build_family(n, 2, {a1}, equipartition(n, a1).parts, {});
}

// Crossing 2-graph sampled pair by pair at the density of its address.
inline Hypergraph planted_bipartite(const FamilyOfPartitions& fam,
                                    const DensityFunction& d, u64 seed) {
  std::vector<std::vector<u32>> edges;
  SplitMix64 g(seed);
  const auto& parts = fam.vertex_partition().parts;
  const auto space = address_space(2, 1, fam.a());
  for (u64 r = 0; r < space.size(); ++r) {
    const BernoulliDraw draw(d.values[r]);
    for (u32 u : parts[space[r].x1[0] - 1])
      for (u32 v : parts[space[r].x1[1] - 1])
        if (draw.sample(g)) edges.push_back({std::min(u, v), std::max(u, v)});
  }
  return make_hypergraph(fam.n(), 2, edges);
}

}  // namespace fixtures
