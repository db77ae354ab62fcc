#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hypertest/iso.hpp"
#include "hypertest/rng.hpp"

using namespace hypertest;

TEST_SUITE_BEGIN("iso");

namespace {

Hypergraph permuted(const Hypergraph& h, const std::vector<u32>& pi) {
  std::vector<std::vector<u32>> edges;
  h.for_each_edge([&](std::span<const u32> e) {
    std::vector<u32> img;
    for (u32 v : e) img.push_back(pi[v]);
    edges.push_back(img);
  });
  return make_hypergraph(h.n(), h.k(), edges);
}

}  // namespace

TEST_CASE("signatures are invariant under relabelling") {
  SplitMix64 g(5);
  for (u64 seed = 0; seed < 10; ++seed) {
    auto h = random_kgraph(7, 2, mpq_class(1, 2), 40 + seed);
    std::vector<u32> pi(h.n());
    std::iota(pi.begin(), pi.end(), 0u);
    for (u32 i = 0; i < pi.size(); ++i)
      std::swap(pi[i], pi[i + g.below(pi.size() - i)]);
    CHECK(canonical_signature(h) == canonical_signature(permuted(h, pi)));
    CHECK(isomorphic(h, permuted(h, pi)));
  }
  // 3-uniform too.
  auto h3 = random_kgraph(6, 3, mpq_class(1, 2), 9);
  std::vector<u32> pi = {3, 1, 5, 0, 2, 4};
  CHECK(isomorphic(h3, permuted(h3, pi)));
}

TEST_CASE("non-isomorphic graphs with equal basic invariants separate") {
  // Both have 6 vertices and 6 edges with degree sequence 2,2,2,2,2,2:
  // one 6-cycle vs two triangles.
  auto c6 = make_hypergraph(
      6, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  auto tt = make_hypergraph(
      6, 2, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(!isomorphic(c6, tt));
  CHECK(canonical_signature(c6) != canonical_signature(tt));
}

TEST_CASE("signature equality exactly matches brute-force isomorphism") {
  // Brute force: try all permutations.
  auto brute_iso = [](const Hypergraph& a, const Hypergraph& b) {
    if (a.n() != b.n() || a.k() != b.k() || a.edge_count() != b.edge_count())
      return false;
    std::vector<u32> pi(a.n());
    std::iota(pi.begin(), pi.end(), 0u);
    do {
      bool ok = true;
      a.for_each_edge([&](std::span<const u32> e) {
        if (!ok) return;
        std::vector<u32> img;
        for (u32 v : e) img.push_back(pi[v]);
        if (!b.has_edge(img)) ok = false;
      });
      if (ok) return true;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return false;
  };
  for (u64 seed = 0; seed < 30; ++seed) {
    auto a = random_kgraph(6, 2, mpq_class(1, 2), 300 + seed);
    auto b = random_kgraph(6, 2, mpq_class(1, 2), 600 + seed);
    CHECK(isomorphic(a, b) == brute_iso(a, b));
  }
  for (u64 seed = 0; seed < 10; ++seed) {
    auto a = random_kgraph(6, 3, mpq_class(1, 2), 900 + seed);
    auto b = random_kgraph(6, 3, mpq_class(1, 2), 950 + seed);
    CHECK(isomorphic(a, b) == brute_iso(a, b));
  }
}

TEST_CASE("highly symmetric graphs do not blow the search up") {
  auto kn = Hypergraph::complete(10, 2);
  CHECK(canonical_signature(kn).size() == 2 + binom(10, 2));
  auto empty = Hypergraph(10, 2);
  CHECK(canonical_signature(empty) != canonical_signature(kn));
}

TEST_CASE("automorphism counts of known graphs") {
  CHECK(automorphism_count(Hypergraph::complete(3, 2)) == 6);
  CHECK(automorphism_count(make_hypergraph(3, 2, {{0, 1}, {1, 2}})) == 2);
  CHECK(automorphism_count(Hypergraph(4, 2)) == 24);  // empty graph
  // Single k-edge plus isolated vertex: k! * 1.
  CHECK(automorphism_count(make_hypergraph(4, 3, {{0, 1, 2}})) == 6);
  // 6-cycle: dihedral group of order 12.
  auto c6 = make_hypergraph(
      6, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  CHECK(automorphism_count(c6) == 12);
  CHECK_THROWS_AS(automorphism_count(Hypergraph(11, 2)), Error);
}

TEST_SUITE_END();
