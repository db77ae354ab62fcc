#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hypertest/family.hpp"

using namespace hypertest;
using fixtures::diagonal_family;
using fixtures::full_family_k4;

TEST_SUITE("family") {

TEST_CASE("k=2 vertex partition is a valid family") {
  auto p = equipartition(8, 4);
  auto fam = build_family(8, 2, {4}, p.parts, {});
  CHECK(fam.part_label(0) == 1);
  CHECK(fam.part_label(7) == 4);
  CHECK(family_crossing_sets(fam, 2).size() == 24);

  auto addr = address_of(fam, std::vector<u32>{0, 7});
  CHECK(addr.level == 1);
  CHECK(addr.x1 == std::vector<u32>{1, 4});

  auto poly = polyad(fam, addr);
  CHECK(poly.level == 1);
  REQUIRE(poly.parts.size() == 2);
  CHECK(poly.parts[0] == std::vector<u32>{0, 1});
  CHECK(poly.parts[1] == std::vector<u32>{6, 7});
  CHECK(count_polyad_cliques(poly, 2) == 4);
  CHECK(polyad_spans(poly, std::vector<u32>{1, 6}));
  CHECK(!polyad_spans(poly, std::vector<u32>{1, 4}));
}

TEST_CASE("diagonal fixture builds and classes read back") {
  auto fam = diagonal_family();
  CHECK(fam.n() == 6);
  CHECK(fam.k() == 3);

  // Pair {0,2} has equal indices: label 1. Pair {1,2} crosses: label 2.
  CHECK(fam.class_label(std::vector<u32>{0, 2}) == 1);
  CHECK(fam.class_label(std::vector<u32>{1, 2}) == 2);
  CHECK(fam.class_label(std::vector<u32>{3, 5}) == 1);
  CHECK(fam.class_label(std::vector<u32>{2, 5}) == 2);
  CHECK_THROWS_AS(fam.class_label(std::vector<u32>{0, 1}), Error);
  CHECK_THROWS_AS(fam.class_label(std::vector<u32>{0, 2, 4}), Error);

  // Rebuilding from the extracted classes reproduces the family.
  auto specs = extract_classes(fam);
  CHECK(specs.size() == 6);
  auto again = build_family(6, 3, {3, 2},
                            fam.vertex_partition().parts, specs);
  CHECK(again == fam);
}

TEST_CASE("address_of reads labels off the classes") {
  auto fam = diagonal_family();
  auto addr = address_of(fam, std::vector<u32>{0, 3, 5});
  CHECK(addr.level == 2);
  CHECK(addr.x1 == std::vector<u32>{1, 2, 3});
  // Pairs {0,3}, {0,5}, {3,5}: indices (0,1), (0,1), (1,1).
  CHECK(addr.xi[0] == std::vector<u32>{2, 2, 1});

  auto single = address_of(fam, std::vector<u32>{3});
  CHECK(single.level == 0);
  CHECK(single.x1 == std::vector<u32>{2});

  CHECK_THROWS_AS(address_of(fam, std::vector<u32>{2, 3, 4}), Error);
}

TEST_CASE("polyad of a triple address unions its three pair classes") {
  auto fam = diagonal_family();
  AddressVector x;
  x.ell = 3;
  x.level = 2;
  x.a = {3, 2};
  x.x1 = {1, 2, 3};
  x.xi = {{1, 1, 1}};
  auto poly = polyad(fam, x);
  CHECK(poly.level == 2);
  CHECK(poly.edges.edge_count() == 6);
  // The three matchings with equal indices.
  CHECK(poly.edges.has_edge(std::vector<u32>{0, 2}));
  CHECK(poly.edges.has_edge(std::vector<u32>{1, 3}));
  CHECK(poly.edges.has_edge(std::vector<u32>{0, 4}));
  CHECK(poly.edges.has_edge(std::vector<u32>{2, 4}));
  CHECK(!poly.edges.has_edge(std::vector<u32>{0, 3}));

  auto triples = polyad_cliques(poly, 3);
  std::sort(triples.begin(), triples.end());
  REQUIRE(triples.size() == 2);
  CHECK(triples[0] == std::vector<u32>{0, 2, 4});
  CHECK(triples[1] == std::vector<u32>{1, 3, 5});
}

TEST_CASE("top-level polyad spans partition the crossing triples") {
  auto fam = diagonal_family();
  auto space = address_space(3, 2, {3, 2});
  auto ground = family_crossing_sets(fam, 3);
  REQUIRE(ground.size() == 8);

  u64 covered = 0;
  for (const auto& L : ground) {
    u32 hits = 0;
    for (const auto& x : space)
      if (polyad_spans(polyad(fam, x), L)) ++hits;
    CHECK(hits == 1);  // unique supporting polyad
    ++covered;
  }
  CHECK(covered == 8);

  // Half of the eight addresses span no triple at all; their union still
  // tiles the ground set.
  u64 total = 0, empty_addrs = 0;
  for (const auto& x : space) {
    u64 c = count_polyad_cliques(polyad(fam, x), 3);
    total += c;
    if (c == 0) ++empty_addrs;
  }
  CHECK(total == 8);
  CHECK(empty_addrs == 4);

  // Every spanned triple reads back the address it came from.
  for (const auto& x : space)
    for (const auto& L : polyad_cliques(polyad(fam, x), 3))
      CHECK(address_of(fam, L) == x);
}

TEST_CASE("pair polyads never span an empty clique set") {
  auto fam = diagonal_family();
  for (const auto& x : address_space(2, 1, {3, 2}))
    CHECK(count_polyad_cliques(polyad(fam, x), 2) == 4);
}

TEST_CASE("classes refine the polyad clique sets") {
  auto fam = diagonal_family();
  SetPartition classes, polyads;
  for (u64 idx = 0; idx < fam.addresses(2).size(); ++idx) {
    std::vector<u64> span;
    for (u32 b = 1; b <= 2; ++b) {
      auto ranks = fam.class_graph(2, idx, b).edge_ranks();
      std::vector<u64> cls(ranks.begin(), ranks.end());
      std::sort(cls.begin(), cls.end());
      span.insert(span.end(), cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    std::sort(span.begin(), span.end());
    polyads.push_back(std::move(span));
  }
  CHECK(refines(classes, polyads));
  CHECK(set_partition_ground_size(classes) == 12);
}

TEST_CASE("subset addresses restrict") {
  auto fam = diagonal_family();
  std::vector<u32> J{1, 2, 5};
  auto xj = address_of(fam, J);
  for (u32 drop = 0; drop < 3; ++drop) {
    std::vector<u32> I;
    for (u32 t = 0; t < 3; ++t)
      if (t != drop) I.push_back(J[t]);
    CHECK(is_restriction(address_of(fam, I), xj));
  }
  CHECK(is_restriction(address_of(fam, std::vector<u32>{5}), xj));
  CHECK(is_restriction(xj, xj));
}

TEST_CASE("polyad_complex lowers a triple address") {
  auto fam = diagonal_family();
  AddressVector x;
  x.ell = 3;
  x.level = 2;
  x.a = {3, 2};
  x.x1 = {1, 2, 3};
  x.xi = {{2, 2, 1}};
  auto c = polyad_complex(fam, x);
  CHECK(c.part_labels == std::vector<u32>{1, 2, 3});
  REQUIRE(c.levels.size() == 1);
  CHECK(c.levels[0].edge_count() == 6);
  CHECK(c.levels[0].has_edge(std::vector<u32>{0, 3}));
  CHECK(c.levels[0].has_edge(std::vector<u32>{2, 4}));
  CHECK(!c.levels[0].has_edge(std::vector<u32>{0, 2}));
}

TEST_CASE("build rejects an empty class") {
  std::vector<std::vector<u32>> parts{{0, 1}, {2, 3}, {4, 5}};
  std::vector<ClassSpec> classes;
  for (const auto& addr : address_space(2, 1, {3, 2})) {
    u32 s = addr.x1[0] - 1, t = addr.x1[1] - 1;
    ClassSpec all, none;
    all.level = none.level = 2;
    all.addr = none.addr = addr;
    all.b = 1;
    none.b = 2;
    for (u32 u : parts[s])
      for (u32 v : parts[t]) all.edges.push_back({u, v});
    classes.push_back(all);
    classes.push_back(none);
  }
  try {
    build_family(6, 3, {3, 2}, parts, classes);
    FAIL("expected a build error");
  } catch (const FamilyBuildError& e) {
    CHECK(e.defect() == FamilyDefect::EmptyClass);
    CHECK(e.level() == 2);
    CHECK(e.b() == 2);
  }
}

TEST_CASE("build rejects overlapping classes") {
  std::vector<std::vector<u32>> parts{{0, 1}, {2, 3}, {4, 5}};
  std::vector<ClassSpec> classes;
  for (const auto& addr : address_space(2, 1, {3, 2})) {
    u32 s = addr.x1[0] - 1, t = addr.x1[1] - 1;
    ClassSpec one, two;
    one.level = two.level = 2;
    one.addr = two.addr = addr;
    one.b = 1;
    two.b = 2;
    one.edges = {{parts[s][0], parts[t][0]}, {parts[s][1], parts[t][1]}};
    two.edges = {{parts[s][0], parts[t][0]}, {parts[s][1], parts[t][0]}};
    classes.push_back(one);
    classes.push_back(two);
  }
  try {
    build_family(6, 3, {3, 2}, parts, classes);
    FAIL("expected a build error");
  } catch (const FamilyBuildError& e) {
    CHECK(e.defect() == FamilyDefect::NotAPartition);
    CHECK(e.level() == 2);
  }
}

TEST_CASE("build rejects bad class maps") {
  std::vector<std::vector<u32>> parts{{0, 1}, {2, 3}, {4, 5}};
  auto fam = diagonal_family();
  auto specs = extract_classes(fam);

  auto missing = specs;
  missing.pop_back();
  CHECK_THROWS_AS(build_family(6, 3, {3, 2}, parts, missing),
                  FamilyBuildError);

  auto dup = specs;
  dup.push_back(dup.front());
  try {
    build_family(6, 3, {3, 2}, parts, dup);
    FAIL("expected a build error");
  } catch (const FamilyBuildError& e) {
    CHECK(e.defect() == FamilyDefect::BadClassMap);
  }

  auto bad_b = specs;
  bad_b.back().b = 7;
  try {
    build_family(6, 3, {3, 2}, parts, bad_b);
    FAIL("expected a build error");
  } catch (const FamilyBuildError& e) {
    CHECK(e.defect() == FamilyDefect::BadClassMap);
  }
}

TEST_CASE("build rejects an empty vertex part") {
  try {
    build_family(4, 2, {3}, {{0, 1}, {2, 3}, {}}, {});
    FAIL("expected a build error");
  } catch (const FamilyBuildError& e) {
    CHECK(e.defect() == FamilyDefect::EmptyClass);
    CHECK(e.level() == 1);
    CHECK(e.b() == 3);
  }
}

TEST_CASE("four-uniform family with unit class counts") {
  auto fam = full_family_k4();
  CHECK(fam.k() == 4);

  // Every crossing set's class label is 1 at both levels.
  CHECK(fam.class_label(std::vector<u32>{0, 2}) == 1);
  CHECK(fam.class_label(std::vector<u32>{1, 3, 6}) == 1);

  auto quad = address_of(fam, std::vector<u32>{0, 2, 4, 6});
  CHECK(quad.level == 3);
  CHECK(quad.x1 == std::vector<u32>{1, 2, 3, 4});
  CHECK(quad.xi[0] == std::vector<u32>(6, 1));
  CHECK(quad.xi[1] == std::vector<u32>(4, 1));

  auto poly = polyad(fam, quad);
  CHECK(poly.level == 3);
  CHECK(poly.edges.edge_count() == 32);
  CHECK(count_polyad_cliques(poly, 4) == 16);

  auto c = polyad_complex(fam, quad);
  REQUIRE(c.levels.size() == 2);
  CHECK(c.levels[0].edge_count() == 24);
  CHECK(c.levels[1].edge_count() == 32);

  // Crossing 4-sets are spanned by exactly this polyad.
  for (const auto& L : family_crossing_sets(fam, 4)) {
    CHECK(polyad_spans(poly, L));
    CHECK(address_of(fam, L) == quad);
  }
}

TEST_CASE("class partitions tile each level's ground set") {
  auto fam = full_family_k4();
  for (u32 j = 2; j <= 3; ++j) {
    u64 total = 0;
    const auto& space = fam.addresses(j);
    for (u64 idx = 0; idx < space.size(); ++idx)
      total += fam.class_graph(j, idx, 1).edge_count();
    CHECK(total == family_crossing_sets(fam, j).size());
  }
}

}  // TEST_SUITE
