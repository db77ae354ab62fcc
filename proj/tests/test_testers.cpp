#include <algorithm>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "hypertest/density.hpp"
#include "hypertest/equitable.hpp"
#include "hypertest/rational.hpp"
#include "hypertest/testers.hpp"

using namespace hypertest;
using fixtures::graph_family;
using fixtures::planted_bipartite;

TEST_SUITE_BEGIN("testers");

namespace {

Hypergraph cycle(u32 n) {
  std::vector<std::vector<u32>> edges;
  for (u32 v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return make_hypergraph(n, 2, edges);
}

Hypergraph path4() {
  return make_hypergraph(4, 2, {{0, 1}, {1, 2}, {2, 3}});
}

mpq_class loose(u32, u32) { return mpq_class(1); }

}  // namespace

TEST_CASE("wilson intervals bracket the frequency") {
  auto all = wilson95(0, 0);
  CHECK(all.first == 0.0);
  CHECK(all.second == 1.0);

  auto mid = wilson95(5, 10);
  CHECK(mid.first == doctest::Approx(0.2365931).epsilon(1e-4));
  CHECK(mid.second == doctest::Approx(0.7634069).epsilon(1e-4));

  auto low = wilson95(0, 10);
  CHECK(low.first == 0.0);
  CHECK(low.second == doctest::Approx(0.2775328).epsilon(1e-4));

  auto high = wilson95(10, 10);
  CHECK(high.first == doctest::Approx(1.0 - 0.2775328).epsilon(1e-4));
  CHECK(high.second == 1.0);

  // Monotone in the accept count, and always inside [0, 1].
  double prev = -1.0;
  for (u64 acc = 0; acc <= 20; ++acc) {
    auto w = wilson95(acc, 20);
    CHECK(w.first >= 0.0);
    CHECK(w.second <= 1.0);
    CHECK(w.first < w.second);
    CHECK(w.first >= prev);
    prev = w.first;
  }
  CHECK_THROWS_AS(wilson95(3, 2), Error);
}

TEST_CASE("trial runner is deterministic and fills the report") {
  u64 calls = 0;
  Tester coin = [&calls](u64 seed) {
    ++calls;
    SplitMix64 g(seed);
    return g.below(2) == 0;
  };
  TesterReport rep = run_trials("coin", 50, 10, coin, 40, 7, {"demo"});
  CHECK(calls == 40);
  CHECK(rep.property == "coin");
  CHECK(rep.n == 50);
  CHECK(rep.q == 10);
  CHECK(rep.trials == 40);
  CHECK(rep.seed == 7);
  CHECK(rep.flags == std::vector<std::string>{"demo"});
  CHECK(rep.sample_sizes == std::vector<u32>(40, 10));
  CHECK(rep.frequency == frac(rep.accepts, 40));
  CHECK(rep.wilson == wilson95(rep.accepts, 40));

  TesterReport again = run_trials("coin", 50, 10, coin, 40, 7);
  CHECK(again.accepts == rep.accepts);

  TesterReport empty = run_trials("none", 5, 2, coin, 0, 1);
  CHECK(empty.accepts == 0);
  CHECK(empty.frequency == 0);
  CHECK(empty.wilson == std::pair<double, double>{0.0, 1.0});
}

TEST_CASE("decision sets collapse isomorphic members") {
  Hypergraph k3 = Hypergraph::complete(3, 2);
  Hypergraph p3 = make_hypergraph(3, 2, {{0, 1}, {1, 2}});
  Hypergraph p3b = make_hypergraph(3, 2, {{0, 2}, {1, 2}});
  std::vector<Hypergraph> members{k3, p3, p3b};
  DecisionSet d = make_decision_set(3, 2, members);
  CHECK(d.signatures.size() == 2);

  std::vector<Hypergraph> wrong{Hypergraph::complete(4, 2)};
  CHECK_THROWS_AS(make_decision_set(3, 2, wrong), Error);

  DecisionSet every = decision_set_where(3, 2, [](const Hypergraph&) {
    return true;
  });
  CHECK(every.signatures.size() == 4);
  DecisionSet open = decision_set_where(3, 2, [](const Hypergraph& g) {
    return g.edge_count() < 3;
  });
  CHECK(open.signatures.size() == 3);
  CHECK_THROWS_AS(decision_set_where(8, 2, [](const Hypergraph&) {
    return true;
  }), Error);
}

TEST_CASE("canonical tester matches the induced family density") {
  // Every 3-sample of a complete graph is a triangle.
  Hypergraph k8 = Hypergraph::complete(8, 2);
  std::vector<Hypergraph> tri{Hypergraph::complete(3, 2)};
  DecisionSet dtri = make_decision_set(3, 2, tri);
  TesterReport rep = run_trials(
      "triangle", 8, 3,
      [&](u64 s) { return canonical_tester(k8, 3, dtri, s); }, 25, 3);
  CHECK(rep.accepts == 25);

  DecisionSet dopen = decision_set_where(3, 2, [](const Hypergraph& g) {
    return g.edge_count() < 3;
  });
  TesterReport rep0 = run_trials(
      "open", 8, 3,
      [&](u64 s) { return canonical_tester(k8, 3, dopen, s); }, 25, 3);
  CHECK(rep0.accepts == 0);

  // On a random graph the acceptance frequency concentrates on the exact
  // induced density of the decision family.
  Hypergraph h = random_kgraph(10, 2, frac(1, 2), 99);
  Hypergraph p3 = make_hypergraph(3, 2, {{0, 1}, {1, 2}});
  std::vector<Hypergraph> fam{Hypergraph::complete(3, 2), p3};
  DecisionSet two_plus = make_decision_set(3, 2, fam);
  mpq_class pr = pr_density(fam, h);
  TesterReport freq = run_trials(
      "two-plus", 10, 3,
      [&](u64 s) { return canonical_tester(h, 3, two_plus, s); }, 4000, 17);
  CHECK(abs(freq.frequency - pr) < frac(2, 25));
  CHECK(freq.wilson.first <= pr.get_d());
  CHECK(freq.wilson.second >= pr.get_d());

  CHECK_THROWS_AS(canonical_tester(h, 4, two_plus, 1), Error);
  CHECK_THROWS_AS(canonical_tester(Hypergraph::complete(3, 3), 3, two_plus, 1),
                  Error);
}

TEST_CASE("amplification majority-votes 6r+1 runs") {
  u64 calls = 0;
  Tester yes = [&calls](u64) {
    ++calls;
    return true;
  };
  Tester amp = amplify(yes, 1);
  CHECK(amp(5));
  CHECK(calls == 7);
  CHECK_FALSE(amplify([](u64) { return false; }, 2)(5));
  CHECK_THROWS_AS(amplify(yes, 0), Error);

  // A 2/3-correct base almost always wins the vote of 25 runs.
  Tester base = [](u64 seed) {
    SplitMix64 g(seed);
    return g.below(3) < 2;
  };
  Tester boosted = amplify(base, 4);
  u64 wins = 0;
  for (u64 meta = 0; meta < 60; ++meta)
    if (boosted(derive_seed(11, meta))) ++wins;
  CHECK(wins >= 48);
}

TEST_CASE("exact maxcut maximizes crossing edges") {
  MaxcutResult c4 = maxcut_exact(complete_partite({2, 2}, 2), 2);
  CHECK(c4.value == frac(4, 6));
  CHECK(c4.partition.parts ==
        std::vector<std::vector<u32>>{{0, 1}, {2, 3}});

  MaxcutResult ring = maxcut_exact(cycle(5), 2);
  CHECK(ring.value == frac(4, 10));

  CHECK(maxcut_exact(Hypergraph(6, 2), 3).value == 0);
  CHECK(maxcut_exact(Hypergraph::complete(4, 2), 1).value == 0);

  Hypergraph k4 = Hypergraph::complete(4, 2);
  CHECK(maxcut_exact(k4, 2).value == frac(4, 6));
  CHECK(maxcut_exact(k4, 3).value == frac(5, 6));
  CHECK(maxcut_exact(k4, 4).value == 1);

  // Ties resolve to the lexicographically smallest label vector.
  Hypergraph ring4 = cycle(4);
  MaxcutResult alt = maxcut_exact(ring4, 2);
  CHECK(alt.value == frac(4, 6));
  CHECK(alt.partition.parts == std::vector<std::vector<u32>>{{0, 2}, {1, 3}});

  CHECK(maxcut_exact(Hypergraph::complete(4, 3), 3).value == frac(1, 2));

  CHECK_THROWS_AS(maxcut_exact(Hypergraph(20, 2), 3), Error);
}

TEST_CASE("balanced multipartite density bounds every cut") {
  CHECK(c_lk(4, 2, 2) == frac(2, 3));
  CHECK(c_lk(6, 3, 2) == frac(4, 5));
  CHECK(c_lk(5, 2, 3) == 0);
  CHECK(c_lk(6, 3, 3) == frac(2, 5));
  CHECK_THROWS_AS(c_lk(2, 2, 3), Error);

  // Complete graphs attain the bound exactly.
  for (u32 n = 4; n <= 9; ++n)
    for (u32 ell = 2; ell <= 3; ++ell)
      CHECK(maxcut_exact(Hypergraph::complete(n, 2), ell).value ==
            c_lk(n, ell, 2));
  CHECK(maxcut_exact(Hypergraph::complete(6, 3), 3).value == c_lk(6, 3, 3));

  for (u64 s = 0; s < 4; ++s) {
    Hypergraph h = random_kgraph(7, 2, frac(2, 5), 40 + s);
    CHECK(maxcut_exact(h, 2).value <= c_lk(7, 2, 2));
    CHECK(maxcut_exact(h, 3).value <= c_lk(7, 3, 2));
  }
}

TEST_CASE("density cuts weight crossing addresses") {
  DensityFunction half = constant_density(2, {2}, frac(1, 3));
  CHECK(cut_value(half, {{1}, {2}}) == frac(1, 6));
  CHECK(cut_value(half, {{1, 2}}) == 0);

  DensityFunction ones4 = constant_density(2, {4}, 1);
  CHECK(cut_value(ones4, {{1}, {2}, {3}, {4}}) == frac(3, 4));
  CHECK(cut_value(ones4, {{1, 3}, {2, 4}}) == frac(1, 2));
  CHECK_THROWS_AS(cut_value(ones4, {{1, 2}, {3}}), Error);
  CHECK_THROWS_AS(cut_value(ones4, {{1, 2}, {2, 3, 4}}), Error);
  CHECK_THROWS_AS(cut_value(ones4, {{1, 2}, {3, 4, 5}}), Error);

  DensityFunction tri = constant_density(3, {3, 1}, 1);
  CHECK(cut_value(tri, {{1}, {2}, {3}}) == frac(2, 9));

  CHECK(maxcut_of_density(half, 2) == frac(1, 6));
  CHECK(maxcut_of_density(ones4, 2) == frac(1, 2));
  CHECK(maxcut_of_density(ones4, 3) == frac(5, 8));
  CHECK(maxcut_of_density(ones4, 4) == frac(3, 4));
  CHECK(maxcut_of_density(tri, 3) == frac(2, 9));
  CHECK_THROWS_AS(maxcut_of_density(constant_density(2, {30}, 1), 2), Error);

  // On a complete partite realization with equal part sizes m the graph cut
  // equals the density cut rescaled by (n^2/2) / C(n,2).
  DensityFunction mixed = make_density_function(2, {3}, {1, 0, 1});
  Hypergraph h = complete_partite_on(
      12, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}}, 2);
  Hypergraph g = h;
  for (u32 u : {0, 1, 2, 3})
    for (u32 v : {8, 9, 10, 11}) g.set_edge(std::vector<u32>{u, v}, false);
  CHECK(maxcut_exact(g, 2).value * binom(12, 2) ==
        maxcut_of_density(mixed, 2) * 72);
  CHECK(maxcut_exact(h, 2).value * binom(12, 2) ==
        maxcut_of_density(constant_density(2, {3}, 1), 2) * 72);
}

TEST_CASE("threshold decisions carry certificates") {
  // Exact path.
  CutDecision small = maxcut_at_least(cycle(5), 2, frac(4, 10));
  CHECK(small.at_least);
  CHECK(small.certified);
  CHECK(small.lower == frac(4, 10));
  CHECK(small.upper == frac(4, 10));
  CHECK_FALSE(maxcut_at_least(cycle(5), 2, frac(41, 100)).at_least);

  // Bipartite shortcut beyond the enumeration guard.
  Hypergraph big_bip = complete_partite({15, 15}, 2);
  CutDecision bip = maxcut_at_least(big_bip, 2, frac(1, 2));
  CHECK(bip.at_least);
  CHECK(bip.certified);
  CHECK(bip.lower == frac(225, 435));
  CHECK(bip.upper == bip.lower);
  CutDecision bip_no = maxcut_at_least(big_bip, 2, frac(226, 435));
  CHECK_FALSE(bip_no.at_least);
  CHECK(bip_no.certified);

  // Local search certifies acceptance on a near-bipartite graph.
  Hypergraph noisy = big_bip;
  noisy.set_edge(std::vector<u32>{0, 1}, true);
  noisy.set_edge(std::vector<u32>{2, 3}, true);
  noisy.set_edge(std::vector<u32>{15, 16}, true);
  CutDecision ls = maxcut_at_least(noisy, 2, frac(1, 2), 200000, 5);
  CHECK(ls.at_least);
  CHECK(ls.certified);
  CHECK(ls.lower >= frac(225, 435));

  // Odd-cycle packing certifies rejection on a dense random graph.
  Hypergraph rnd = random_kgraph(30, 2, frac(1, 2), 12);
  CutDecision rej = maxcut_at_least(rnd, 2, frac(12, 25), 200000, 5);
  CHECK_FALSE(rej.at_least);
  CHECK(rej.certified);
  CHECK(rej.upper < frac(12, 25));

  // Exhausting the branch-and-bound budget drops the certificate.
  MaxcutResult exact30 = maxcut_exact(cycle(5), 2);
  CHECK(exact30.value == frac(2, 5));  // sanity anchor for thresholds below
  CutDecision starved = maxcut_at_least(rnd, 2, frac(2, 5), 1, 5);
  if (!starved.certified) CHECK_FALSE(starved.at_least);

  CHECK(maxcut_at_least(rnd, 2, 0).at_least);
  CHECK_THROWS_AS(maxcut_at_least(Hypergraph::complete(30, 3), 3, frac(1, 2)),
                  Error);
}

TEST_CASE("maxcut tester separates bipartite from random") {
  TesterConfig cfg;
  cfg.q = 20;
  Hypergraph yes = complete_partite({20, 20}, 2);
  TesterReport ok = run_trials(
      "maxcut", 40, cfg.q,
      [&](u64 s) { return test_maxcut(yes, 2, frac(1, 2), frac(1, 5), cfg, s); },
      30, 21);
  CHECK(ok.accepts >= 20);

  Hypergraph no = random_kgraph(40, 2, frac(1, 2), 23);
  TesterReport bad = run_trials(
      "maxcut", 40, cfg.q,
      [&](u64 s) { return test_maxcut(no, 2, frac(1, 2), frac(1, 5), cfg, s); },
      30, 22);
  CHECK(bad.accepts <= 10);

  CHECK(test_maxcut(yes, 2, frac(1, 2), frac(1, 5), cfg, 9) ==
        test_maxcut(yes, 2, frac(1, 2), frac(1, 5), cfg, 9));
  CHECK_THROWS_AS(test_maxcut(yes, 2, frac(1, 2), 0, cfg, 1), Error);
  CHECK_THROWS_AS(test_maxcut(yes, 2, frac(-1, 2), frac(1, 5), cfg, 1), Error);
}

TEST_CASE("density tester separates matching from extreme graphs") {
  TesterConfig cfg;
  cfg.q = 30;
  Hypergraph f = Hypergraph::complete(3, 2);
  mpq_class p = frac(1, 8), delta = frac(1, 20), alpha = frac(1, 8);

  Hypergraph match = random_kgraph(60, 2, frac(1, 2), 31);
  TesterReport ok = run_trials(
      "homdensity", 60, cfg.q,
      [&](u64 s) { return test_hom_density(match, f, p, delta, alpha, cfg, s); },
      30, 5);
  CHECK(ok.accepts >= 20);

  Hypergraph full = Hypergraph::complete(60, 2);
  TesterReport bad = run_trials(
      "homdensity", 60, cfg.q,
      [&](u64 s) { return test_hom_density(full, f, p, delta, alpha, cfg, s); },
      30, 6);
  CHECK(bad.accepts == 0);

  Hypergraph none(60, 2);
  CHECK_FALSE(test_hom_density(none, f, p, delta, alpha, cfg, 3));

  // A window radius of one accepts anything.
  CHECK(test_hom_density(full, f, 0, 1, alpha, cfg, 3));

  CHECK_THROWS_AS(test_hom_density(match, f, frac(9, 8), delta, alpha, cfg, 1),
                  Error);
  CHECK_THROWS_AS(test_hom_density(match, f, p, delta, 0, cfg, 1), Error);
  TesterConfig tiny;
  tiny.q = 2;
  CHECK_THROWS_AS(test_hom_density(match, f, p, delta, alpha, tiny, 1), Error);
}

TEST_CASE("regularity tester decides exactly at small scale") {
  Hypergraph h = complete_partite_on(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}, 2);
  RegularityInstance tight =
      make_instance(2, frac(1, 32), {2}, constant_density(2, {2}, 1), loose);
  TesterConfig cfg;
  cfg.q = 8;
  cfg.nu = 0;
  CHECK(test_regularity_instance(h, tight, frac(1, 4), cfg, 1));

  Hypergraph dented = h;
  dented.set_edge(std::vector<u32>{0, 4}, false);
  CHECK_FALSE(test_regularity_instance(dented, tight, frac(1, 4), cfg, 1));
  cfg.nu = frac(1, 28);  // one edit of the 28 pair slots
  CHECK(test_regularity_instance(dented, tight, frac(1, 4), cfg, 1));

  CHECK_THROWS_AS(test_regularity_instance(h, tight, 0, cfg, 1), Error);
  TesterConfig wide;
  wide.q = 1;
  CHECK_THROWS_AS(test_regularity_instance(h, tight, frac(1, 4), wide, 1),
                  Error);
}

TEST_CASE("regularity tester hill-climbs at sampling scale") {
  const auto fam = graph_family(32, 2);
  DensityFunction d = constant_density(2, {2}, frac(3, 4));
  RegularityInstance r = make_instance(2, frac(1, 8), {2}, d, loose);
  TesterConfig cfg;
  cfg.q = 16;
  cfg.nu = frac(1, 10);

  Hypergraph close = planted_bipartite(fam, d, 77);
  u32 accepts = 0;
  for (u64 s = 0; s < 10; ++s)
    if (test_regularity_instance(close, r, frac(1, 4), cfg, s)) ++accepts;
  CHECK(accepts >= 8);

  // Every labeling of an empty sample misses the density window by far
  // more than the edit budget.
  Hypergraph none(32, 2);
  for (u64 s = 0; s < 5; ++s)
    CHECK_FALSE(test_regularity_instance(none, r, frac(1, 4), cfg, s));

  CHECK(test_regularity_instance(close, r, frac(1, 4), cfg, 3) ==
        test_regularity_instance(close, r, frac(1, 4), cfg, 3));

  RegularityInstance deep =
      make_instance(3, frac(1, 8), {2, 2}, constant_density(3, {2, 2}, 1), loose);
  Hypergraph h3(16, 3);
  TesterConfig cfg3;
  cfg3.q = 16;
  cfg3.nu = frac(1, 2);
  CHECK_THROWS_AS(test_regularity_instance(h3, deep, frac(1, 4), cfg3, 1),
                  Error);
}

TEST_CASE("density repair lands in the one-over-n window") {
  Hypergraph f = Hypergraph::complete(3, 2);

  // Overshoot: a p = 0.54 random graph has triangle density above 1/8.
  Hypergraph over = random_kgraph(60, 2, frac(27, 50), 8);
  mpq_class t0 = t_inj(f, over);
  REQUIRE(t0 > frac(1, 8) + frac(1, 60));
  REQUIRE(abs(t0 - frac(1, 8)) <= frac(3, 50));
  Hypergraph fixed = repair_hom_density(over, f, frac(1, 8), frac(3, 50));
  CHECK(abs(t_inj(f, fixed) - frac(1, 8)) <= frac(1, 60));
  u64 edits = sym_diff_size(fixed, over);
  CHECK(edits > 0);
  CHECK(edits <= 80);

  // Undershoot: p = 0.45 sits below, repair adds edges.
  Hypergraph under = random_kgraph(60, 2, frac(9, 20), 9);
  mpq_class t1 = t_inj(f, under);
  REQUIRE(t1 < frac(1, 8) - frac(1, 60));
  REQUIRE(abs(t1 - frac(1, 8)) <= frac(1, 18));
  Hypergraph raised = repair_hom_density(under, f, frac(1, 8), frac(1, 18));
  CHECK(abs(t_inj(f, raised) - frac(1, 8)) <= frac(1, 60));
  CHECK(sym_diff_size(raised, under) > 0);

  // Already inside the window: unchanged.
  mpq_class stay = t_inj(f, over);
  CHECK(repair_hom_density(over, f, stay, frac(1, 100)) == over);

  // Edgeless patterns have density one everywhere.
  Hypergraph blank(5, 2);
  CHECK(repair_hom_density(over, Hypergraph(3, 2), 1, 0) == over);
  CHECK_THROWS_AS(repair_hom_density(over, Hypergraph(3, 2), frac(1, 2), 0),
                  Error);

  // Slack violations.
  CHECK_THROWS_AS(repair_hom_density(blank, f, frac(1, 8), frac(1, 100)),
                  Error);
  CHECK_THROWS_AS(repair_hom_density(over, f, frac(1, 10), frac(1, 10)),
                  Error);
}

TEST_CASE("cut repair adds crossing sets in rank order") {
  Hypergraph bip = complete_partite({6, 6}, 2);
  Hypergraph dented = bip;
  dented.set_edge(std::vector<u32>{0, 6}, false);
  dented.set_edge(std::vector<u32>{1, 7}, false);
  dented.set_edge(std::vector<u32>{2, 8}, false);
  REQUIRE(maxcut_exact(dented, 2).value == frac(33, 66));

  Hypergraph mended =
      repair_maxcut(dented, 2, frac(6, 11), frac(1, 20), frac(1, 10));
  CHECK(mended == bip);
  CHECK(sym_diff_size(mended, dented) == 3);

  // Already at the target: unchanged.
  CHECK(repair_maxcut(bip, 2, frac(1, 2), frac(1, 20), frac(1, 10)) == bip);

  // A star witness is unbalanced; the repair rebalances it first.
  std::vector<std::vector<u32>> star_edges;
  for (u32 v = 1; v < 8; ++v) star_edges.push_back({0, v});
  Hypergraph star = make_hypergraph(8, 2, star_edges);
  REQUIRE(maxcut_exact(star, 2).value == frac(7, 28));
  Hypergraph grown =
      repair_maxcut(star, 2, frac(9, 28), frac(2, 28), frac(1, 5));
  CHECK(sym_diff_size(grown, star) == 5);
  CHECK(maxcut_exact(grown, 2).value >= frac(9, 28));

  CHECK_THROWS_AS(
      repair_maxcut(bip, 2, frac(99, 100), frac(1, 2), frac(1, 2)), Error);
  CHECK_THROWS_AS(
      repair_maxcut(Hypergraph(8, 2), 2, frac(1, 2), frac(1, 100), 1), Error);
}

TEST_CASE("generic properties search flip sets for the distance") {
  PropertySpec some_edge = make_property(
      "has an edge", [](const Hypergraph& g) { return g.edge_count() > 0; });
  CHECK(distance_to_property_exact(Hypergraph(4, 2), some_edge) == frac(1, 6));
  CHECK(distance_to_property_exact(Hypergraph::complete(4, 2), some_edge) == 0);

  // All edges crossing one 2-split: the complete graph needs both edges of
  // a perfect matching removed.
  PropertySpec two_colorable =
      make_property("edges crossing a 2-split", [](const Hypergraph& g) {
        return maxcut_exact(g, 2).value * binom(g.n(), g.k()) ==
               g.edge_count();
      });
  CHECK(distance_to_property_exact(Hypergraph::complete(4, 2), two_colorable) ==
        frac(2, 6));
  CHECK(distance_to_property_exact(cycle(5), two_colorable) == frac(1, 10));

  Hypergraph wide(9, 2);
  CHECK_THROWS_AS(some_edge.distance(wide), Error);
}

TEST_CASE("threshold cut property has an additions-only distance") {
  PropertySpec cut23 = maxcut_property(2, frac(2, 3));
  CHECK(distance_to_property_exact(Hypergraph::complete(4, 2), cut23) == 0);
  CHECK(distance_to_property_exact(Hypergraph(4, 2), cut23) == frac(4, 6));
  CHECK(distance_to_property_exact(path4(), cut23) == frac(1, 6));

  // The specialized distance agrees with the generic flip-set search.
  PropertySpec generic = make_property("cut threshold", cut23.membership);
  for (u64 s = 0; s < 10; ++s) {
    Hypergraph h = random_kgraph(5, 2, frac(1, 2), 60 + s);
    PropertySpec half = maxcut_property(2, frac(1, 2));
    mpq_class dist = distance_to_property_exact(h, half);
    PropertySpec gen_half = make_property("cut threshold", half.membership);
    CHECK(dist == gen_half.distance(h));
    CHECK(dist <= 1);
  }
  CHECK(distance_to_property_exact(Hypergraph::complete(4, 2), generic) == 0);

  CHECK_THROWS_AS(maxcut_property(2, frac(-1, 2)), Error);
  PropertySpec steep = maxcut_property(2, frac(99, 100));
  CHECK_THROWS_AS(steep.distance(Hypergraph(4, 2)), Error);
}

TEST_CASE("density window property couples membership and distance") {
  Hypergraph f = Hypergraph::complete(3, 2);
  PropertySpec win = hom_density_property(f, 1, 0);
  CHECK(distance_to_property_exact(Hypergraph::complete(4, 2), win) == 0);
  Hypergraph nearly = Hypergraph::complete(4, 2);
  nearly.set_edge(std::vector<u32>{0, 1}, false);
  CHECK(distance_to_property_exact(nearly, win) == frac(1, 6));
  CHECK_THROWS_AS(hom_density_property(f, 2, 0), Error);
}

TEST_CASE("distance estimation thresholds the sample distance") {
  TesterConfig cfg;
  cfg.q = 6;
  Hypergraph f = Hypergraph::complete(3, 2);
  PropertySpec win = hom_density_property(f, 1, 0);

  Hypergraph full = Hypergraph::complete(12, 2);
  for (u64 s = 0; s < 5; ++s)
    CHECK(estimate_distance(full, win, frac(1, 2), frac(1, 2), cfg, s));

  Hypergraph blank(12, 2);
  for (u64 s = 0; s < 5; ++s)
    CHECK_FALSE(estimate_distance(blank, win, frac(1, 2), frac(1, 2), cfg, s));

  // beta >= alpha clamps the threshold at zero; members still pass.
  CHECK(estimate_distance(full, win, frac(1, 10), frac(1, 2), cfg, 1));

  CHECK_THROWS_AS(estimate_distance(full, win, 0, frac(1, 2), cfg, 1), Error);
  CHECK_THROWS_AS(estimate_distance(full, win, frac(1, 2), 0, cfg, 1), Error);

  // Postcondition checks reject a lying distance oracle.
  PropertySpec liar;
  liar.name = "liar";
  liar.membership = [](const Hypergraph&) { return true; };
  liar.distance = [](const Hypergraph&) { return frac(1, 2); };
  CHECK_THROWS_AS(distance_to_property_exact(blank, liar), Error);
  PropertySpec hollow;
  hollow.name = "hollow";
  CHECK_THROWS_AS(distance_to_property_exact(blank, hollow), Error);
}

TEST_SUITE_END();
