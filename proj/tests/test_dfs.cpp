#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cmaps/dfs.hpp"
#include "oracles.hpp"
#include "testmaps.hpp"

using namespace cmaps;

TEST_CASE("dfs on the smallest maps") {
  RootedMap link{link_map(), 0};
  CHECK(dfs(link, DfsPolicy::Early).tree == EdgeSubset{0});
  CHECK(dfs(link, DfsPolicy::Late).tree == EdgeSubset{0});

  RootedMap loop{loop_map(), 0};
  CHECK(dfs(loop, DfsPolicy::Early).tree.empty());
  CHECK(dfs(loop, DfsPolicy::Late).tree.empty());
  CHECK(dfs(loop, DfsPolicy::Early).visit_order == std::vector<int>{0, 1});
}

TEST_CASE("early and late trees of the digon differ") {
  RootedMap d{digon_map(), 0};
  EdgeSubset early = dfs(d, DfsPolicy::Early).tree;
  EdgeSubset late = dfs(d, DfsPolicy::Late).tree;
  CHECK(early == EdgeSubset{0});
  CHECK(late == EdgeSubset{2});
  CHECK(is_early(d, early));
  CHECK_FALSE(is_late(d, early));
  CHECK(is_late(d, late));
  CHECK_FALSE(is_early(d, late));
}

TEST_CASE("word-level tremaux pattern") {
  // "a f a b f b" with a, b in the tree: f interlaced on both sides
  CHECK_FALSE(tremaux_word({0, 2, 0, 1, 2, 1}, {0, 1}));
  CHECK(tremaux_word({0, 2, 0, 1, 2, 1}, {0}));
  // a tree-only word has no offending f at all
  CHECK(tremaux_word({0, 1, 1, 0}, {0, 1}));
}

TEST_CASE("dfs output is a tremaux spanning tree under both readings") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    GeneralMap g = oracles::random_map(1 + static_cast<int>(rng() % 5), rng);
    RootedMap r{g, g.flags()[rng() % g.flags().size()]};
    for (DfsPolicy p : {DfsPolicy::Early, DfsPolicy::Late}) {
      DfsResult res = dfs(r, p);
      CHECK(is_spanning_tree(g, res.tree));
      CHECK(is_tremaux(r, res.tree));
      CHECK(oracles::tremaux_graph(r, res.tree));
      CHECK(res.visit_order.size() == g.flags().size());
    }
  }
}

TEST_CASE("pattern test equals the ancestor-descendant test") {
  // Lemma-level equivalence, both directions, exhaustively on small maps
  for (int m = 1; m <= 4; ++m) {
    for (const auto& rm : oracles::all_rooted_maps(m)) {
      for (const auto& t : oracles::spanning_trees(rm.map))
        CHECK(is_tremaux(rm, t) == oracles::tremaux_graph(rm, t));
    }
  }
}

TEST_CASE("early and late trees satisfy their patterns exhaustively") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& rm : oracles::all_rooted_maps(m)) {
      EdgeSubset early = dfs(rm, DfsPolicy::Early).tree;
      EdgeSubset late = dfs(rm, DfsPolicy::Late).tree;
      CHECK(is_early(rm, early));
      CHECK(is_late(rm, late));
    }
  }
}

TEST_CASE("the patterns characterize the extremal trees") {
  // the converse direction, verified rather than assumed
  for (int m = 1; m <= 4; ++m) {
    for (const auto& rm : oracles::all_rooted_maps(m)) {
      EdgeSubset early = dfs(rm, DfsPolicy::Early).tree;
      EdgeSubset late = dfs(rm, DfsPolicy::Late).tree;
      for (const auto& t : oracles::spanning_trees(rm.map)) {
        if (is_early(rm, t)) CHECK(t == early);
        if (is_late(rm, t)) CHECK(t == late);
      }
    }
  }
}

TEST_CASE("orientation reversal swaps the policies") {
  // Reversing sigma turns the Late tree into the Early tree of the reversed
  // map rooted at sigma^{-1} of the root (the root marker stays put on the
  // circle, so the scan starts one step earlier).
  std::mt19937 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    GeneralMap g = oracles::random_map(1 + static_cast<int>(rng() % 5), rng);
    int root = g.flags()[rng() % g.flags().size()];
    RootedMap r{g, root};
    RootedMap rr{reverse(g), g.sigma.inverse()(root)};
    CHECK(dfs(r, DfsPolicy::Late).tree == dfs(rr, DfsPolicy::Early).tree);
    CHECK(dfs(r, DfsPolicy::Early).tree == dfs(rr, DfsPolicy::Late).tree);
  }
}

TEST_CASE("tour words coincide across duality") {
  // the word of tree S in M equals the word of the complement in M*
  std::mt19937 rng(103);
  for (int trial = 0; trial < 30; ++trial) {
    GeneralMap g = oracles::random_map(1 + static_cast<int>(rng() % 5), rng);
    RootedMap r{g, g.flags().front()};
    RootedMap dr{dual(g), r.root};
    for (const auto& s : list_quasi_trees(g)) {
      EdgeSubset comp;
      for (int e : g.edge_ids())
        if (!std::binary_search(s.begin(), s.end(), e)) comp.push_back(e);
      CHECK(edge_word(diagram_of(r, s)) == edge_word(diagram_of(dr, comp)));
    }
  }
}

TEST_CASE("planar dfs duality on the digon and theta") {
  RootedMap d{digon_map(), 0};
  DualityReport rep = check_planar_dfs_duality(d, dfs(d, DfsPolicy::Early).tree);
  CHECK(rep.complement_is_dual_dfs);
  CHECK(rep.s_is_early);
  CHECK(rep.comp_is_late_dual);
  CHECK(rep.dichotomy_holds);

  RootedMap th{theta_map(), 0};
  DualityReport rep2 = check_planar_dfs_duality(th, dfs(th, DfsPolicy::Early).tree);
  CHECK(rep2.dichotomy_holds);
  CHECK(rep2.complement_is_dual_dfs);

  CHECK_THROWS_AS(check_planar_dfs_duality(RootedMap{torus_map(), 0}, EdgeSubset{0, 1}),
                  std::domain_error);
  CHECK_THROWS_AS(check_planar_dfs_duality(RootedMap{loop_map(), 0}, EdgeSubset{}),
                  std::domain_error);
}

TEST_CASE("a non-extremal dfs tree fails the dual dfs property") {
  // search small 2-connected planar maps for a witness
  bool witness = false;
  for (int m = 2; m <= 4 && !witness; ++m) {
    for (const auto& rm : oracles::all_rooted_maps(m)) {
      if (genus_of(rm.map).genus != 0 || !is_two_connected(rm.map)) continue;
      EdgeSubset early = dfs(rm, DfsPolicy::Early).tree;
      EdgeSubset late = dfs(rm, DfsPolicy::Late).tree;
      for (const auto& t : oracles::spanning_trees(rm.map)) {
        if (!is_tremaux(rm, t) || t == early || t == late) continue;
        DualityReport rep = check_planar_dfs_duality(rm, t);
        CHECK(rep.dichotomy_holds);
        if (!rep.complement_is_dual_dfs) witness = true;
      }
    }
  }
  CHECK(witness);
}
