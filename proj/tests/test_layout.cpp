#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cmaps/layout.hpp"
#include "oracles.hpp"
#include "testmaps.hpp"

using namespace cmaps;

TEST_CASE("layout of a planar map with a spanning tree needs no polygons") {
  RootedMap d{digon_map(), 0};
  PolygonLayout lay = layout(d, {0});
  CHECK(lay.map_genus == 0);
  CHECK(lay.tree_genus == 0);
  CHECK(lay.inner_sides == 0);
  CHECK(lay.outer_sides == 0);
  CHECK(lay.inner_matching.empty());
  REQUIRE(lay.routes.size() == 2);
  CHECK(lay.routes[0].edge == 0);
  CHECK(lay.routes[0].inside);
  CHECK(lay.routes[0].handle == -1);
  CHECK(lay.routes[1].edge == 2);
  CHECK_FALSE(lay.routes[1].inside);
  CHECK(lay.interior_dual_vertices == 2);  // |S| - 0 + 1
}

TEST_CASE("layout of the torus map with the full quasi-tree") {
  PolygonLayout lay = layout(RootedMap{torus_map(), 0}, {0, 1});
  CHECK(lay.map_genus == 1);
  CHECK(lay.tree_genus == 1);
  CHECK(lay.inner_sides == 4);
  CHECK(lay.outer_sides == 0);
  REQUIRE(lay.inner_matching.size() == 2);
  CHECK(lay.inner_matching[0] == std::array<int, 2>{0, 2});
  CHECK(lay.inner_matching[1] == std::array<int, 2>{1, 3});
  CHECK(lay.interior_dual_vertices == 1);  // 2 - 2 + 1
  REQUIRE(lay.routes.size() == 2);
  CHECK(lay.routes[0].handle == 0);
  CHECK(lay.routes[0].slot == 0);
  CHECK(lay.routes[1].handle == 0);
  CHECK(lay.routes[1].slot == 1);
}

TEST_CASE("layout of the loop with the empty quasi-tree") {
  PolygonLayout lay = layout(RootedMap{loop_map(), 0}, {});
  CHECK(lay.inner_sides == 0);
  CHECK(lay.outer_sides == 0);
  REQUIRE(lay.routes.size() == 1);
  CHECK_FALSE(lay.routes[0].inside);
  CHECK(lay.routes[0].handle == -1);

  CHECK_THROWS_AS(layout(RootedMap{loop_map(), 0}, {0}), std::domain_error);
}

TEST_CASE("interior dual vertex formula on all small pairs") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& rm : oracles::all_rooted_maps(m)) {
      for (const auto& s : list_quasi_trees(rm.map)) {
        PolygonLayout lay = layout(rm, s);
        CHECK(lay.interior_dual_vertices ==
              static_cast<long>(s.size()) - 2 * lay.tree_genus + 1);
        // dual vertices = faces of the interior one-vertex map
        detail::SideWord inside;
        BicoloredDiagram d = diagram_of(rm, s);
        for (int i = 0; i < d.length(); ++i)
          if (d.color1[static_cast<std::size_t>(i)])
            inside.syms.push_back(d.symbol_at(i));
        long e = static_cast<long>(inside.syms.size()) / 2;
        long faces = e - 2 * inside.genus() + 1;
        CHECK(lay.interior_dual_vertices == faces);
      }
    }
  }
}

TEST_CASE("routing is crossing-free in the quotient") {
  // Independent re-check of the handle assignment: chords routed through a
  // handle interlace at the moment of consumption, handles are exhausted in
  // order, and the leftover disk chords are pairwise non-interlaced.
  std::mt19937 rng(127);
  for (int trial = 0; trial < 40; ++trial) {
    GeneralMap g = oracles::random_map(1 + static_cast<int>(rng() % 5), rng);
    RootedMap r{g, g.flags().front()};
    auto qts = list_quasi_trees(g);
    const auto& s = qts[rng() % qts.size()];
    PolygonLayout lay = layout(r, s);
    BicoloredDiagram d = diagram_of(r, s);

    for (bool inside : {true, false}) {
      detail::SideWord side;
      for (int i = 0; i < d.length(); ++i)
        if (d.color1[static_cast<std::size_t>(i)] == inside)
          side.syms.push_back(d.symbol_at(i));
      std::vector<std::pair<int, int>> handle_pairs;
      std::vector<int> disk;
      for (const auto& rt : lay.routes) {
        if (rt.inside != inside) continue;
        if (rt.handle < 0) {
          disk.push_back(rt.edge);
        } else {
          if (static_cast<std::size_t>(rt.handle) >= handle_pairs.size())
            handle_pairs.resize(static_cast<std::size_t>(rt.handle) + 1, {-1, -1});
          if (rt.slot == 0)
            handle_pairs[static_cast<std::size_t>(rt.handle)].first = rt.edge;
          else
            handle_pairs[static_cast<std::size_t>(rt.handle)].second = rt.edge;
        }
      }
      // replay: each handle pair must interlace in the current word
      detail::SideWord cur = side;
      for (auto [e, f] : handle_pairs) {
        REQUIRE(e >= 0);
        REQUIRE(f >= 0);
        CHECK(cur.interlaced(e, f));
        cur = cur.consume_pair(e, f);
      }
      auto rest = cur.symbols();
      CHECK(rest == EdgeSubset(disk.begin(), disk.end()));
      for (std::size_t a = 0; a < rest.size(); ++a)
        for (std::size_t b = a + 1; b < rest.size(); ++b)
          CHECK_FALSE(cur.interlaced(rest[a], rest[b]));
    }
  }
}

TEST_CASE("exterior side realizes the remaining genus") {
  std::mt19937 rng(131);
  for (int trial = 0; trial < 40; ++trial) {
    GeneralMap g = oracles::random_map(1 + static_cast<int>(rng() % 5), rng);
    RootedMap r{g, g.flags().front()};
    for (const auto& s : list_quasi_trees(g)) {
      PolygonLayout lay = layout(r, s);
      long outer_handles = 0, inner_handles = 0;
      for (const auto& rt : lay.routes)
        if (rt.handle >= 0 && rt.slot == 0) (rt.inside ? inner_handles : outer_handles)++;
      CHECK(inner_handles == lay.tree_genus);
      CHECK(outer_handles == lay.map_genus - lay.tree_genus);
      CHECK(lay.inner_sides == 4 * lay.tree_genus);
      CHECK(lay.outer_sides == 4 * (lay.map_genus - lay.tree_genus));
    }
  }
}
