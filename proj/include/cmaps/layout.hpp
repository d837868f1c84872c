#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "diagram.hpp"

namespace cmaps {

/// Where a chord is drawn: inside or outside the circle, and through which
/// handle of the corresponding fundamental polygon (-1 = plain disk chord).
struct ChordRoute {
  int edge = -1;
  bool inside = false;
  int handle = -1;
  int slot = -1;  // 0 or 1: which side pair of the handle
};

/// Combinatorial drawing data: the circle order of the flags, the two
/// fundamental polygons with their side matchings, and a crossing-free
/// routing of every chord.
struct PolygonLayout {
  std::vector<int> circle;  // diagram word, root first
  long map_genus = 0;
  long tree_genus = 0;
  int inner_sides = 0;  // 4 * tree_genus
  int outer_sides = 0;  // 4 * (map_genus - tree_genus)
  std::vector<std::array<int, 2>> inner_matching;  // side pairs, opposite orientation
  std::vector<std::array<int, 2>> outer_matching;
  std::vector<ChordRoute> routes;  // sorted by edge id
  long interior_dual_vertices = 0;  // |S| - 2 g_S + 1
};

namespace detail {

struct SideWord {
  std::vector<int> syms;  // symbol per position, each exactly twice

  std::vector<int> positions_of(int s) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < syms.size(); ++i)
      if (syms[i] == s) out.push_back(static_cast<int>(i));
    return out;
  }
  bool interlaced(int e, int f) const {
    auto pe = positions_of(e), pf = positions_of(f);
    bool in1 = pe[0] < pf[0] && pf[0] < pe[1];
    bool in2 = pe[0] < pf[1] && pf[1] < pe[1];
    return in1 != in2;
  }
  std::vector<int> symbols() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < syms.size(); ++i) {
      int s = syms[i];
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  /// Genus of the one-vertex map the word describes.
  long genus() const {
    long e = static_cast<long>(syms.size()) / 2;
    if (e == 0) return 0;
    std::vector<int> mate(syms.size());
    for (int s : symbols()) {
      auto p = positions_of(s);
      mate[static_cast<std::size_t>(p[0])] = p[1];
      mate[static_cast<std::size_t>(p[1])] = p[0];
    }
    std::vector<bool> seen(syms.size(), false);
    long faces = 0;
    for (std::size_t i = 0; i < syms.size(); ++i) {
      if (seen[i]) continue;
      ++faces;
      std::size_t j = i;
      do {
        seen[j] = true;
        j = (static_cast<std::size_t>(mate[j]) + 1) % syms.size();
      } while (j != i);
    }
    long defect = 1 + e - faces;
    if (defect < 0 || defect % 2 != 0)
      throw std::logic_error("one-vertex map has invalid Euler defect");
    return defect / 2;
  }
  /// Pivot at an interlaced pair, then delete both chords.  Each such step
  /// routes the pair through one handle and lowers the genus by one.
  SideWord consume_pair(int e, int f) const {
    std::size_t n = syms.size();
    std::vector<int> mate(n);
    for (int s : symbols()) {
      auto p = positions_of(s);
      mate[static_cast<std::size_t>(p[0])] = p[1];
      mate[static_cast<std::size_t>(p[1])] = p[0];
    }
    SideWord out;
    std::size_t i = 0;
    for (std::size_t k = 0; k < n; ++k) {
      out.syms.push_back(syms[i]);
      std::size_t j = (syms[i] == e || syms[i] == f)
                          ? static_cast<std::size_t>(mate[i])
                          : i;
      i = (j + 1) % n;
    }
    if (out.syms.size() != n) throw std::logic_error("pivot walk left the word");
    std::erase_if(out.syms, [&](int s) { return s == e || s == f; });
    return out;
  }
};

struct SideReduction {
  std::vector<std::array<int, 2>> handles;  // (slot-0 chord, slot-1 chord)
  std::vector<int> disk;                    // chords needing no handle
};

/// Genus reduction: repeatedly route the smallest interlaced pair through a
/// fresh handle until the remaining chords nest.
inline SideReduction reduce_side(SideWord w) {
  SideReduction red;
  for (;;) {
    int e = -1, f = -1;
    auto symbols = w.symbols();
    for (std::size_t a = 0; a < symbols.size() && e < 0; ++a)
      for (std::size_t b = a + 1; b < symbols.size(); ++b)
        if (w.interlaced(symbols[a], symbols[b])) {
          e = symbols[a];
          f = symbols[b];
          break;
        }
    if (e < 0) break;
    red.handles.push_back({e, f});
    w = w.consume_pair(e, f);
  }
  red.disk = w.symbols();
  return red;
}

}  // namespace detail

/// Drawing data for a map from one of its quasi-trees: quasi-tree chords go
/// inside the circle (through the inner polygon where needed), the rest
/// outside.
inline PolygonLayout layout(const RootedMap& r, const EdgeSubset& s) {
  BicoloredDiagram d = diagram_of(r, s);  // rejects non-quasi-trees
  PolygonLayout out;
  out.circle = d.word;
  out.map_genus = genus_of(r.map).genus;
  out.tree_genus = quasi_tree_genus(r.map, s);
  out.inner_sides = static_cast<int>(4 * out.tree_genus);
  out.outer_sides = static_cast<int>(4 * (out.map_genus - out.tree_genus));
  for (long k = 0; k < out.tree_genus; ++k) {
    out.inner_matching.push_back({static_cast<int>(4 * k), static_cast<int>(4 * k + 2)});
    out.inner_matching.push_back({static_cast<int>(4 * k + 1), static_cast<int>(4 * k + 3)});
  }
  for (long k = 0; k < out.map_genus - out.tree_genus; ++k) {
    out.outer_matching.push_back({static_cast<int>(4 * k), static_cast<int>(4 * k + 2)});
    out.outer_matching.push_back({static_cast<int>(4 * k + 1), static_cast<int>(4 * k + 3)});
  }

  detail::SideWord inside, outside;
  for (int i = 0; i < d.length(); ++i) {
    if (d.color1[static_cast<std::size_t>(i)])
      inside.syms.push_back(d.symbol_at(i));
    else
      outside.syms.push_back(d.symbol_at(i));
  }
  if (inside.genus() != out.tree_genus)
    throw std::logic_error("interior one-vertex map genus differs from the quasi-tree genus");
  if (outside.genus() != out.map_genus - out.tree_genus)
    throw std::logic_error("exterior one-vertex map genus differs from g - g_S");

  auto add_routes = [&](const detail::SideWord& w, bool is_inside, long expect_handles) {
    detail::SideReduction red = detail::reduce_side(w);
    if (static_cast<long>(red.handles.size()) != expect_handles)
      throw std::logic_error("handle count does not match the side genus");
    for (std::size_t k = 0; k < red.handles.size(); ++k) {
      out.routes.push_back({red.handles[k][0], is_inside, static_cast<int>(k), 0});
      out.routes.push_back({red.handles[k][1], is_inside, static_cast<int>(k), 1});
    }
    for (int e : red.disk) out.routes.push_back({e, is_inside, -1, -1});
  };
  add_routes(inside, true, out.tree_genus);
  add_routes(outside, false, out.map_genus - out.tree_genus);
  std::sort(out.routes.begin(), out.routes.end(),
            [](const ChordRoute& a, const ChordRoute& b) { return a.edge < b.edge; });

  out.interior_dual_vertices = static_cast<long>(s.size()) - 2 * out.tree_genus + 1;
  return out;
}

}  // namespace cmaps
