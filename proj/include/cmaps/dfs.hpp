#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "diagram.hpp"

namespace cmaps {

/// The two deterministic flag policies: Early always takes the first
/// admissible flag in sigma order from the current position, Late the last.
enum class DfsPolicy { Early, Late };

struct DfsResult {
  EdgeSubset tree;
  std::vector<int> visit_order;                  // flags in first-visit order
  std::vector<std::pair<int, int>> discovery;    // (vertex min flag, discovery flag), non-root
};

/// Depth-first search on a rooted map.
///
/// The search walks flags: at the current vertex the candidate flags are
/// scanned in sigma order starting at the anchor (the root flag itself at
/// the start, the flag just processed afterwards).  A new flag whose
/// opposite lands on an unvisited vertex adds a tree edge and moves the
/// search there; when a vertex is exhausted the search resumes at the
/// parent-side flag of its discovery edge.
inline DfsResult dfs(const RootedMap& r, DfsPolicy policy) {
  const GeneralMap& m = r.map;
  if (m.flag_count() == 0) throw std::domain_error("dfs needs at least one flag");
  const auto& fl = m.flags();
  auto idx = [&](int b) {
    return static_cast<std::size_t>(
        std::lower_bound(fl.begin(), fl.end(), b) - fl.begin());
  };
  // vertex id = min flag of the sigma cycle
  std::vector<int> vert(fl.size());
  for (const auto& cyc : m.sigma.cycles())
    for (int b : cyc) vert[idx(b)] = cyc.front();
  std::vector<int> degree(fl.size(), 0);
  for (const auto& cyc : m.sigma.cycles())
    for (int b : cyc) degree[idx(b)] = static_cast<int>(cyc.size());

  std::vector<bool> flag_visited(fl.size(), false);
  std::set<int> vertex_visited;
  std::vector<int> discovery_of(fl.size(), -1);  // keyed by vertex min flag index

  DfsResult res;
  int root_vertex = vert[idx(r.root)];
  vertex_visited.insert(root_vertex);

  int anchor = r.root;
  int cur_vertex = root_vertex;

  auto mark = [&](int b) {
    flag_visited[idx(b)] = true;
    res.visit_order.push_back(b);
  };

  for (;;) {
    // unvisited flags at the current vertex, in sigma order from the anchor
    // (the anchor itself is unvisited only at the very first step, at the root)
    std::vector<int> cands;
    int b = anchor;
    for (int k = 0; k < degree[idx(anchor)]; ++k) {
      if (!flag_visited[idx(b)]) cands.push_back(b);
      b = m.sigma(b);
    }
    if (cands.empty()) {
      if (cur_vertex == root_vertex) break;
      int disc = discovery_of[idx(cur_vertex)];
      anchor = m.alpha(disc);  // resume at the parent side of the tree edge
      cur_vertex = vert[idx(anchor)];
      continue;
    }
    int c = (policy == DfsPolicy::Early) ? cands.front() : cands.back();
    mark(c);
    int c2 = m.alpha(c);
    if (!vertex_visited.count(vert[idx(c2)])) {
      mark(c2);
      vertex_visited.insert(vert[idx(c2)]);
      discovery_of[idx(vert[idx(c2)])] = c2;
      res.tree.push_back(m.edge_of(c));
      cur_vertex = vert[idx(c2)];
      anchor = c2;
    } else {
      anchor = c;  // back edge; keep scanning this vertex
    }
  }
  if (vertex_visited.size() != m.sigma.cycle_count())
    throw std::invalid_argument("dfs requires a connected map");
  std::sort(res.tree.begin(), res.tree.end());
  for (const auto& cyc : m.sigma.cycles()) {
    int d = discovery_of[idx(cyc.front())];
    if (d >= 0) res.discovery.emplace_back(cyc.front(), d);
  }
  return res;
}

namespace detail {

inline std::set<int> interlace_partners(const std::vector<int>& word, int sym, bool out) {
  // out: partners f with "sym f sym f"; in: partners with "f sym f sym"
  std::map<int, std::vector<int>> occ;
  for (std::size_t i = 0; i < word.size(); ++i)
    occ[word[i]].push_back(static_cast<int>(i));
  std::set<int> res;
  const auto& a = occ.at(sym);
  for (const auto& [f, b] : occ) {
    if (f == sym || b.size() != 2) continue;
    bool arc_out = a[0] < b[0] && b[0] < a[1] && a[1] < b[1];
    bool arc_in = b[0] < a[0] && a[0] < b[1] && b[1] < a[1];
    if ((out && arc_out) || (!out && arc_in)) res.insert(f);
  }
  return res;
}

}  // namespace detail

/// Word-level Tremaux test: no non-tree symbol has both an in-neighbor and
/// an out-neighbor inside the tree (no pattern e1 f e1 e2 f e2, e1,e2 in S).
inline bool tremaux_word(const std::vector<int>& word, const EdgeSubset& tree) {
  std::set<int> syms(word.begin(), word.end());
  for (int f : syms) {
    if (std::binary_search(tree.begin(), tree.end(), f)) continue;
    bool has_in = false, has_out = false;
    for (int e : detail::interlace_partners(word, f, false))
      if (std::binary_search(tree.begin(), tree.end(), e)) has_in = true;
    for (int e : detail::interlace_partners(word, f, true))
      if (std::binary_search(tree.begin(), tree.end(), e)) has_out = true;
    if (has_in && has_out) return false;
  }
  return true;
}

/// Early pattern: no "f e f e" with e in the tree (tree edges are sources).
inline bool early_word(const std::vector<int>& word, const EdgeSubset& tree) {
  for (int e : tree)
    if (!detail::interlace_partners(word, e, false).empty()) return false;
  return true;
}

/// Late pattern: no "e f e f" with e in the tree (tree edges are sinks).
inline bool late_word(const std::vector<int>& word, const EdgeSubset& tree) {
  for (int e : tree)
    if (!detail::interlace_partners(word, e, true).empty()) return false;
  return true;
}

namespace detail {

inline std::vector<int> spanning_tree_word(const RootedMap& r, const EdgeSubset& s) {
  if (!is_quasi_tree(r.map, s) || quasi_tree_genus(r.map, s) != 0)
    throw std::domain_error("subset is not a spanning tree");
  return edge_word(diagram_of(r, s));
}

}  // namespace detail

inline bool is_tremaux(const RootedMap& r, const EdgeSubset& s) {
  return tremaux_word(detail::spanning_tree_word(r, s), s);
}

inline bool is_early(const RootedMap& r, const EdgeSubset& s) {
  return early_word(detail::spanning_tree_word(r, s), s);
}

inline bool is_late(const RootedMap& r, const EdgeSubset& s) {
  return late_word(detail::spanning_tree_word(r, s), s);
}

inline bool is_two_connected(const GeneralMap& g) {
  if (!is_connected(g)) return false;
  UnderlyingGraph ug = underlying_graph(g);
  std::size_t n = ug.vertices.size();
  if (n < 2) return false;
  for (const auto& inc : ug.incidences)
    if (inc.loop) return false;
  // no cut vertex: removing any vertex keeps the rest connected
  for (std::size_t skip = 0; skip < n; ++skip) {
    std::vector<int> parent(static_cast<int>(n), -1);
    std::vector<std::size_t> stack;
    std::size_t start = (skip == 0) ? 1 : 0;
    stack.push_back(start);
    parent[start] = static_cast<int>(start);
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (const auto& inc : ug.incidences) {
        std::size_t a = static_cast<std::size_t>(inc.v1);
        std::size_t b = static_cast<std::size_t>(inc.v2);
        if (a == skip || b == skip) continue;
        std::size_t w = static_cast<std::size_t>(-1);
        if (a == v) w = b;
        else if (b == v) w = a;
        else continue;
        if (parent[w] < 0) {
          parent[w] = static_cast<int>(v);
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != n - 1) return false;
  }
  return true;
}

struct DualityReport {
  bool complement_is_dual_dfs = false;
  bool s_is_early = false;
  bool s_is_late = false;
  bool comp_is_early_dual = false;
  bool comp_is_late_dual = false;
  bool dichotomy_holds = false;
};

/// Planar DFS duality: for a DFS-tree S of a 2-connected planar rooted map,
/// the complement of S is a DFS-tree of the dual (rooted at the same flag)
/// exactly when S is the Early tree and the complement the dual's Late tree,
/// or vice versa.
inline DualityReport check_planar_dfs_duality(const RootedMap& r, const EdgeSubset& s) {
  if (genus_of(r.map).genus != 0)
    throw std::domain_error("duality check requires a planar map");
  if (!is_two_connected(r.map))
    throw std::domain_error("duality check requires a 2-connected map");
  if (!is_tremaux(r, s))
    throw std::domain_error("subset is not a DFS-tree");
  EdgeSubset comp;
  for (int e : r.map.edge_ids())
    if (!std::binary_search(s.begin(), s.end(), e)) comp.push_back(e);
  RootedMap dr{dual(r.map), r.root};

  DualityReport rep;
  rep.complement_is_dual_dfs = is_tremaux(dr, comp);
  rep.s_is_early = (s == dfs(r, DfsPolicy::Early).tree);
  rep.s_is_late = (s == dfs(r, DfsPolicy::Late).tree);
  rep.comp_is_early_dual = (comp == dfs(dr, DfsPolicy::Early).tree);
  rep.comp_is_late_dual = (comp == dfs(dr, DfsPolicy::Late).tree);
  bool extremal_pairing = (rep.s_is_early && rep.comp_is_late_dual) ||
                          (rep.s_is_late && rep.comp_is_early_dual);
  rep.dichotomy_holds = (rep.complement_is_dual_dfs == extremal_pairing);
  return rep;
}

}  // namespace cmaps
