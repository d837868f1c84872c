#pragma once

#include <map>
#include <numeric>
#include <stdexcept>

#include "bigcount.hpp"
#include "map.hpp"

namespace cmaps {

/// Tour of an edge subset: tau = sigma . alpha_F, i.e. tau(b) = sigma(alpha(b))
/// on flags of F-edges and sigma(b) elsewhere.
inline Perm tour(const GeneralMap& g, const EdgeSubset& f) {
  std::vector<int> img(g.flags().size());
  const auto& fl = g.flags();
  for (std::size_t i = 0; i < fl.size(); ++i) {
    int b = fl[i];
    bool in_f = std::binary_search(f.begin(), f.end(), g.edge_of(b));
    img[i] = in_f ? g.sigma(g.alpha(b)) : g.sigma(b);
  }
  return Perm::from_images(fl, std::move(img));
}

/// A quasi-tree is an edge subset whose tour is a single cycle.  The empty
/// subset of the empty map counts as one (the one-vertex map's tree).
inline bool is_quasi_tree(const GeneralMap& g, const EdgeSubset& s) {
  if (g.flag_count() == 0) return s.empty();
  return tour(g, s).cycle_count() == 1;
}

/// Genus of a quasi-tree: (|S| - (n - 1)) / 2 with n the vertex count.
inline long quasi_tree_genus(const GeneralMap& g, const EdgeSubset& s) {
  if (!is_quasi_tree(g, s))
    throw std::domain_error("subset is not a quasi-tree");
  long n = vertex_count(g);
  long d = static_cast<long>(s.size()) - (n - 1);
  if (d < 0 || d % 2 != 0)
    throw std::logic_error("quasi-tree parity violated");
  return d / 2;
}

inline bool is_spanning_tree(const GeneralMap& g, const EdgeSubset& s) {
  return is_quasi_tree(g, s) && quasi_tree_genus(g, s) == 0;
}

namespace detail {

/// Component count of G(M) with one edge removed.
inline std::size_t graph_components_without(const GeneralMap& g, int skip_edge) {
  UnderlyingGraph ug = underlying_graph(g);
  std::size_t n = ug.vertices.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = n;
  for (const auto& inc : ug.incidences) {
    if (inc.edge == skip_edge) continue;
    std::size_t a = find(static_cast<std::size_t>(inc.v1));
    std::size_t b = find(static_cast<std::size_t>(inc.v2));
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

}  // namespace detail

/// Bridge: G(M) - e is disconnected.  Stated for connected maps.
inline bool is_bridge(const GeneralMap& g, int e) {
  if (!g.has_edge(e)) throw std::invalid_argument("no such edge");
  return detail::graph_components_without(g, e) > 1;
}

/// Separating loop: a bridge of the dual map.
inline bool is_separating_loop(const GeneralMap& g, int e) {
  return is_bridge(dual(g), e);
}

/// Deletion M \ e: both permutations restricted to the surviving flags.
/// Refused on bridges (a bridge lies in every quasi-tree).
inline GeneralMap erase_edge(const GeneralMap& g, int e) {
  if (is_bridge(g, e))
    throw std::domain_error("edge " + std::to_string(e) + " is a bridge; deletion refused");
  std::vector<int> rest;
  for (int b : g.flags())
    if (g.edge_of(b) != e) rest.push_back(b);
  return GeneralMap{g.sigma.restrict_to(rest), g.alpha.restrict_to(rest)};
}

/// Contraction M / e = (M* \ e)*: sigma becomes (sigma alpha)|_B' . alpha|_B'.
/// Refused on separating loops.
inline GeneralMap contract_edge(const GeneralMap& g, int e) {
  if (is_separating_loop(g, e))
    throw std::domain_error("edge " + std::to_string(e) +
                            " is a separating loop; contraction refused");
  std::vector<int> rest;
  for (int b : g.flags())
    if (g.edge_of(b) != e) rest.push_back(b);
  Perm alpha_r = g.alpha.restrict_to(rest);
  Perm face_r = compose(g.sigma, g.alpha).restrict_to(rest);
  return GeneralMap{compose(face_r, alpha_r), alpha_r};
}

/// All quasi-trees, in subset-bitmask order over the sorted edge list.
inline std::vector<EdgeSubset> list_quasi_trees(const GeneralMap& g) {
  std::vector<int> edges = g.edge_ids();
  if (edges.size() > 24)
    throw std::domain_error("too many edges for exhaustive quasi-tree listing");
  std::vector<EdgeSubset> out;
  for (unsigned long mask = 0; mask < (1ul << edges.size()); ++mask) {
    EdgeSubset s;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask & (1ul << i)) s.push_back(edges[i]);
    if (is_quasi_tree(g, s)) out.push_back(std::move(s));
  }
  return out;
}

namespace detail {

inline BigCount count_quasi_trees_rec(const GeneralMap& g,
                                      std::map<std::string, BigCount>& memo) {
  std::vector<int> edges = g.edge_ids();
  if (edges.empty()) return 1;
  std::string key = canonical_code(RootedMap{g, g.flags().front()});
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  BigCount result;
  int pivot = -1;
  for (int e : edges) {
    if (!is_bridge(g, e) && !is_separating_loop(g, e)) {
      pivot = e;
      break;
    }
  }
  if (pivot >= 0) {
    result = count_quasi_trees_rec(contract_edge(g, pivot), memo) +
             count_quasi_trees_rec(erase_edge(g, pivot), memo);
  } else {
    // forced edge: bridges contract, separating loops delete
    int e = edges.front();
    result = is_bridge(g, e) ? count_quasi_trees_rec(contract_edge(g, e), memo)
                             : count_quasi_trees_rec(erase_edge(g, e), memo);
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace detail

/// Number of quasi-trees by the deletion/contraction recursion.
inline BigCount count_quasi_trees(const GeneralMap& g) {
  if (!is_connected(g))
    throw std::domain_error("quasi-tree count is defined for connected maps");
  std::map<std::string, BigCount> memo;
  return detail::count_quasi_trees_rec(g, memo);
}

/// Whether two edges of a quasi-tree diagram interlace: their flags
/// alternate along the tour cycle.
inline bool edges_interlaced_in_tour(const GeneralMap& g, const EdgeSubset& s,
                                     int e, int f) {
  if (e == f) return false;
  Perm t = tour(g, s);
  if (t.cycle_count() != 1)
    throw std::domain_error("tour is not a single cycle");
  const auto& fl = g.flags();
  std::vector<int> pos_e, pos_f;
  int b = fl.front();
  for (std::size_t i = 0; i < fl.size(); ++i) {
    if (g.edge_of(b) == e) pos_e.push_back(static_cast<int>(i));
    if (g.edge_of(b) == f) pos_f.push_back(static_cast<int>(i));
    b = t(b);
  }
  if (pos_e.size() != 2 || pos_f.size() != 2)
    throw std::invalid_argument("no such edge");
  bool inside1 = pos_e[0] < pos_f[0] && pos_f[0] < pos_e[1];
  bool inside2 = pos_e[0] < pos_f[1] && pos_f[1] < pos_e[1];
  return inside1 != inside2;
}

/// Quasi-trees S0 <= S <= S1 with S0 a spanning tree and S1 the complement
/// of a spanning tree of the dual, built by repeated interlaced-pair removal
/// (resp. insertion).
inline std::pair<EdgeSubset, EdgeSubset> sandwich(const GeneralMap& g,
                                                  const EdgeSubset& s) {
  if (!is_quasi_tree(g, s))
    throw std::domain_error("subset is not a quasi-tree");
  auto shrink = [&](EdgeSubset cur, bool members) {
    for (;;) {
      std::vector<int> side;
      if (members) {
        side = cur;
      } else {
        for (int e : g.edge_ids())
          if (!std::binary_search(cur.begin(), cur.end(), e)) side.push_back(e);
      }
      bool moved = false;
      for (std::size_t i = 0; i < side.size() && !moved; ++i)
        for (std::size_t j = i + 1; j < side.size() && !moved; ++j) {
          if (edges_interlaced_in_tour(g, cur, side[i], side[j])) {
            EdgeSubset next;
            for (int e : g.edge_ids()) {
              bool in_cur = std::binary_search(cur.begin(), cur.end(), e);
              if (e == side[i] || e == side[j]) in_cur = !in_cur;
              if (in_cur) next.push_back(e);
            }
            cur = std::move(next);
            moved = true;
          }
        }
      if (!moved) return cur;
    }
  };
  return {shrink(s, true), shrink(s, false)};
}

}  // namespace cmaps
