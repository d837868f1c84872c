#pragma once

#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "perm.hpp"

namespace cmaps {

using EdgeSubset = std::vector<int>;  // sorted edge ids (min flag of the alpha-cycle)

/// A general map (B, sigma, alpha): sigma the rotation system, alpha a
/// fixed-point-free involution pairing flags into edges.  Transitivity of
/// <sigma, alpha> is not required here; a map in the strict sense is a
/// connected general map.
///
/// The empty map (no flags) stands for the one-vertex map with no edges.
struct GeneralMap {
  Perm sigma;
  Perm alpha;

  const std::vector<int>& flags() const { return sigma.ground(); }
  int flag_count() const { return sigma.size(); }

  int edge_of(int flag) const { return std::min(flag, alpha(flag)); }

  std::vector<int> edge_ids() const {
    std::vector<int> out;
    for (int b : flags())
      if (b < alpha(b)) out.push_back(b);
    return out;
  }

  int edge_count() const { return flag_count() / 2; }

  /// Flags carried by the given edges.
  std::vector<int> flags_of_edges(const EdgeSubset& edges) const {
    std::vector<int> out;
    for (int b : flags())
      if (std::binary_search(edges.begin(), edges.end(), edge_of(b)))
        out.push_back(b);
    return out;
  }

  bool has_edge(int e) const {
    return sigma.contains(e) && alpha(e) > e;
  }

  bool operator==(const GeneralMap&) const = default;
};

inline GeneralMap make_general_map(Perm sigma, Perm alpha) {
  if (sigma.ground() != alpha.ground())
    throw std::invalid_argument("sigma and alpha must share the flag set");
  return GeneralMap{std::move(sigma), std::move(alpha)};
}

/// Convenience builder on flags 0..n-1 from cycle lists.
inline GeneralMap make_map(int nflags, const std::vector<std::vector<int>>& sigma_cycles,
                           const std::vector<std::vector<int>>& alpha_cycles) {
  return make_general_map(Perm::from_cycles(Perm::identity_n(nflags).ground(), sigma_cycles),
                          Perm::from_cycles(Perm::identity_n(nflags).ground(), alpha_cycles));
}

struct Diagnostic {
  bool ok = true;
  std::string message = "ok";
};

/// Checks the general-map invariants; never throws.
inline Diagnostic validate(const GeneralMap& g) {
  if (g.sigma.ground() != g.alpha.ground())
    return {false, "sigma and alpha have different flag sets"};
  if (g.flag_count() % 2 != 0)
    return {false, "odd flag count " + std::to_string(g.flag_count())};
  for (int b : g.flags())
    if (g.alpha(b) == b)
      return {false, "alpha has fixed point " + std::to_string(b)};
  for (int b : g.flags())
    if (g.alpha(g.alpha(b)) != b)
      return {false, "alpha is not an involution at " + std::to_string(b)};
  return {};
}

/// Orbits of <sigma, alpha>, each sorted, ordered by minimum flag.
inline std::vector<std::vector<int>> components(const GeneralMap& g) {
  std::vector<std::vector<int>> out;
  const auto& fl = g.flags();
  std::vector<bool> seen(fl.size(), false);
  auto idx = [&](int b) {
    return static_cast<std::size_t>(
        std::lower_bound(fl.begin(), fl.end(), b) - fl.begin());
  };
  for (std::size_t i = 0; i < fl.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(fl[i]);
    seen[i] = true;
    while (!q.empty()) {
      int b = q.front();
      q.pop();
      comp.push_back(b);
      for (int nb : {g.sigma(b), g.alpha(b)}) {
        std::size_t k = idx(nb);
        if (!seen[k]) {
          seen[k] = true;
          q.push(nb);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// The empty map counts as connected (one-vertex map).
inline bool is_connected(const GeneralMap& g) {
  return g.flag_count() == 0 || components(g).size() == 1;
}

/// Dual map (B, sigma alpha, alpha); an involution on general maps.
inline GeneralMap dual(const GeneralMap& g) {
  return GeneralMap{compose(g.sigma, g.alpha), g.alpha};
}

/// Orientation reversal (B, sigma^-1, alpha).
inline GeneralMap reverse(const GeneralMap& g) {
  return GeneralMap{g.sigma.inverse(), g.alpha};
}

struct EulerCounts {
  long vertices = 0;
  long edges = 0;
  long faces = 0;
  long genus = 0;
};

/// Vertex/edge/face counts and the genus from Euler's relation
/// 2 - 2g = |Z(sigma alpha)| - |Z(alpha)| + |Z(sigma)|.
/// Requires a connected map; the empty map reports the one-vertex map.
inline EulerCounts genus_of(const GeneralMap& g) {
  if (g.flag_count() == 0) return {1, 0, 1, 0};
  if (!is_connected(g))
    throw std::domain_error("genus is defined for connected maps only");
  EulerCounts c;
  c.vertices = static_cast<long>(g.sigma.cycle_count());
  c.edges = static_cast<long>(g.alpha.cycle_count());
  c.faces = static_cast<long>(compose(g.sigma, g.alpha).cycle_count());
  long defect = 2 - (c.faces - c.edges + c.vertices);
  if (defect < 0 || defect % 2 != 0)
    throw std::logic_error("Euler defect is not an even non-negative number");
  c.genus = defect / 2;
  return c;
}

inline long vertex_count(const GeneralMap& g) {
  if (g.flag_count() == 0) return 1;
  return static_cast<long>(g.sigma.cycle_count());
}

struct UnderlyingGraph {
  std::vector<std::vector<int>> vertices;  // sigma cycles, canonical order
  std::vector<int> edges;                  // edge ids
  struct Incidence {
    int edge;
    int v1, v2;  // indices into vertices; equal for loops
    bool loop;
  };
  std::vector<Incidence> incidences;  // aligned with edges

  int vertex_of_flag(int flag) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (std::find(vertices[i].begin(), vertices[i].end(), flag) != vertices[i].end())
        return static_cast<int>(i);
    throw std::invalid_argument("flag not in any vertex");
  }
};

inline UnderlyingGraph underlying_graph(const GeneralMap& g) {
  UnderlyingGraph ug;
  ug.vertices = g.sigma.cycles();
  ug.edges = g.edge_ids();
  std::vector<int> vert_of(g.flag_count());
  const auto& fl = g.flags();
  auto idx = [&](int b) {
    return static_cast<std::size_t>(
        std::lower_bound(fl.begin(), fl.end(), b) - fl.begin());
  };
  for (std::size_t v = 0; v < ug.vertices.size(); ++v)
    for (int b : ug.vertices[v]) vert_of[idx(b)] = static_cast<int>(v);
  for (int e : ug.edges) {
    int v1 = vert_of[idx(e)];
    int v2 = vert_of[idx(g.alpha(e))];
    ug.incidences.push_back({e, v1, v2, v1 == v2});
  }
  return ug;
}

inline bool is_loopless(const GeneralMap& g) {
  for (const auto& inc : underlying_graph(g).incidences)
    if (inc.loop) return false;
  return true;
}

struct RootedMap {
  GeneralMap map;
  int root = 0;
};

inline RootedMap root_at(GeneralMap m, int root) {
  if (!m.sigma.contains(root))
    throw std::invalid_argument("root flag is not in the map");
  if (!is_connected(m))
    throw std::invalid_argument("rooted maps must be connected");
  return RootedMap{std::move(m), root};
}

namespace detail {

/// First-visit relabeling of the flags by a deterministic traversal from
/// the root, following sigma then alpha at each flag.  Rooting kills all
/// automorphisms, so any fixed scheme canonicalizes.
inline std::vector<int> traversal_labels(const RootedMap& r) {
  const auto& fl = r.map.flags();
  auto idx = [&](int b) {
    return static_cast<std::size_t>(
        std::lower_bound(fl.begin(), fl.end(), b) - fl.begin());
  };
  std::vector<int> label(fl.size(), -1);
  std::vector<int> order;
  std::queue<int> q;
  label[idx(r.root)] = 0;
  order.push_back(r.root);
  q.push(r.root);
  while (!q.empty()) {
    int b = q.front();
    q.pop();
    for (int nb : {r.map.sigma(b), r.map.alpha(b)}) {
      std::size_t k = idx(nb);
      if (label[k] < 0) {
        label[k] = static_cast<int>(order.size());
        order.push_back(nb);
        q.push(nb);
      }
    }
  }
  if (order.size() != fl.size())
    throw std::invalid_argument("rooted map is not connected");
  std::vector<int> out(fl.size());
  for (std::size_t i = 0; i < fl.size(); ++i) out[i] = label[i];
  return out;
}

}  // namespace detail

/// Canonical byte code of a rooted map: two rooted maps are isomorphic iff
/// their codes are equal.
inline std::string canonical_code(const RootedMap& r) {
  const auto& fl = r.map.flags();
  auto idx = [&](int b) {
    return static_cast<std::size_t>(
        std::lower_bound(fl.begin(), fl.end(), b) - fl.begin());
  };
  std::vector<int> label = detail::traversal_labels(r);
  std::vector<int> new_sigma(fl.size()), new_alpha(fl.size());
  for (std::size_t i = 0; i < fl.size(); ++i) {
    new_sigma[static_cast<std::size_t>(label[i])] = label[idx(r.map.sigma(fl[i]))];
    new_alpha[static_cast<std::size_t>(label[i])] = label[idx(r.map.alpha(fl[i]))];
  }
  std::string code = "s";
  for (int x : new_sigma) code += std::to_string(x) + ",";
  code += "a";
  for (int x : new_alpha) code += std::to_string(x) + ",";
  return code;
}

/// Canonical code of a pair (rooted map, edge subset): equal iff some rooted
/// isomorphism carries one subset to the other.
inline std::string pair_code(const RootedMap& r, const EdgeSubset& s) {
  const auto& fl = r.map.flags();
  auto idx = [&](int b) {
    return static_cast<std::size_t>(
        std::lower_bound(fl.begin(), fl.end(), b) - fl.begin());
  };
  std::vector<int> label = detail::traversal_labels(r);
  std::vector<int> relabeled;
  for (int e : s)
    relabeled.push_back(std::min(label[idx(e)], label[idx(r.map.alpha(e))]));
  std::sort(relabeled.begin(), relabeled.end());
  std::string code = canonical_code(r) + "t";
  for (int x : relabeled) code += std::to_string(x) + ",";
  return code;
}

}  // namespace cmaps
