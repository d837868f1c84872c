#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "quasitree.hpp"

namespace cmaps {

/// A rooted bicolored chord diagram: the tour word of a quasi-tree, chords
/// given by alpha, chords of the quasi-tree colored 1 and the rest colored 2.
/// Diagrams are stored linearly; the first letter is the root flag.
struct BicoloredDiagram {
  std::vector<int> word;     // flag labels in tour order
  std::vector<int> mate;     // mate[i] = position of the chord partner
  std::vector<bool> color1;  // per position; equal on both ends of a chord

  int length() const { return static_cast<int>(word.size()); }
  int chord_count() const { return length() / 2; }

  /// Edge symbol carried by a position: the smaller flag label of its chord.
  int symbol_at(int i) const {
    return std::min(word[static_cast<std::size_t>(i)],
                    word[static_cast<std::size_t>(mate[static_cast<std::size_t>(i)])]);
  }

  /// The color-1 chord symbols, sorted.
  EdgeSubset tree_edges() const {
    EdgeSubset out;
    for (int i = 0; i < length(); ++i)
      if (color1[static_cast<std::size_t>(i)] && mate[static_cast<std::size_t>(i)] > i)
        out.push_back(symbol_at(i));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> positions_of(int symbol) const {
    std::vector<int> out;
    for (int i = 0; i < length(); ++i)
      if (symbol_at(i) == symbol) out.push_back(i);
    return out;
  }

  bool chords_interlace(int e, int f) const {
    if (e == f) return false;
    auto pe = positions_of(e);
    auto pf = positions_of(f);
    if (pe.size() != 2 || pf.size() != 2) throw std::invalid_argument("no such chord");
    bool in1 = pe[0] < pf[0] && pf[0] < pe[1];
    bool in2 = pe[0] < pf[1] && pf[1] < pe[1];
    return in1 != in2;
  }

  /// Equality of rooted diagrams: same word, chords, and coloring.
  bool operator==(const BicoloredDiagram&) const = default;

  std::string key() const {
    std::string s;
    for (int i = 0; i < length(); ++i) {
      s += std::to_string(word[static_cast<std::size_t>(i)]);
      s += color1[static_cast<std::size_t>(i)] ? '*' : '.';
    }
    return s;
  }
};

/// Diagram of a quasi-tree: flags on the circle in tour order from the root.
inline BicoloredDiagram diagram_of(const RootedMap& r, const EdgeSubset& s) {
  if (r.map.flag_count() == 0)
    throw std::domain_error("diagram of the empty map is not defined");
  Perm t = tour(r.map, s);
  if (t.cycle_count() != 1)
    throw std::domain_error("subset is not a quasi-tree; its tour is not a cycle");
  BicoloredDiagram d;
  int b = r.root;
  for (int i = 0; i < r.map.flag_count(); ++i) {
    d.word.push_back(b);
    b = t(b);
  }
  std::vector<int> pos(d.word.size());
  const auto& fl = r.map.flags();
  auto idx = [&](int x) {
    return static_cast<std::size_t>(
        std::lower_bound(fl.begin(), fl.end(), x) - fl.begin());
  };
  std::vector<int> pos_of_flag(fl.size());
  for (std::size_t i = 0; i < d.word.size(); ++i)
    pos_of_flag[idx(d.word[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < d.word.size(); ++i) {
    d.mate.push_back(pos_of_flag[idx(r.map.alpha(d.word[i]))]);
    d.color1.push_back(
        std::binary_search(s.begin(), s.end(), r.map.edge_of(d.word[i])));
  }
  return d;
}

/// Inverse of diagram_of: alpha from the chords, tau from the circular order,
/// sigma = tau . alpha_S.  The reconstructed general map is always connected.
inline std::pair<RootedMap, EdgeSubset> reconstruct(const BicoloredDiagram& d) {
  if (d.length() == 0)
    throw std::domain_error("cannot reconstruct from an empty diagram");
  std::vector<int> ground = d.word;
  std::sort(ground.begin(), ground.end());
  auto perm_from_pos = [&](auto&& next_pos) {
    std::vector<int> img(ground.size());
    auto gidx = [&](int x) {
      return static_cast<std::size_t>(
          std::lower_bound(ground.begin(), ground.end(), x) - ground.begin());
    };
    for (int i = 0; i < d.length(); ++i)
      img[gidx(d.word[static_cast<std::size_t>(i)])] =
          d.word[static_cast<std::size_t>(next_pos(i))];
    return Perm::from_images(ground, std::move(img));
  };
  Perm alpha = perm_from_pos([&](int i) { return d.mate[static_cast<std::size_t>(i)]; });
  Perm sigma = perm_from_pos([&](int i) {
    // sigma(b) = tau(alpha_S(b)): step to the mate first on color-1 chords
    int j = d.color1[static_cast<std::size_t>(i)] ? d.mate[static_cast<std::size_t>(i)] : i;
    return (j + 1) % d.length();
  });
  GeneralMap m{std::move(sigma), std::move(alpha)};
  EdgeSubset s = d.tree_edges();
  return {RootedMap{std::move(m), d.word.front()}, std::move(s)};
}

/// Standalone diagram from a double occurrence word of symbols plus a
/// color-1 symbol set; the flags are the word positions.
inline BicoloredDiagram diagram_from_word(const std::vector<int>& symbols,
                                          const EdgeSubset& tree) {
  BicoloredDiagram d;
  int n = static_cast<int>(symbols.size());
  d.word.resize(static_cast<std::size_t>(n));
  d.mate.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) d.word[static_cast<std::size_t>(i)] = i;
  std::map<int, int> open;
  for (int i = 0; i < n; ++i) {
    auto it = open.find(symbols[static_cast<std::size_t>(i)]);
    if (it == open.end()) {
      open[symbols[static_cast<std::size_t>(i)]] = i;
    } else {
      d.mate[static_cast<std::size_t>(i)] = it->second;
      d.mate[static_cast<std::size_t>(it->second)] = i;
      open.erase(it);
    }
  }
  if (!open.empty())
    throw std::invalid_argument("not a double occurrence word");
  for (int i = 0; i < n; ++i) {
    int first = std::min(i, d.mate[static_cast<std::size_t>(i)]);
    d.color1.push_back(std::binary_search(
        tree.begin(), tree.end(), symbols[static_cast<std::size_t>(first)]));
  }
  return d;
}

/// The double occurrence word of a diagram: each flag replaced by its edge.
inline std::vector<int> edge_word(const BicoloredDiagram& d) {
  std::vector<int> w;
  for (int i = 0; i < d.length(); ++i) w.push_back(d.symbol_at(i));
  return w;
}

/// Interlacement graph on symbols; directed graphs carry the orientation
/// e -> f iff "e f e f" occurs, undirected ones are symmetric.
struct InterlaceGraph {
  std::vector<int> verts;  // sorted symbol ids
  std::vector<std::vector<bool>> adj;
  bool directed = false;

  int index_of(int v) const {
    auto it = std::lower_bound(verts.begin(), verts.end(), v);
    if (it == verts.end() || *it != v)
      throw std::invalid_argument("no such vertex");
    return static_cast<int>(it - verts.begin());
  }
  bool has_arc(int u, int v) const {
    return adj[static_cast<std::size_t>(index_of(u))]
              [static_cast<std::size_t>(index_of(v))];
  }
  bool has_edge(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

  std::size_t out_degree(std::size_t i) const {
    std::size_t n = 0;
    for (bool b : adj[i]) n += b;
    return n;
  }

  bool operator==(const InterlaceGraph&) const = default;
};

/// Directed interlacement of a word; symbols occurring once are skipped.
inline InterlaceGraph directed_interlacement(const std::vector<int>& word) {
  std::map<int, std::vector<int>> occ;
  for (std::size_t i = 0; i < word.size(); ++i)
    occ[word[i]].push_back(static_cast<int>(i));
  InterlaceGraph g;
  g.directed = true;
  for (const auto& [sym, ps] : occ) {
    if (ps.size() > 2) throw std::invalid_argument("symbol occurs more than twice");
    if (ps.size() == 2) g.verts.push_back(sym);
  }
  std::size_t n = g.verts.size();
  g.adj.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& a = occ[g.verts[i]];
      const auto& b = occ[g.verts[j]];
      if (a[0] < b[0] && b[0] < a[1] && a[1] < b[1]) g.adj[i][j] = true;
    }
  return g;
}

/// Undirected interlacement (circle graph) of a diagram's chords.
inline InterlaceGraph interlacement_of(const BicoloredDiagram& d) {
  InterlaceGraph g;
  for (int i = 0; i < d.length(); ++i)
    if (d.mate[static_cast<std::size_t>(i)] > i) g.verts.push_back(d.symbol_at(i));
  std::sort(g.verts.begin(), g.verts.end());
  std::size_t n = g.verts.size();
  g.adj.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d.chords_interlace(g.verts[i], g.verts[j]))
        g.adj[i][j] = g.adj[j][i] = true;
  return g;
}

/// Bipartite restriction I(M,S): interlacements with one end in S only.
inline InterlaceGraph bipartite_interlacement(const BicoloredDiagram& d) {
  InterlaceGraph g = interlacement_of(d);
  EdgeSubset s = d.tree_edges();
  for (std::size_t i = 0; i < g.verts.size(); ++i)
    for (std::size_t j = 0; j < g.verts.size(); ++j) {
      bool si = std::binary_search(s.begin(), s.end(), g.verts[i]);
      bool sj = std::binary_search(s.begin(), s.end(), g.verts[j]);
      if (si == sj) g.adj[i][j] = false;
    }
  return g;
}

/// Local complementation G*v: complement the subgraph induced on N(v).
inline InterlaceGraph local_complement(const InterlaceGraph& g, int v) {
  if (g.directed) throw std::invalid_argument("local complement needs an undirected graph");
  std::size_t iv = static_cast<std::size_t>(g.index_of(v));
  InterlaceGraph out = g;
  std::vector<std::size_t> nb;
  for (std::size_t i = 0; i < g.verts.size(); ++i)
    if (g.adj[iv][i]) nb.push_back(i);
  for (std::size_t a = 0; a < nb.size(); ++a)
    for (std::size_t b = a + 1; b < nb.size(); ++b) {
      out.adj[nb[a]][nb[b]] = !out.adj[nb[a]][nb[b]];
      out.adj[nb[b]][nb[a]] = out.adj[nb[a]][nb[b]];
    }
  return out;
}

/// Pivot G^uv = G*u*v*u (= G*v*u*v, asserted).
inline InterlaceGraph pivot_graph(const InterlaceGraph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::domain_error("pivot requires an edge of the graph");
  InterlaceGraph a = local_complement(local_complement(local_complement(g, u), v), u);
  InterlaceGraph b = local_complement(local_complement(local_complement(g, v), u), v);
  if (!(a == b)) throw std::logic_error("pivot orders disagree");
  return a;
}

/// Pivot of a bicolored diagram at interlacing chords e, f: the diagram of
/// (M, S symmetric-difference {e,f}) for the same root; colors of e and f flip.
inline BicoloredDiagram pivot_diagram(const BicoloredDiagram& d, int e, int f) {
  if (!d.chords_interlace(e, f))
    throw std::domain_error("chords do not interlace; the symmetric difference is not a quasi-tree");
  int n = d.length();
  // tau' = tau . alpha_{e,f}: follow the chord before stepping on e/f flags
  auto next = [&](int i) {
    int sym = d.symbol_at(i);
    int j = (sym == e || sym == f) ? d.mate[static_cast<std::size_t>(i)] : i;
    return (j + 1) % n;
  };
  BicoloredDiagram out;
  std::vector<int> new_pos_of(static_cast<std::size_t>(n), -1);
  int i = 0;
  for (int k = 0; k < n; ++k) {
    if (new_pos_of[static_cast<std::size_t>(i)] >= 0)
      throw std::logic_error("pivot tour revisited a flag");
    new_pos_of[static_cast<std::size_t>(i)] = k;
    out.word.push_back(d.word[static_cast<std::size_t>(i)]);
    i = next(i);
  }
  out.mate.resize(static_cast<std::size_t>(n));
  out.color1.resize(static_cast<std::size_t>(n));
  for (int old = 0; old < n; ++old) {
    int np = new_pos_of[static_cast<std::size_t>(old)];
    out.mate[static_cast<std::size_t>(np)] =
        new_pos_of[static_cast<std::size_t>(d.mate[static_cast<std::size_t>(old)])];
    int sym = d.symbol_at(old);
    bool c = d.color1[static_cast<std::size_t>(old)];
    out.color1[static_cast<std::size_t>(np)] = (sym == e || sym == f) ? !c : c;
  }
  return out;
}

/// BFS closure of a diagram under pivoting; size equals the quasi-tree count
/// of the underlying rooted map.
inline std::vector<BicoloredDiagram> pivot_class(const BicoloredDiagram& d) {
  if (d.chord_count() > 24)
    throw std::domain_error("too many chords for pivot-class enumeration");
  std::map<std::string, BicoloredDiagram> seen;
  std::vector<BicoloredDiagram> frontier{d};
  seen.emplace(d.key(), d);
  while (!frontier.empty()) {
    std::vector<BicoloredDiagram> next;
    for (const auto& cur : frontier) {
      std::vector<int> syms;
      for (int i = 0; i < cur.length(); ++i)
        if (cur.mate[static_cast<std::size_t>(i)] > i) syms.push_back(cur.symbol_at(i));
      for (std::size_t a = 0; a < syms.size(); ++a)
        for (std::size_t b = a + 1; b < syms.size(); ++b) {
          if (!cur.chords_interlace(syms[a], syms[b])) continue;
          BicoloredDiagram p = pivot_diagram(cur, syms[a], syms[b]);
          if (seen.emplace(p.key(), p).second) next.push_back(std::move(p));
        }
    }
    frontier = std::move(next);
  }
  std::vector<BicoloredDiagram> out;
  for (auto& [k, v] : seen) out.push_back(std::move(v));
  return out;
}

/// Chord removal: contraction for a color-1 chord, deletion for a color-2 one.
inline BicoloredDiagram diagram_minor(const BicoloredDiagram& d, int e) {
  auto pos = d.positions_of(e);
  if (pos.size() != 2) throw std::invalid_argument("no such chord");
  BicoloredDiagram out;
  std::vector<int> new_pos(static_cast<std::size_t>(d.length()), -1);
  for (int i = 0; i < d.length(); ++i) {
    if (i == pos[0] || i == pos[1]) continue;
    new_pos[static_cast<std::size_t>(i)] = static_cast<int>(out.word.size());
    out.word.push_back(d.word[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < d.length(); ++i) {
    if (i == pos[0] || i == pos[1]) continue;
    out.mate.push_back(new_pos[static_cast<std::size_t>(d.mate[static_cast<std::size_t>(i)])]);
    out.color1.push_back(d.color1[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace cmaps
