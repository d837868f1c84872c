#pragma once

#include <stdexcept>
#include <vector>

#include "dfs.hpp"

namespace cmaps {

/// Binary key b(w, I): the first-occurrence subword of w with letters of I
/// replaced by 1 and the rest by 0.
inline std::vector<int> binary_key(const std::vector<int>& word, const EdgeSubset& marked) {
  std::vector<int> bits;
  std::set<int> seen;
  for (int s : word) {
    if (seen.insert(s).second)
      bits.push_back(std::binary_search(marked.begin(), marked.end(), s) ? 1 : 0);
  }
  return bits;
}

/// The poset of the quasi-trees of a rooted map: S < S' when a chain of
/// single pivots with strictly increasing binary keys connects them.
struct QtPoset {
  std::vector<EdgeSubset> elements;            // lexicographically sorted
  std::vector<std::vector<int>> keys;          // binary key per element
  std::vector<std::pair<int, int>> covers;     // (i, j): elements[i] < elements[j], one pivot apart
  std::vector<std::vector<bool>> leq;          // reflexive-transitive closure
};

inline QtPoset build_poset(const RootedMap& r) {
  if (r.map.edge_count() > 16)
    throw std::domain_error("too many edges for poset construction");
  QtPoset p;
  p.elements = list_quasi_trees(r.map);
  std::sort(p.elements.begin(), p.elements.end());
  std::size_t k = p.elements.size();
  for (const auto& s : p.elements)
    p.keys.push_back(binary_key(edge_word(diagram_of(r, s)), s));

  p.leq.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) p.leq[i][i] = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      EdgeSubset diff;
      std::set_symmetric_difference(p.elements[i].begin(), p.elements[i].end(),
                                    p.elements[j].begin(), p.elements[j].end(),
                                    std::back_inserter(diff));
      if (diff.size() != 2) continue;
      if (p.keys[i] == p.keys[j])
        throw std::logic_error("pivot step with equal binary keys");
      if (p.keys[i] < p.keys[j]) {
        p.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
        p.leq[i][j] = true;
      }
    }
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      if (p.leq[i][m])
        for (std::size_t j = 0; j < k; ++j)
          if (p.leq[m][j]) p.leq[i][j] = true;
  // keys increase strictly along covers, so the relation is a partial
  // order; verify rather than assume
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && p.leq[i][j] && p.leq[j][i])
        throw std::logic_error("quasi-tree relation is not antisymmetric");
  return p;
}

namespace detail {

inline EdgeSubset poset_extreme(const RootedMap& r, bool minimum) {
  QtPoset p = build_poset(r);
  std::size_t k = p.elements.size();
  std::vector<std::size_t> extremes;
  for (std::size_t i = 0; i < k; ++i) {
    bool ext = true;
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if ((minimum && p.leq[j][i]) || (!minimum && p.leq[i][j])) ext = false;
    }
    if (ext) extremes.push_back(i);
  }
  if (extremes.size() != 1)
    throw std::logic_error("poset extreme is not unique");
  std::size_t e = extremes.front();
  for (std::size_t j = 0; j < k; ++j)
    if (!(minimum ? p.leq[e][j] : p.leq[j][e]))
      throw std::logic_error("poset extreme is not comparable to all elements");
  return p.elements[e];
}

}  // namespace detail

/// The unique minimum; coincides with the Late DFS-tree.
inline EdgeSubset poset_minimum(const RootedMap& r) {
  return detail::poset_extreme(r, true);
}

/// The unique maximum; the complement of the Late DFS-tree of the dual.
inline EdgeSubset poset_maximum(const RootedMap& r) {
  return detail::poset_extreme(r, false);
}

}  // namespace cmaps
