#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmaps {

/// Permutation of a finite ground set of integer flags.
///
/// The ground set is an arbitrary sorted list of distinct non-negative
/// integers (fresh maps use 0..2m-1, minors keep the surviving labels).
/// All operations are pure; a Perm is immutable after construction.
class Perm {
public:
  Perm() = default;

  static Perm identity(std::vector<int> ground) {
    Perm p;
    p.dom_ = std::move(ground);
    check_ground(p.dom_);
    p.img_ = p.dom_;
    return p;
  }

  static Perm identity_n(int n) {
    std::vector<int> g(n);
    for (int i = 0; i < n; ++i) g[i] = i;
    return identity(std::move(g));
  }

  static Perm from_images(std::vector<int> ground, std::vector<int> images) {
    check_ground(ground);
    if (ground.size() != images.size())
      throw std::invalid_argument("image list does not match ground set");
    std::vector<int> seen = images;
    std::sort(seen.begin(), seen.end());
    if (seen != ground)
      throw std::invalid_argument("images are not a bijection of the ground set");
    Perm p;
    p.dom_ = std::move(ground);
    p.img_ = std::move(images);
    return p;
  }

  /// Builds a permutation on `ground` from disjoint cycles; flags not
  /// mentioned in any cycle are fixed.
  static Perm from_cycles(std::vector<int> ground,
                          const std::vector<std::vector<int>>& cycles) {
    Perm p = identity(std::move(ground));
    std::vector<bool> touched(p.dom_.size(), false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        int from = c[i];
        int to = c[(i + 1) % c.size()];
        std::size_t k = p.index_of(from);
        if (touched[k]) throw std::invalid_argument("cycles are not disjoint");
        touched[k] = true;
        p.img_[k] = to;
      }
    }
    // a mangled cycle list can silently break bijectivity
    std::vector<int> seen = p.img_;
    std::sort(seen.begin(), seen.end());
    if (seen != p.dom_)
      throw std::invalid_argument("cycle list is not a permutation");
    return p;
  }

  int size() const { return static_cast<int>(dom_.size()); }
  const std::vector<int>& ground() const { return dom_; }

  bool contains(int b) const {
    auto it = std::lower_bound(dom_.begin(), dom_.end(), b);
    return it != dom_.end() && *it == b;
  }

  int apply(int b) const { return img_[index_of(b)]; }
  int operator()(int b) const { return apply(b); }

  Perm inverse() const {
    Perm p;
    p.dom_ = dom_;
    p.img_.resize(dom_.size());
    for (std::size_t i = 0; i < dom_.size(); ++i)
      p.img_[p.index_of(img_[i])] = dom_[i];
    return p;
  }

  bool is_identity() const { return dom_ == img_; }

  bool is_involution() const {
    for (std::size_t i = 0; i < dom_.size(); ++i)
      if (apply(img_[i]) != dom_[i]) return false;
    return true;
  }

  bool is_fixed_point_free() const {
    for (std::size_t i = 0; i < dom_.size(); ++i)
      if (img_[i] == dom_[i]) return false;
    return true;
  }

  /// Cycles in canonical form: each cycle starts at its minimum flag,
  /// cycles sorted by that minimum.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> visited(dom_.size(), false);
    for (std::size_t i = 0; i < dom_.size(); ++i) {
      if (visited[i]) continue;
      std::vector<int> cyc;
      int b = dom_[i];
      do {
        std::size_t k = index_of(b);
        visited[k] = true;
        cyc.push_back(b);
        b = img_[k];
      } while (b != dom_[i]);
      out.push_back(std::move(cyc));
    }
    return out;
  }

  std::size_t cycle_count() const {
    std::size_t n = 0;
    std::vector<bool> visited(dom_.size(), false);
    for (std::size_t i = 0; i < dom_.size(); ++i) {
      if (visited[i]) continue;
      ++n;
      int b = dom_[i];
      do {
        std::size_t k = index_of(b);
        visited[k] = true;
        b = img_[k];
      } while (b != dom_[i]);
    }
    return n;
  }

  /// Restriction to a subset: b -> p^k(b) for the least k >= 1 landing in
  /// the subset.  The result lives on the subset only; an empty subset
  /// gives the empty permutation.
  Perm restrict_to(std::vector<int> sub) const {
    std::sort(sub.begin(), sub.end());
    Perm p;
    p.img_.resize(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) {
      int x = apply(sub[i]);
      while (!std::binary_search(sub.begin(), sub.end(), x)) x = apply(x);
      p.img_[i] = x;
    }
    p.dom_ = std::move(sub);
    return p;
  }

  /// Cutting-out: the restriction on the subset, the identity elsewhere;
  /// lives on the full ground set.
  Perm cut_out(const std::vector<int>& sub) const {
    Perm r = restrict_to(sub);
    Perm p = identity(dom_);
    for (std::size_t i = 0; i < r.dom_.size(); ++i)
      p.img_[p.index_of(r.dom_[i])] = r.img_[i];
    return p;
  }

  bool operator==(const Perm&) const = default;

private:
  static void check_ground(const std::vector<int>& g) {
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
      if (g[i] >= g[i + 1])
        throw std::invalid_argument("ground set must be sorted and distinct");
  }

  std::size_t index_of(int b) const {
    auto it = std::lower_bound(dom_.begin(), dom_.end(), b);
    if (it == dom_.end() || *it != b)
      throw std::invalid_argument("flag " + std::to_string(b) +
                                  " is not in the ground set");
    return static_cast<std::size_t>(it - dom_.begin());
  }

  std::vector<int> dom_;  // sorted ground set
  std::vector<int> img_;  // img_[i] = image of dom_[i]
};

/// compose(outer, inner)(b) = outer(inner(b)); the multiplicative product.
inline Perm compose(const Perm& outer, const Perm& inner) {
  if (outer.ground() != inner.ground())
    throw std::invalid_argument("cannot compose permutations of different ground sets");
  std::vector<int> img(inner.ground().size());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = outer(inner(inner.ground()[i]));
  return Perm::from_images(inner.ground(), std::move(img));
}

inline std::string perm_to_string(const Perm& p) {
  if (p.size() == 0) return "()";
  std::string s;
  for (const auto& c : p.cycles()) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

}  // namespace cmaps
