#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigcount.hpp"
#include "dfs.hpp"

namespace cmaps {

/// A 1-2 occurrence word: each symbol appears once (unmatched) or twice
/// (matched).  Canonical standalone words use symbols 0,1,2,... in order of
/// first occurrence.
using Word = std::vector<int>;

namespace wordinfo {

struct Occurrence {
  std::vector<int> positions;  // 1 or 2 entries
  bool matched() const { return positions.size() == 2; }
};

inline std::map<int, Occurrence> occurrences(const Word& w) {
  std::map<int, Occurrence> occ;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto& o = occ[w[i]];
    if (o.positions.size() >= 2)
      throw std::invalid_argument("symbol occurs more than twice");
    o.positions.push_back(static_cast<int>(i));
  }
  return occ;
}

inline bool arc(const Occurrence& a, const Occurrence& b) {
  // a -> b: pattern "a b a b"
  return a.matched() && b.matched() && a.positions[0] < b.positions[0] &&
         b.positions[0] < a.positions[1] && a.positions[1] < b.positions[1];
}

}  // namespace wordinfo

inline bool is_double_occurrence(const Word& w) {
  for (const auto& [s, o] : wordinfo::occurrences(w))
    if (!o.matched()) return false;
  return true;
}

inline Word matched_subword(const Word& w) {
  auto occ = wordinfo::occurrences(w);
  Word out;
  for (int s : w)
    if (occ.at(s).matched()) out.push_back(s);
  return out;
}

inline std::set<int> unmatched_symbols(const Word& w) {
  std::set<int> out;
  for (const auto& [s, o] : wordinfo::occurrences(w))
    if (!o.matched()) out.insert(s);
  return out;
}

namespace wordinfo {

/// Sinks of the directed interlacement graph: matched symbols not
/// interlaced on the right.
inline std::set<int> sinks(const std::map<int, Occurrence>& occ) {
  std::set<int> out;
  for (const auto& [e, oe] : occ) {
    if (!oe.matched()) continue;
    bool right = false;
    for (const auto& [f, of] : occ)
      if (e != f && arc(oe, of)) right = true;
    if (!right) out.insert(e);
  }
  return out;
}

}  // namespace wordinfo

/// Property P: the sinks of the directed interlacement graph dominate it;
/// every symbol interlaced on the right is so by some sink.
inline bool has_P(const Word& w) {
  if (!is_double_occurrence(w))
    throw std::domain_error("property P applies to double occurrence words");
  auto occ = wordinfo::occurrences(w);
  auto snk = wordinfo::sinks(occ);
  for (const auto& [e, oe] : occ) {
    if (snk.count(e)) continue;
    bool dominated = false;
    for (int f : snk)
      if (wordinfo::arc(oe, occ.at(f))) dominated = true;
    if (!dominated) return false;
  }
  return true;
}

/// Property N: every vertex of the directed interlacement graph is a source
/// or a sink; no symbol is interlaced on both sides.
inline bool has_N(const Word& w) {
  if (!is_double_occurrence(w))
    throw std::domain_error("property N applies to double occurrence words");
  auto occ = wordinfo::occurrences(w);
  for (const auto& [e, oe] : occ) {
    bool in = false, out = false;
    for (const auto& [f, of] : occ) {
      if (e == f) continue;
      if (wordinfo::arc(of, oe)) in = true;
      if (wordinfo::arc(oe, of)) out = true;
    }
    if (in && out) return false;
  }
  return true;
}

namespace wordinfo {

inline bool covers(const Occurrence& b, int pos) {
  return b.matched() && b.positions[0] < pos && pos < b.positions[1];
}

}  // namespace wordinfo

/// Property Q: the matched subword has P and no unmatched symbol is covered
/// by a sink.
inline bool has_Q(const Word& w) {
  auto occ = wordinfo::occurrences(w);
  if (!has_P(matched_subword(w))) return false;
  auto snk = wordinfo::sinks(occ);
  for (const auto& [a, oa] : occ) {
    if (oa.matched()) continue;
    for (int b : snk)
      if (wordinfo::covers(occ.at(b), oa.positions[0])) return false;
  }
  return true;
}

/// Property N': the matched subword has N and every symbol covering an
/// unmatched symbol is a sink.
inline bool has_Nprime(const Word& w) {
  auto occ = wordinfo::occurrences(w);
  if (!has_N(matched_subword(w))) return false;
  auto snk = wordinfo::sinks(occ);
  for (const auto& [a, oa] : occ) {
    if (oa.matched()) continue;
    for (const auto& [b, ob] : occ)
      if (b != a && wordinfo::covers(ob, oa.positions[0]) && !snk.count(b))
        return false;
  }
  return true;
}

/// All canonical 1-2 occurrence words with the given matched/unmatched
/// symbol counts; symbols are named in first-occurrence order.
inline std::vector<Word> gen_words(int matched, int unmatched) {
  if (matched < 0 || unmatched < 0)
    throw std::invalid_argument("negative symbol counts");
  if (2 * matched + unmatched > 16)
    throw std::domain_error("word generation guard exceeded (2n+m <= 16)");
  std::vector<Word> out;
  Word cur;
  std::vector<int> open;  // matched symbols awaiting their second occurrence
  int used_matched = 0, used_unmatched = 0, next_id = 0;
  std::size_t total = static_cast<std::size_t>(2 * matched + unmatched);

  auto rec = [&](auto&& self) -> void {
    if (cur.size() == total) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < open.size(); ++i) {
      int s = open[i];
      open.erase(open.begin() + static_cast<long>(i));
      cur.push_back(s);
      self(self);
      cur.pop_back();
      open.insert(open.begin() + static_cast<long>(i), s);
    }
    if (used_matched < matched) {
      int s = next_id++;
      ++used_matched;
      open.push_back(s);
      cur.push_back(s);
      self(self);
      cur.pop_back();
      open.pop_back();
      --used_matched;
      --next_id;
    }
    if (used_unmatched < unmatched) {
      int s = next_id++;
      ++used_unmatched;
      cur.push_back(s);
      self(self);
      cur.pop_back();
      --used_unmatched;
      --next_id;
    }
  };
  rec(rec);
  return out;
}

/// Unique decomposition of a word with property Q (by its last symbol):
/// empty, w' a with a unmatched, or w1 a w2 a.
struct QDecomp {
  enum class Kind { Empty, Unmatched, Split } kind = Kind::Empty;
  Word prefix;      // w' or w1
  int symbol = -1;  // a
  Word inner;       // w2
};

inline QDecomp decompose_Q(const Word& w) {
  if (!has_Q(w)) throw std::domain_error("word lacks property Q");
  QDecomp d;
  if (w.empty()) return d;
  auto occ = wordinfo::occurrences(w);
  int a = w.back();
  d.symbol = a;
  if (!occ.at(a).matched()) {
    d.kind = QDecomp::Kind::Unmatched;
    d.prefix.assign(w.begin(), w.end() - 1);
    if (!has_Q(d.prefix)) throw std::logic_error("decomposition prefix lacks Q");
    return d;
  }
  d.kind = QDecomp::Kind::Split;
  int p = occ.at(a).positions[0];
  d.prefix.assign(w.begin(), w.begin() + p);
  d.inner.assign(w.begin() + p + 1, w.end() - 1);
  for (int s : d.inner)
    if (!occ.at(s).matched())
      throw std::logic_error("unmatched symbol inside the split part");
  if (!has_P(matched_subword(d.inner)))
    throw std::logic_error("split part lacks P");
  if (!has_Q(d.prefix)) throw std::logic_error("split prefix lacks Q");
  return d;
}

inline Word reassemble(const QDecomp& d) {
  if (d.kind == QDecomp::Kind::Empty) return {};
  Word w = d.prefix;
  w.push_back(d.symbol);
  if (d.kind == QDecomp::Kind::Split) {
    w.insert(w.end(), d.inner.begin(), d.inner.end());
    w.push_back(d.symbol);
  }
  return w;
}

/// Unique decomposition of a word with property N':
/// empty, w' a with a unmatched, or w_k u_k ... w_1 u_1 a w_0 a where the
/// u-blocks hold the first occurrences of the symbols matched into w_0.
struct NprimeDecomp {
  enum class Kind { Empty, Unmatched, Split } kind = Kind::Empty;
  Word prefix;
  int symbol = -1;
  Word w0;
  std::vector<Word> w_blocks;  // w_1 .. w_k
  std::vector<Word> u_blocks;  // u_1 .. u_k
};

inline Word reassemble(const NprimeDecomp& d) {
  if (d.kind == NprimeDecomp::Kind::Empty) return {};
  if (d.kind == NprimeDecomp::Kind::Unmatched) {
    Word w = d.prefix;
    w.push_back(d.symbol);
    return w;
  }
  Word w;
  for (std::size_t i = d.w_blocks.size(); i-- > 0;) {
    w.insert(w.end(), d.w_blocks[i].begin(), d.w_blocks[i].end());
    w.insert(w.end(), d.u_blocks[i].begin(), d.u_blocks[i].end());
  }
  w.push_back(d.symbol);
  w.insert(w.end(), d.w0.begin(), d.w0.end());
  w.push_back(d.symbol);
  return w;
}

inline NprimeDecomp decompose_Nprime(const Word& w) {
  if (!has_Nprime(w)) throw std::domain_error("word lacks property N'");
  NprimeDecomp d;
  if (w.empty()) return d;
  auto occ = wordinfo::occurrences(w);
  int a = w.back();
  d.symbol = a;
  if (!occ.at(a).matched()) {
    d.kind = NprimeDecomp::Kind::Unmatched;
    d.prefix.assign(w.begin(), w.end() - 1);
    if (!has_Nprime(d.prefix)) throw std::logic_error("decomposition prefix lacks N'");
    return d;
  }
  d.kind = NprimeDecomp::Kind::Split;
  int p = occ.at(a).positions[0];
  d.w0.assign(w.begin() + p + 1, w.end() - 1);

  // prefix positions holding first occurrences of symbols matched into w0
  std::vector<bool> is_u(static_cast<std::size_t>(p), false);
  for (int i = 0; i < p; ++i) {
    const auto& o = occ.at(w[static_cast<std::size_t>(i)]);
    if (o.matched() && o.positions[0] == i && o.positions[1] > p &&
        o.positions[1] < static_cast<int>(w.size()) - 1)
      is_u[static_cast<std::size_t>(i)] = true;
  }
  int pos = p - 1;
  auto take_run = [&](bool want) {
    Word run;
    while (pos >= 0 && is_u[static_cast<std::size_t>(pos)] == want) {
      run.insert(run.begin(), w[static_cast<std::size_t>(pos)]);
      --pos;
    }
    return run;
  };
  d.u_blocks.push_back(take_run(true));  // u_1, possibly empty
  while (pos >= 0) {
    d.w_blocks.push_back(take_run(false));
    if (pos >= 0) d.u_blocks.push_back(take_run(true));
  }
  if (d.u_blocks.size() > d.w_blocks.size()) d.w_blocks.push_back({});
  if (d.u_blocks.size() == 1 && d.u_blocks[0].empty() && d.w_blocks[0].empty()) {
    d.u_blocks.clear();
    d.w_blocks.clear();
  }

  // verify the lemma's side conditions
  auto unmatched_w = unmatched_symbols(w);
  Word z;
  std::vector<int> tail_unmatched_pos;
  {
    auto occ0 = wordinfo::occurrences(d.w0);
    for (std::size_t i = 0; i < d.w0.size(); ++i) {
      int s = d.w0[i];
      if (occ0.at(s).matched()) continue;
      if (unmatched_w.count(s))
        tail_unmatched_pos.push_back(static_cast<int>(i));
      else
        z.push_back(s);
    }
  }
  Word u_concat;
  for (std::size_t i = d.u_blocks.size(); i-- > 0;)
    u_concat.insert(u_concat.end(), d.u_blocks[i].begin(), d.u_blocks[i].end());
  Word z_rev(z.rbegin(), z.rend());
  if (u_concat != z_rev)
    throw std::logic_error("u-blocks do not reverse the pattern of w0");
  if (!tail_unmatched_pos.empty() && !z.empty()) {
    // all of z must occur in w0 before every symbol that stays unmatched
    auto occ0 = wordinfo::occurrences(d.w0);
    int last_z = -1;
    for (int s : z) last_z = std::max(last_z, occ0.at(s).positions[0]);
    if (last_z > tail_unmatched_pos.front())
      throw std::logic_error("split symbols do not precede the unmatched ones in w0");
  }
  if (!has_Nprime(d.w0)) throw std::logic_error("w0 lacks N'");
  for (std::size_t i = 0; i + 1 < d.w_blocks.size(); ++i) {
    if (!is_double_occurrence(d.w_blocks[i]))
      throw std::logic_error("inner block is not a double occurrence word");
    if (!has_N(d.w_blocks[i])) throw std::logic_error("inner block lacks N");
  }
  if (!d.w_blocks.empty() && !has_Nprime(d.w_blocks.back()))
    throw std::logic_error("leftmost block lacks N'");
  if (reassemble(d) != w) throw std::logic_error("decomposition does not reassemble");
  return d;
}

// ---------------------------------------------------------------------------
// Exact counting

namespace detail {

inline std::mutex& count_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

/// G_{n,m}: 1-2 occurrence words with property Q, by the split recurrence
/// G_{n,m} = G_{n,m-1}
///         + sum_{i,j} (2i+j)!/(2i)! C(m+j,j) G_{i,0} G_{n-1-i-j,m+j}.
inline BigCount count_G(long n, long m) {
  if (n < 0 || m < 0) return 0;
  if (n == 0) return 1;
  static std::map<std::pair<long, long>, BigCount> memo;
  std::lock_guard<std::mutex> lock(detail::count_mutex());
  auto rec = [&](auto&& self, long nn, long mm) -> BigCount {
    if (nn < 0 || mm < 0) return 0;
    if (nn == 0) return 1;
    auto it = memo.find({nn, mm});
    if (it != memo.end()) return it->second;
    BigCount r = self(self, nn, mm - 1);
    for (long i = 0; i <= nn - 1; ++i)
      for (long j = 0; j <= nn - 1 - i; ++j)
        r += big_falling(2 * i + j, j) * big_binomial(mm + j, j) *
             self(self, i, 0) * self(self, nn - 1 - i - j, mm + j);
    memo.emplace(std::make_pair(nn, mm), r);
    return r;
  };
  return rec(rec, n, m);
}

/// M_{n,m} = m! G_{n,m}, by its own recurrence
/// M_{n,m} = m M_{n,m-1} + sum_{i,j} C(2i+j,j) M_{i,0} M_{n-1-i-j,m+j}.
inline BigCount count_M(long n, long m) {
  if (n < 0 || m < 0) return 0;
  static std::map<std::pair<long, long>, BigCount> memo;
  std::lock_guard<std::mutex> lock(detail::count_mutex());
  auto rec = [&](auto&& self, long nn, long mm) -> BigCount {
    if (nn < 0 || mm < 0) return 0;
    if (nn == 0) return big_factorial(mm);
    auto it = memo.find({nn, mm});
    if (it != memo.end()) return it->second;
    BigCount r = mm * self(self, nn, mm - 1);
    for (long i = 0; i <= nn - 1; ++i)
      for (long j = 0; j <= nn - 1 - i; ++j)
        r += big_binomial(2 * i + j, j) * self(self, i, 0) *
             self(self, nn - 1 - i - j, mm + j);
    memo.emplace(std::make_pair(nn, mm), r);
    return r;
  };
  return rec(rec, n, m);
}

/// N_{s,t} = M_{s-t, 2t-s}, by the substituted recurrence
/// N_{s,t} = (2t-s) N_{s-1,t-1}
///         + sum_{k,l} C(l,2k) N_{2k,k} N_{s-2-l,t-1-k}.
inline BigCount count_N(long s, long t) {
  if (s - t < 0 || 2 * t - s < 0) return 0;
  static std::map<std::pair<long, long>, BigCount> memo;
  std::lock_guard<std::mutex> lock(detail::count_mutex());
  auto rec = [&](auto&& self, long ss, long tt) -> BigCount {
    if (ss - tt < 0 || 2 * tt - ss < 0) return 0;
    if (ss == 0) return 1;
    auto it = memo.find({ss, tt});
    if (it != memo.end()) return it->second;
    BigCount r = (2 * tt - ss) * self(self, ss - 1, tt - 1);
    for (long k = 0; k <= ss - tt - 1; ++k)
      for (long l = 2 * k; l <= ss - tt - 1 + k; ++l)
        r += big_binomial(l, 2 * k) * self(self, 2 * k, k) *
             self(self, ss - 2 - l, tt - 1 - k);
    memo.emplace(std::make_pair(ss, tt), r);
    return r;
  };
  return rec(rec, s, t);
}

/// Loopless rooted planar maps with n edges: 2 (4n+1)! / ((n+1)! (3n+2)!).
inline BigCount count_planar_loopless(long n) {
  if (n < 0) return 0;
  BigCount num = 2 * big_factorial(4 * n + 1);
  BigCount den = big_factorial(n + 1) * big_factorial(3 * n + 2);
  if (num % den != 0) throw std::logic_error("closed formula is not integral");
  return num / den;
}

/// T_{n,m}: property-N' words, by brute-force enumeration.
inline BigCount count_T_enumerated(int n, int m) {
  BigCount c = 0;
  for (const auto& w : gen_words(n, m))
    if (has_Nprime(w)) ++c;
  return c;
}

// ---------------------------------------------------------------------------
// Functional equation check for F(x,y) = sum T_{n,m} x^n y^m

namespace detail {

/// Bivariate polynomial truncated at a total degree, exact coefficients.
struct Poly2 {
  int limit = 0;
  std::map<std::pair<int, int>, BigCount> coeff;

  void add(int i, int j, const BigCount& v) {
    if (i + j > limit || v == 0) return;
    auto& r = coeff[{i, j}];
    r += v;
    if (r == 0) coeff.erase({i, j});
  }
  Poly2 mul(const Poly2& o) const {
    Poly2 r;
    r.limit = limit;
    for (const auto& [ij, a] : coeff)
      for (const auto& [kl, b] : o.coeff)
        r.add(ij.first + kl.first, ij.second + kl.second, a * b);
    return r;
  }
  Poly2 shift(int dx, int dy) const {
    Poly2 r;
    r.limit = limit;
    for (const auto& [ij, a] : coeff) r.add(ij.first + dx, ij.second + dy, a);
    return r;
  }
  Poly2 plus(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [ij, a] : o.coeff) r.add(ij.first, ij.second, a);
    return r;
  }
};

}  // namespace detail

struct FEquationReport {
  bool ok = true;
  std::string detail;  // first mismatching monomial, if any
};

/// Checks F(xy,y) = 1 + y F(xy,y) + xy F(xy,y)^2 / (1 - y F(xy,0))
/// coefficientwise up to the given total degree, with T computed by
/// enumeration.
inline FEquationReport verify_F_equation(int max_total_degree) {
  if (max_total_degree < 0 || max_total_degree > 8)
    throw std::domain_error("degree guard exceeded (0..8)");
  const int D = max_total_degree;
  detail::Poly2 A, B;  // A = F(xy, y), B = F(xy, 0); monomial (n,m) -> x^n y^{n+m}
  A.limit = B.limit = D;
  for (int n = 0; 2 * n <= D; ++n) {
    for (int m = 0; 2 * n + m <= D; ++m) {
      BigCount t = count_T_enumerated(n, m);
      A.add(n, n + m, t);
      if (m == 0) B.add(n, n, t);
    }
  }
  detail::Poly2 u = B.shift(0, 1);  // y F(xy,0)
  detail::Poly2 inv;                // 1 / (1 - u) as a geometric series
  inv.limit = D;
  inv.add(0, 0, 1);
  detail::Poly2 pow;
  pow.limit = D;
  pow.add(0, 0, 1);
  for (int i = 1; i <= D; ++i) {
    pow = pow.mul(u);
    inv = inv.plus(pow);
  }
  detail::Poly2 rhs;
  rhs.limit = D;
  rhs.add(0, 0, 1);
  rhs = rhs.plus(A.shift(0, 1));
  rhs = rhs.plus(A.mul(A).mul(inv).shift(1, 1));

  FEquationReport rep;
  for (int d = 0; d <= D && rep.ok; ++d)
    for (int i = 0; i <= d && rep.ok; ++i) {
      std::pair<int, int> key{i, d - i};
      BigCount lhs_c = A.coeff.count(key) ? A.coeff.at(key) : 0;
      BigCount rhs_c = rhs.coeff.count(key) ? rhs.coeff.at(key) : 0;
      if (lhs_c != rhs_c) {
        rep.ok = false;
        rep.detail = "mismatch at x^" + std::to_string(i) + " y^" +
                     std::to_string(d - i) + ": " + lhs_c.str() + " vs " +
                     rhs_c.str();
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// The loopless-map bijection

/// Rooted loopless map of a property-P word: the canonical quasi-tree is the
/// sink set of the directed interlacement graph, a spanning tree.
inline std::pair<RootedMap, EdgeSubset> word_to_map(const Word& w) {
  if (!has_P(w)) throw std::domain_error("word lacks property P");
  auto snk = wordinfo::sinks(wordinfo::occurrences(w));
  EdgeSubset tree(snk.begin(), snk.end());
  return reconstruct(diagram_from_word(w, tree));
}

/// Renames symbols to 0,1,2,... in first-occurrence order.
inline Word canonical_rename(const Word& w) {
  std::map<int, int> id;
  Word out;
  for (int s : w) {
    auto it = id.find(s);
    if (it == id.end()) it = id.emplace(s, static_cast<int>(id.size())).first;
    out.push_back(it->second);
  }
  return out;
}

/// The double occurrence word of a quasi-tree's tour, in canonical naming.
inline Word map_to_word(const RootedMap& r, const EdgeSubset& s) {
  return canonical_rename(edge_word(diagram_of(r, s)));
}

/// Inverse of word_to_map on loopless maps: the word of the Late DFS-tree.
inline Word canonical_loopless_word(const RootedMap& r) {
  return map_to_word(r, dfs(r, DfsPolicy::Late).tree);
}

}  // namespace cmaps
