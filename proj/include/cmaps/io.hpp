#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "map.hpp"
#include "words.hpp"

namespace cmaps {

struct ParsedMap {
  GeneralMap map;
  std::optional<int> root;
};

/// Reads the map file format
///   {"flags": 2m, "sigma": [[cycle...],...], "alpha": [[a,b],...], "root": k}
/// Flags absent from the sigma cycles are fixed points of sigma.
inline ParsedMap read_map(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed map file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("flags") || !j.contains("sigma") || !j.contains("alpha"))
    throw std::invalid_argument("map file needs flags, sigma and alpha fields");
  int n = j.at("flags").get<int>();
  if (n < 0) throw std::invalid_argument("negative flag count");
  auto cycles_of = [&](const nlohmann::json& arr) {
    std::vector<std::vector<int>> cycles;
    for (const auto& c : arr) {
      std::vector<int> cyc;
      for (const auto& x : c) {
        int b = x.get<int>();
        if (b < 0 || b >= n) throw std::invalid_argument("flag out of range");
        cyc.push_back(b);
      }
      cycles.push_back(std::move(cyc));
    }
    return cycles;
  };
  ParsedMap pm{make_map(n, cycles_of(j.at("sigma")), cycles_of(j.at("alpha"))), std::nullopt};
  if (j.contains("root")) {
    int rt = j.at("root").get<int>();
    if (rt < 0 || rt >= n) throw std::invalid_argument("root flag out of range");
    pm.root = rt;
  }
  return pm;
}

inline ParsedMap read_map_string(const std::string& s) {
  std::istringstream in(s);
  return read_map(in);
}

namespace detail {

inline void append_cycles(std::string& out, const std::vector<std::vector<int>>& cycles) {
  out += '[';
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (i) out += ", ";
    out += '[';
    for (std::size_t k = 0; k < cycles[i].size(); ++k) {
      if (k) out += ", ";
      out += std::to_string(cycles[i][k]);
    }
    out += ']';
  }
  out += ']';
}

}  // namespace detail

/// Canonical writer: fixed key order, flags compacted to 0..2m-1 preserving
/// label order.  Byte-exact across runs.
inline std::string write_map(const GeneralMap& g, std::optional<int> root = std::nullopt) {
  const auto& fl = g.flags();
  auto rank = [&](int b) {
    return static_cast<int>(std::lower_bound(fl.begin(), fl.end(), b) - fl.begin());
  };
  auto compacted = [&](const Perm& p) {
    std::vector<std::vector<int>> cycles = p.cycles();
    for (auto& c : cycles)
      for (auto& b : c) b = rank(b);
    return cycles;
  };
  std::string out = "{\"flags\": " + std::to_string(g.flag_count()) + ", \"sigma\": ";
  detail::append_cycles(out, compacted(g.sigma));
  out += ", \"alpha\": ";
  detail::append_cycles(out, compacted(g.alpha));
  if (root) out += ", \"root\": " + std::to_string(rank(*root));
  out += "}";
  return out;
}

inline std::string subset_to_string(const EdgeSubset& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

/// Comma-separated edge ids, e.g. "0,4"; empty string is the empty set.
inline EdgeSubset parse_subset(const std::string& csv) {
  EdgeSubset s;
  std::string tok;
  std::istringstream in(csv);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    s.push_back(std::stoi(tok));
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

struct NamedWord {
  Word word;                       // symbol ids in first-occurrence order
  std::vector<std::string> names;  // names[id] = token as given
};

/// Whitespace-separated symbol tokens.
inline NamedWord parse_word(const std::string& text) {
  NamedWord nw;
  std::map<std::string, int> id;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto it = id.find(tok);
    if (it == id.end()) {
      it = id.emplace(tok, static_cast<int>(nw.names.size())).first;
      nw.names.push_back(tok);
    }
    nw.word.push_back(it->second);
  }
  return nw;
}

/// Canonical letter form, a..z by first occurrence.
inline std::string word_to_letters(const Word& w) {
  Word cw = canonical_rename(w);
  std::string out;
  for (std::size_t i = 0; i < cw.size(); ++i) {
    if (i) out += ' ';
    if (cw[i] >= 26) throw std::domain_error("too many symbols for letter output");
    out += static_cast<char>('a' + cw[i]);
  }
  return out;
}

}  // namespace cmaps
