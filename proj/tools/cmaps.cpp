// cmaps: command-line front end for the combinatorial-map library.
//
// Maps are read from a file argument (or standard input when omitted) in the
// JSON map format; all output is deterministic.  Exit codes: 0 success,
// 1 domain/data error, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cmaps/cmaps.hpp"

using namespace cmaps;

namespace {

ParsedMap load_map(const std::string& path) {
  if (path.empty() || path == "-") return read_map(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_map(in);
}

RootedMap rooted(const ParsedMap& pm) {
  if (pm.map.flag_count() == 0)
    throw std::domain_error("map has no flags to root at");
  int root = pm.root.value_or(pm.map.flags().front());
  if (!is_connected(pm.map))
    throw std::domain_error("rooted operations need a connected map");
  return RootedMap{pm.map, root};
}

std::string matching_string(const std::vector<std::array<int, 2>>& m) {
  std::string s;
  for (const auto& p : m)
    s += "(" + std::to_string(p[0]) + " " + std::to_string(p[1]) + ")";
  return s;
}

std::string int_list(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

void print_diagram(const BicoloredDiagram& d) {
  std::cout << "flags " << int_list(d.word) << "\n";
  std::cout << "edges " << int_list(edge_word(d)) << "\n";
  std::cout << "tree " << subset_to_string(d.tree_edges()) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial maps, quasi-trees, and loopless map counting"};
  app.require_subcommand(1);

  std::string map_path, word_text, set_csv, tree_csv, edges_csv;
  int edge_arg = -1, n_arg = 0, m_arg = 0, degree_arg = 6;
  bool flag_count = false, flag_list = false, flag_planar = false;
  bool flag_early = false, flag_late = false;
  std::string filter;

  auto add_map_arg = [&](CLI::App* cmd) {
    cmd->add_option("map", map_path, "map file (defaults to standard input)");
  };

  auto* c_validate = app.add_subcommand("validate", "check the map invariants");
  add_map_arg(c_validate);
  auto* c_dual = app.add_subcommand("dual", "write the dual map");
  add_map_arg(c_dual);
  auto* c_genus = app.add_subcommand("genus", "vertex/edge/face counts and genus");
  add_map_arg(c_genus);
  auto* c_tour = app.add_subcommand("tour", "tour permutation of an edge subset");
  c_tour->add_option("--set", set_csv, "edge ids, comma separated");
  add_map_arg(c_tour);
  auto* c_qt = app.add_subcommand("quasitrees", "count or list quasi-trees");
  c_qt->add_flag("--count", flag_count, "print the count (default)");
  c_qt->add_flag("--list", flag_list, "print one subset per line");
  add_map_arg(c_qt);
  auto* c_delete = app.add_subcommand("delete", "delete a non-bridge edge");
  c_delete->add_option("--edge", edge_arg, "edge id")->required();
  add_map_arg(c_delete);
  auto* c_contract = app.add_subcommand("contract", "contract a non-separating-loop edge");
  c_contract->add_option("--edge", edge_arg, "edge id")->required();
  add_map_arg(c_contract);
  auto* c_diagram = app.add_subcommand("diagram", "bicolored chord diagram of a quasi-tree");
  c_diagram->add_option("--tree", tree_csv, "quasi-tree edge ids");
  add_map_arg(c_diagram);
  auto* c_word2map = app.add_subcommand("word2map", "rooted loopless map of a property-P word");
  c_word2map->add_option("word", word_text, "double occurrence word")->required();
  auto* c_map2word = app.add_subcommand("map2word", "double occurrence word of a quasi-tree tour");
  c_map2word->add_option("--tree", tree_csv, "quasi-tree edge ids");
  add_map_arg(c_map2word);
  auto* c_dfs = app.add_subcommand("dfs", "depth-first search tree");
  c_dfs->add_flag("--early", flag_early, "take the first admissible flag");
  c_dfs->add_flag("--late", flag_late, "take the last admissible flag");
  add_map_arg(c_dfs);
  auto* c_tremaux = app.add_subcommand("tremaux", "test a spanning tree for the tremaux property");
  c_tremaux->add_option("--tree", tree_csv, "spanning tree edge ids");
  add_map_arg(c_tremaux);
  auto* c_poset = app.add_subcommand("poset", "the quasi-tree poset");
  add_map_arg(c_poset);
  auto* c_pivot = app.add_subcommand("pivot", "pivot a diagram at two interlaced chords");
  c_pivot->add_option("--tree", tree_csv, "quasi-tree edge ids");
  c_pivot->add_option("--edges", edges_csv, "the two edges, comma separated")->required();
  add_map_arg(c_pivot);
  auto* c_pclass = app.add_subcommand("pivot-class", "all diagrams reachable by pivoting");
  c_pclass->add_option("--tree", tree_csv, "quasi-tree edge ids");
  add_map_arg(c_pclass);
  auto* c_count = app.add_subcommand("count-loopless", "count loopless rooted maps");
  c_count->add_option("--n", n_arg, "edge count")->required();
  c_count->add_flag("--planar", flag_planar, "planar maps only (closed formula)");
  c_count->add_option("--unmatched", m_arg, "unmatched symbols in the word model");
  auto* c_gen = app.add_subcommand("gen-words", "generate canonical 1-2 occurrence words");
  c_gen->add_option("--n", n_arg, "matched symbols")->required();
  c_gen->add_option("--m", m_arg, "unmatched symbols");
  c_gen->add_option("--filter", filter, "P, Q, N or Nprime");
  auto* c_verify = app.add_subcommand("verify-f", "check the generating-function equation");
  c_verify->add_option("--degree", degree_arg, "total degree bound (<= 8)");
  auto* c_layout = app.add_subcommand("layout", "two-polygon drawing data for a quasi-tree");
  c_layout->add_option("--tree", tree_csv, "quasi-tree edge ids");
  add_map_arg(c_layout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // help exits 0, any parse failure is usage error
  }

  try {
    if (*c_validate) {
      ParsedMap pm = load_map(map_path);
      Diagnostic d = validate(pm.map);
      std::cout << d.message << "\n";
      return d.ok ? 0 : 1;
    }
    if (*c_dual) {
      ParsedMap pm = load_map(map_path);
      std::cout << write_map(dual(pm.map), pm.root) << "\n";
      return 0;
    }
    if (*c_genus) {
      ParsedMap pm = load_map(map_path);
      if (!is_connected(pm.map)) {
        std::cerr << "error: genus is defined for connected maps only\n";
        for (const auto& comp : components(pm.map)) {
          GeneralMap sub{pm.map.sigma.restrict_to(comp), pm.map.alpha.restrict_to(comp)};
          EulerCounts c = genus_of(sub);
          std::cerr << "component " << subset_to_string(comp) << ": genus "
                    << c.genus << "\n";
        }
        return 1;
      }
      EulerCounts c = genus_of(pm.map);
      std::cout << "genus " << c.genus << "\nvertices " << c.vertices << "\nedges "
                << c.edges << "\nfaces " << c.faces << "\n";
      return 0;
    }
    if (*c_tour) {
      ParsedMap pm = load_map(map_path);
      std::cout << perm_to_string(tour(pm.map, parse_subset(set_csv))) << "\n";
      return 0;
    }
    if (*c_qt) {
      ParsedMap pm = load_map(map_path);
      if (flag_list) {
        for (const auto& s : list_quasi_trees(pm.map))
          std::cout << subset_to_string(s) << "\n";
      } else {
        std::cout << count_quasi_trees(pm.map).str() << "\n";
      }
      return 0;
    }
    if (*c_delete) {
      ParsedMap pm = load_map(map_path);
      std::cout << write_map(erase_edge(pm.map, edge_arg)) << "\n";
      return 0;
    }
    if (*c_contract) {
      ParsedMap pm = load_map(map_path);
      std::cout << write_map(contract_edge(pm.map, edge_arg)) << "\n";
      return 0;
    }
    if (*c_diagram) {
      ParsedMap pm = load_map(map_path);
      print_diagram(diagram_of(rooted(pm), parse_subset(tree_csv)));
      return 0;
    }
    if (*c_word2map) {
      NamedWord nw = parse_word(word_text);
      auto [rm, s] = word_to_map(nw.word);
      std::cout << write_map(rm.map, rm.root) << "\n";
      std::cout << "tree " << subset_to_string(s) << "\n";
      return 0;
    }
    if (*c_map2word) {
      ParsedMap pm = load_map(map_path);
      std::cout << word_to_letters(map_to_word(rooted(pm), parse_subset(tree_csv)))
                << "\n";
      return 0;
    }
    if (*c_dfs) {
      if (flag_early == flag_late)
        throw std::invalid_argument("choose exactly one of --early / --late");
      ParsedMap pm = load_map(map_path);
      DfsResult res = dfs(rooted(pm), flag_early ? DfsPolicy::Early : DfsPolicy::Late);
      std::cout << "tree " << subset_to_string(res.tree) << "\n";
      std::cout << "order " << int_list(res.visit_order) << "\n";
      return 0;
    }
    if (*c_tremaux) {
      ParsedMap pm = load_map(map_path);
      std::cout << (is_tremaux(rooted(pm), parse_subset(tree_csv)) ? "true" : "false")
                << "\n";
      return 0;
    }
    if (*c_poset) {
      ParsedMap pm = load_map(map_path);
      QtPoset p = build_poset(rooted(pm));
      for (const auto& s : p.elements)
        std::cout << "element " << subset_to_string(s) << "\n";
      for (auto [i, j] : p.covers) std::cout << "cover " << i << " " << j << "\n";
      return 0;
    }
    if (*c_pivot) {
      ParsedMap pm = load_map(map_path);
      EdgeSubset pair = parse_subset(edges_csv);
      if (pair.size() != 2)
        throw std::invalid_argument("--edges needs exactly two distinct edge ids");
      BicoloredDiagram d = diagram_of(rooted(pm), parse_subset(tree_csv));
      print_diagram(pivot_diagram(d, pair[0], pair[1]));
      return 0;
    }
    if (*c_pclass) {
      ParsedMap pm = load_map(map_path);
      auto cls = pivot_class(diagram_of(rooted(pm), parse_subset(tree_csv)));
      std::cout << "size " << cls.size() << "\n";
      std::vector<EdgeSubset> trees;
      for (const auto& d : cls) trees.push_back(d.tree_edges());
      std::sort(trees.begin(), trees.end());
      for (const auto& t : trees) std::cout << subset_to_string(t) << "\n";
      return 0;
    }
    if (*c_count) {
      BigCount result;
      if (flag_planar)
        result = c_count->count("--unmatched") ? count_T_enumerated(n_arg, m_arg)
                                               : count_planar_loopless(n_arg);
      else
        result = count_G(n_arg, m_arg);
      std::cout << result.str() << "\n";
      return 0;
    }
    if (*c_gen) {
      for (const auto& w : gen_words(n_arg, m_arg)) {
        if (filter == "P" && !has_P(w)) continue;
        if (filter == "Q" && !has_Q(w)) continue;
        if (filter == "N" && !has_N(w)) continue;
        if (filter == "Nprime" && !has_Nprime(w)) continue;
        if (!filter.empty() && filter != "P" && filter != "Q" && filter != "N" &&
            filter != "Nprime")
          throw std::invalid_argument("unknown filter " + filter);
        std::cout << word_to_letters(w) << "\n";
      }
      return 0;
    }
    if (*c_verify) {
      FEquationReport rep = verify_F_equation(degree_arg);
      std::cout << (rep.ok ? "ok to degree " + std::to_string(degree_arg) : rep.detail)
                << "\n";
      return rep.ok ? 0 : 1;
    }
    if (*c_layout) {
      ParsedMap pm = load_map(map_path);
      PolygonLayout lay = layout(rooted(pm), parse_subset(tree_csv));
      std::cout << "circle " << int_list(lay.circle) << "\n";
      std::cout << "genus " << lay.map_genus << "\n";
      std::cout << "tree_genus " << lay.tree_genus << "\n";
      std::cout << "inner_sides " << lay.inner_sides << "\n";
      std::cout << "outer_sides " << lay.outer_sides << "\n";
      std::cout << "inner_matching " << matching_string(lay.inner_matching) << "\n";
      std::cout << "outer_matching " << matching_string(lay.outer_matching) << "\n";
      std::cout << "interior_dual_vertices " << lay.interior_dual_vertices << "\n";
      for (const auto& rt : lay.routes) {
        std::cout << "chord " << rt.edge << (rt.inside ? " inside" : " outside");
        if (rt.handle < 0)
          std::cout << " disk\n";
        else
          std::cout << " handle " << rt.handle << " slot " << rt.slot << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
