// mbt: maximum-binary-tree workbench CLI.
// JSON report on stdout, human notes on stderr.
// Exit codes: 0 ok, 2 usage, 3 infeasible/refused, 4 validation failure.

#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbt/biperm.hpp"
#include "mbt/color_gadget.hpp"
#include "mbt/dag_reduction.hpp"
#include "mbt/detect.hpp"
#include "mbt/graph_io.hpp"
#include "mbt/heapable.hpp"
#include "mbt/lp.hpp"
#include "mbt/oracle.hpp"
#include "mbt/treewidth.hpp"
#include "mbt/tsp12.hpp"
#include "mbt/undir_reduction.hpp"

using nlohmann::json;
using namespace mbt;

namespace {

struct CmdError {
  int code;
  std::string message;
};

uint64_t fnv1a(const std::string& data, uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

json tree_json(const DirBinaryTree& t) { return json::parse(tree_to_json(t)); }
json tree_json(const UndirBinaryTree& t, std::optional<int> root = std::nullopt) {
  return json::parse(tree_to_json(t, root));
}

std::pair<long long, long long> parse_eps(const std::string& text) {
  // accepts "1", "3/4", "0.25"
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    long long num = std::stoll(text.substr(0, slash));
    long long den = std::stoll(text.substr(slash + 1));
    return {num, den};
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return {std::stoll(text), 1};
  std::string frac = text.substr(dot + 1);
  long long den = 1;
  for (size_t i = 0; i < frac.size(); i++) den *= 10;
  long long num = std::stoll(text.substr(0, dot)) * den + std::stoll(frac);
  return {num, den};
}

Rational parse_rational(const std::string& text) {
  auto [num, den] = parse_eps(text);
  return Rational(num) / den;
}

Color color_from_string(const std::string& s) {
  if (s == "R" || s == "red" || s == "Red") return Color::Red;
  if (s == "G" || s == "green" || s == "Green") return Color::Green;
  if (s == "B" || s == "blue" || s == "Blue") return Color::Blue;
  throw CmdError{2, "unknown color '" + s + "'"};
}

std::string color_to_string(Color c) {
  switch (c) {
    case Color::Red: return "R";
    case Color::Green: return "G";
    default: return "B";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum binary tree workbench"};
  app.require_subcommand(1);

  std::string in_path, out_path, tree_path, td_path, sol_path, coloring_path;
  std::string algo = "brute", kind = "undir", eps_text = "1", solver_name = "brute";
  uint64_t seed = 0;
  int root = -1, k = -1, field_bits = 64, p_side = 3, q_side = 3;
  int n = 6, m = 8, cap = -1;
  double delta = 1e-3, eps_value = 0.5;
  bool dir_flag = false, undir_flag = false, integer_flag = false;

  app.add_option("--seed", seed, "global seed (fixed default keeps runs reproducible)");

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--kind", kind, "dir|dag|undir|biperm");
  gen->add_option("--n", n);
  gen->add_option("--m", m);
  gen->add_option("--p", p_side, "biperm: size of side S");
  gen->add_option("--q", q_side, "biperm: size of side T");
  gen->add_option("--out", out_path);

  auto* solve = app.add_subcommand("solve", "solve maximum binary tree");
  solve->add_option("--algo", algo, "brute|fpt|biperm|treewidth");
  solve->add_option("--in", in_path)->required();
  solve->add_option("--root", root);
  solve->add_option("--k", k, "fpt: target size");
  solve->add_option("--delta", delta);
  solve->add_option("--field-bits", field_bits);
  solve->add_option("--td", td_path, "treewidth: decomposition file");
  solve->add_option("--cap", cap, "oracle size cap override");

  auto* verify = app.add_subcommand("verify-tree", "validate a tree certificate");
  verify->add_option("--in", in_path)->required();
  verify->add_option("--tree", tree_path)->required();
  verify->add_option("--root", root);

  auto* square = app.add_subcommand("square", "emit the squared graph");
  square->add_flag("--dir", dir_flag);
  square->add_flag("--undir", undir_flag);
  square->add_option("--in", in_path)->required();
  square->add_option("--root", root);
  square->add_option("--out", out_path);

  auto* boost_cmd = app.add_subcommand("boost", "plant a tree into the squared graph");
  boost_cmd->add_flag("--dir", dir_flag);
  boost_cmd->add_flag("--undir", undir_flag);
  boost_cmd->add_option("--in", in_path)->required();
  boost_cmd->add_option("--root", root);
  boost_cmd->add_option("--tree", tree_path)->required();

  auto* extract = app.add_subcommand("extract", "pull a base tree out of a squared tree");
  extract->add_flag("--dir", dir_flag);
  extract->add_flag("--undir", undir_flag);
  extract->add_option("--in", in_path)->required();
  extract->add_option("--root", root);
  extract->add_option("--tree", tree_path)->required();

  auto* gadget = app.add_subcommand("gadget-3col", "build the coloring gadget DAG");
  gadget->add_option("--in", in_path)->required();
  gadget->add_option("--eps", eps_text);
  gadget->add_option("--coloring", coloring_path, "emit the tree of a proper coloring");
  gadget->add_option("--out", out_path);

  auto* colorx = app.add_subcommand("color-extract", "read a coloring off a gadget tree");
  colorx->add_option("--in", in_path)->required();
  colorx->add_option("--eps", eps_text);
  colorx->add_option("--tree", tree_path)->required();

  auto* tsp = app.add_subcommand("tsp12-tour", "tour pipeline on a tsp12 instance");
  tsp->add_option("--in", in_path)->required();
  tsp->add_option("--eps", eps_value);
  tsp->add_option("--cap", cap);

  auto* lpe = app.add_subcommand("lp-emit", "emit the cut-constraint program");
  lpe->add_option("--in", in_path)->required();
  lpe->add_option("--root", root)->required();
  lpe->add_flag("--integer", integer_flag);
  lpe->add_option("--out", out_path);

  auto* lpv = app.add_subcommand("lp-verify", "verify a fractional point exactly");
  lpv->add_option("--in", in_path)->required();
  lpv->add_option("--root", root)->required();
  lpv->add_option("--sol", sol_path)->required();

  auto* heap = app.add_subcommand("heapable", "longest heapable subsequence");
  heap->add_option("--in", in_path, "whitespace-separated numbers (default stdin)");
  heap->add_option("--solver", solver_name, "brute|fpt");

  auto* tdc = app.add_subcommand("td-check", "validate a tree decomposition");
  tdc->add_option("--in", in_path)->required();
  tdc->add_option("--td", td_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto started = std::chrono::steady_clock::now();
  json payload;
  int code = 0;
  uint64_t digest = 1469598103934665603ULL;
  std::string sub;

  auto load = [&](const std::string& path) {
    std::string text = read_file(path);
    digest = fnv1a(text, digest);
    return text;
  };

  try {
    if (gen->parsed()) {
      sub = "gen";
      std::string text;
      if (kind == "undir") {
        auto g = gen_random_ugraph(n, m, seed);
        text = write_graph(g);
        payload["n"] = g.n();
        payload["m"] = g.m();
      } else if (kind == "dir" || kind == "dag") {
        auto g = gen_random_digraph(kind == "dir" ? GraphKind::Dir : GraphKind::Dag, n, m,
                                    seed);
        text = write_graph(g);
        payload["n"] = g.n();
        payload["m"] = g.m();
      } else if (kind == "biperm") {
        auto inst = gen_random_biperm(p_side, q_side, seed);
        text = write_graph(inst.graph);
        payload["n"] = inst.graph.n();
        payload["m"] = inst.graph.m();
        payload["s_order"] = inst.ordering.s_order;
        payload["t_order"] = inst.ordering.t_order;
      } else {
        throw CmdError{2, "unknown kind '" + kind + "'"};
      }
      digest = fnv1a(text, digest);
      if (!out_path.empty())
        write_file(out_path, text);
      else
        payload["graph"] = text;
    } else if (solve->parsed()) {
      sub = "solve";
      auto any = read_graph(load(in_path));
      if (algo == "brute") {
        if (std::holds_alternative<UGraph>(any)) {
          auto& g = std::get<UGraph>(any);
          auto res = brute_mbt_undirected(g, 3, cap > 0 ? cap : 16);
          if (!validate_undir_tree(g, res.tree).ok) throw CmdError{4, "self-validation"};
          payload["size"] = res.size;
          payload["tree"] = tree_json(res.tree);
        } else {
          auto& g = std::get<Digraph>(any);
          DirOptResult res;
          if (g.is_acyclic())
            res = root >= 0 ? brute_mbt_dag(g, root, cap > 0 ? cap : 20)
                            : brute_mbt_dag_unrooted(g, cap > 0 ? cap : 20);
          else if (root >= 0)
            res = brute_mbt_directed(g, root, cap > 0 ? cap : 12);
          else
            throw CmdError{2, "cyclic digraph needs --root"};
          if (!validate_dir_tree(g, res.tree).ok) throw CmdError{4, "self-validation"};
          payload["size"] = res.size;
          payload["tree"] = tree_json(res.tree);
        }
      } else if (algo == "fpt") {
        auto& g = std::get<Digraph>(any);
        FptParams params;
        params.delta = delta;
        params.seed = seed;
        params.field_bits = field_bits;
        if (cap > 0) params.k_cap = cap;
        if (k >= 1) {
          auto found = search_k_binary_tree(g, k, params);
          if (!found) {
            payload["decision"] = "no";
            code = 3;
          } else {
            if (!validate_dir_tree(g, *found).ok) throw CmdError{4, "self-validation"};
            payload["size"] = found->size();
            payload["tree"] = tree_json(*found);
          }
        } else {
          std::optional<DirBinaryTree> best;
          for (int kk = 1; kk <= std::min(g.n(), params.k_cap); kk++) {
            auto found = search_k_binary_tree(g, kk, params);
            if (!found) break;
            best = found;
          }
          if (!best) throw CmdError{3, "no tree found"};
          if (!validate_dir_tree(g, *best).ok) throw CmdError{4, "self-validation"};
          payload["size"] = best->size();
          payload["tree"] = tree_json(*best);
        }
      } else if (algo == "biperm") {
        auto& g = std::get<UGraph>(any);
        auto res = solve_biperm(g);
        payload["size"] = res.tree.size();
        payload["edges"] = res.edges;
        payload["tree"] = tree_json(res.tree);
        json ords = json::array();
        for (auto& o : res.component_orderings)
          ords.push_back({{"s", o.s_order}, {"t", o.t_order}});
        payload["orderings"] = ords;
      } else if (algo == "treewidth") {
        auto& g = std::get<UGraph>(any);
        TreeDecomposition td =
            td_path.empty() ? heuristic_td(g) : read_td(load(td_path));
        auto res = solve_unrooted_tw(g, td);
        payload["size"] = res.tree.size();
        payload["edges"] = res.edges;
        payload["tree"] = tree_json(res.tree);
        payload["width"] = td.width();
      } else {
        throw CmdError{2, "unknown algo '" + algo + "'"};
      }
    } else if (verify->parsed()) {
      sub = "verify-tree";
      auto any = read_graph(load(in_path));
      std::string ttext = load(tree_path);
      ValidityReport rep;
      if (std::holds_alternative<Digraph>(any))
        rep = validate_dir_tree(std::get<Digraph>(any), dir_tree_from_json(ttext));
      else
        rep = validate_undir_tree(std::get<UGraph>(any), undir_tree_from_json(ttext),
                                  root >= 0 ? std::optional<int>(root) : std::nullopt);
      payload["valid"] = rep.ok;
      payload["reason"] = rep.reason;
      if (!rep.ok) code = 4;
    } else if (square->parsed()) {
      sub = "square";
      if (dir_flag == undir_flag) throw CmdError{2, "pick one of --dir/--undir"};
      std::string text;
      if (dir_flag) {
        if (root < 0) throw CmdError{2, "--dir squaring needs --root"};
        auto sq = dir_square(read_digraph(load(in_path)), root);
        text = write_graph(sq.squared);
        payload["n"] = sq.squared.n();
        payload["m"] = sq.squared.m();
        payload["root"] = sq.root;
      } else {
        auto sq = undir_square(read_ugraph(load(in_path)));
        text = write_graph(sq.squared);
        payload["n"] = sq.squared.n();
        payload["m"] = sq.squared.m();
      }
      if (!out_path.empty())
        write_file(out_path, text);
      else
        payload["graph"] = text;
    } else if (boost_cmd->parsed()) {
      sub = "boost";
      if (dir_flag == undir_flag) throw CmdError{2, "pick one of --dir/--undir"};
      if (dir_flag) {
        if (root < 0) throw CmdError{2, "--dir boosting needs --root"};
        auto sq = dir_square(read_digraph(load(in_path)), root);
        auto t2 = dir_boost_tree(sq, dir_tree_from_json(load(tree_path)));
        payload["size"] = t2.size();
        payload["tree"] = tree_json(t2);
      } else {
        auto sq = undir_square(read_ugraph(load(in_path)));
        auto res = undir_boost_tree(sq, undir_tree_from_json(load(tree_path)));
        payload["size"] = res.tree.size();
        payload["degraded"] = res.degraded_singleton;
        payload["tree"] = tree_json(res.tree);
      }
    } else if (extract->parsed()) {
      sub = "extract";
      if (dir_flag == undir_flag) throw CmdError{2, "pick one of --dir/--undir"};
      if (dir_flag) {
        if (root < 0) throw CmdError{2, "--dir extraction needs --root"};
        auto sq = dir_square(read_digraph(load(in_path)), root);
        auto t1 = dir_extract(sq, dir_tree_from_json(load(tree_path)));
        payload["size"] = t1.size();
        payload["tree"] = tree_json(t1);
      } else {
        auto sq = undir_square(read_ugraph(load(in_path)));
        auto res = undir_extract(sq, undir_tree_from_json(load(tree_path)));
        payload["size"] = res.tree.size();
        payload["forest_trees"] = res.forest_trees;
        payload["tree"] = tree_json(res.tree);
      }
    } else if (gadget->parsed()) {
      sub = "gadget-3col";
      auto [num, den] = parse_eps(eps_text);
      auto gad = build_color_gadget(read_ugraph(load(in_path)), num, den);
      payload["t"] = gad.t;
      payload["N"] = gad.total;
      payload["root"] = gad.super_root;
      if (!coloring_path.empty()) {
        auto cj = json::parse(load(coloring_path));
        Coloring sigma;
        sigma.color.assign(gad.source.n(), Color::Red);
        for (auto& [key, val] : cj.items())
          sigma.color[std::stoi(key)] = color_from_string(val.get<std::string>());
        auto t = coloring_to_tree(gad, sigma);
        payload["size"] = t.size();
        payload["tree"] = tree_json(t);
      }
      if (!out_path.empty()) write_file(out_path, write_graph(gad.dag));
    } else if (colorx->parsed()) {
      sub = "color-extract";
      auto [num, den] = parse_eps(eps_text);
      auto gad = build_color_gadget(read_ugraph(load(in_path)), num, den);
      auto res = tree_to_coloring(gad, dir_tree_from_json(load(tree_path)));
      json colors;
      for (size_t i = 0; i < res.sigma.color.size(); i++)
        colors[std::to_string(i)] = color_to_string(res.sigma.color[i]);
      payload["colors"] = colors;
      payload["monochromatic_edges"] = res.monochromatic_edges;
      payload["ambiguous"] = res.ambiguous;
    } else if (tsp->parsed()) {
      sub = "tsp12-tour";
      auto inst = read_tsp12(load(in_path));
      int oracle_cap = cap > 0 ? cap : 22;
      Tsp12Solver solver{[oracle_cap](const UGraph& g, double) {
        return brute_mbt_undirected(g, 3, oracle_cap).tree;
      }};
      auto tour = tsp12_tour(inst, solver, eps_value);
      payload["order"] = tour.order;
      payload["weight"] = tour.weight;
    } else if (lpe->parsed()) {
      sub = "lp-emit";
      auto g = read_digraph(load(in_path));
      std::string text = emit_lp(g, root, integer_flag, cap > 0 ? cap : 20);
      payload["variables"] = g.n() + g.m();
      if (!out_path.empty())
        write_file(out_path, text);
      else
        payload["lp"] = text;
    } else if (lpv->parsed()) {
      sub = "lp-verify";
      auto g = read_digraph(load(in_path));
      auto sj = json::parse(load(sol_path));
      FractionalSolution sol;
      if (sj.contains("Y"))
        for (auto& [key, val] : sj["Y"].items())
          sol.y[std::stoi(key)] = parse_rational(val.get<std::string>());
      if (sj.contains("X"))
        for (auto& [key, val] : sj["X"].items()) {
          auto arrow = key.find("->");
          if (arrow == std::string::npos) throw CmdError{2, "X keys look like 'u->v'"};
          Arc a{std::stoi(key.substr(0, arrow)), std::stoi(key.substr(arrow + 2))};
          sol.x[a] = parse_rational(val.get<std::string>());
        }
      auto rep = verify_fractional(g, root, sol);
      payload["feasible"] = rep.feasible;
      json viols = json::array();
      for (auto& v : rep.violations)
        viols.push_back({{"constraint", v.constraint}, {"detail", v.detail}});
      payload["violations"] = viols;
      std::ostringstream obj;
      obj << sol.objective();
      payload["objective"] = obj.str();
      if (!rep.feasible) code = 4;
    } else if (heap->parsed()) {
      sub = "heapable";
      std::string text;
      if (in_path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
        digest = fnv1a(text, digest);
      } else {
        text = load(in_path);
      }
      std::vector<long long> seq;
      std::istringstream in(text);
      long long v;
      while (in >> v) seq.push_back(v);
      auto res = longest_heapable(
          seq, solver_name == "fpt" ? HeapableSolver::Fpt : HeapableSolver::Brute, seed);
      payload["length"] = res.length;
      payload["positions"] = res.positions;
      payload["heapable_in_full"] = res.length == static_cast<int>(seq.size());
    } else if (tdc->parsed()) {
      sub = "td-check";
      auto g = read_ugraph(load(in_path));
      auto td = read_td(load(td_path));
      auto rep = validate_td(g, td);
      payload["valid"] = rep.ok;
      payload["width"] = td.width();
      payload["reason"] = rep.reason;
      if (!rep.ok) code = 4;
    }
  } catch (const CmdError& e) {
    std::cerr << "error: " << e.message << "\n";
    payload["error"] = e.message;
    code = e.code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    payload["error"] = e.what();
    code = 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "refused: " << e.what() << "\n";
    payload["error"] = e.what();
    code = 3;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    payload["error"] = e.what();
    code = 4;
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  json report;
  report["subcommand"] = sub;
  report["digest"] = digest;
  report["seed"] = seed;
  report["wall_ms"] = elapsed;
  report["payload"] = payload;
  std::cout << report.dump() << "\n";
  return code;
}
