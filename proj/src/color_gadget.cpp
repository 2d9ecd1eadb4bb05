#include "mbt/color_gadget.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mbt {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

ColorGadget build_color_gadget(const UGraph& g, long long eps_num, long long eps_den) {
  if (eps_num <= 0 || eps_den <= 0)
    throw std::invalid_argument("build_color_gadget: epsilon must be positive");
  if (g.m() < 1) throw std::invalid_argument("build_color_gadget: graph needs an edge");

  long long n = g.n(), m = g.m();
  ColorGadget gad;
  gad.source = g;
  gad.eps_num = eps_num;
  gad.eps_den = eps_den;
  gad.t = ceil_div(2 * eps_num * n * (n + 1) + 4 * n * n * eps_den, eps_num * m);
  gad.total = 3 * m * gad.t + 3 * n * n + 2 * n;

  int next_id = 0;
  std::vector<Arc> arcs;
  gad.super_root = next_id++;  // a

  // Binary tree B over the n vertex leaves, arcs child -> parent.
  gad.leaf.assign(n, -1);
  auto build_b = [&](auto&& self, int lo, int hi) -> int {
    if (hi - lo == 1) {
      gad.leaf[lo] = next_id++;
      return gad.leaf[lo];
    }
    int node = next_id++;
    int mid = lo + (hi - lo) / 2;
    arcs.emplace_back(self(self, lo, mid), node);
    arcs.emplace_back(self(self, mid, hi), node);
    return node;
  };
  int c_root = build_b(build_b, 0, static_cast<int>(n));
  arcs.emplace_back(c_root, gad.super_root);

  // Three length-n paths per vertex; position 0 feeds the leaf.
  for (int color = 0; color < 3; color++) {
    gad.path_node[color].assign(n, std::vector<int>(n));
    for (int i = 0; i < n; i++) {
      for (int p = 0; p < n; p++) gad.path_node[color][i][p] = next_id++;
      arcs.emplace_back(gad.path_node[color][i][0], gad.leaf[i]);
      for (int p = 0; p + 1 < n; p++)
        arcs.emplace_back(gad.path_node[color][i][p + 1], gad.path_node[color][i][p]);
    }
  }

  // Rank of each edge among the edges incident to a vertex, in edge order.
  std::vector<int> used_slots(n, 0);
  std::vector<std::pair<int, int>> edge_rank(m);
  for (int e = 0; e < m; e++) {
    auto [u, v] = g.edges()[e];
    edge_rank[e] = {used_slots[u]++, used_slots[v]++};
  }

  // Three t-node heap-shaped trees per edge, roots wired into both paths.
  for (int color = 0; color < 3; color++) {
    gad.gadget_root[color].assign(m, -1);
    gad.slot[color].assign(m, {-1, -1});
    for (int e = 0; e < m; e++) {
      int base = next_id;
      next_id += static_cast<int>(gad.t);
      gad.gadget_root[color][e] = base;
      for (long long j = 1; j < gad.t; j++)
        arcs.emplace_back(base + static_cast<int>(j), base + static_cast<int>((j - 1) / 2));
      auto [u, v] = g.edges()[e];
      int slot_u = gad.path_node[color][u][edge_rank[e].first];
      int slot_v = gad.path_node[color][v][edge_rank[e].second];
      gad.slot[color][e] = {slot_u, slot_v};
      arcs.emplace_back(base, slot_u);
      arcs.emplace_back(base, slot_v);
    }
  }

  if (next_id != gad.total)
    throw std::logic_error("build_color_gadget: node count mismatch");
  gad.dag = Digraph(next_id, std::move(arcs));
  return gad;
}

DirBinaryTree coloring_to_tree(const ColorGadget& gad, const Coloring& sigma) {
  const UGraph& g = gad.source;
  if (static_cast<int>(sigma.color.size()) != g.n())
    throw std::invalid_argument("coloring_to_tree: coloring size mismatch");
  for (auto& [u, v] : g.edges())
    if (sigma.color[u] == sigma.color[v])
      throw std::invalid_argument("coloring_to_tree: coloring not proper (edge " +
                                  std::to_string(u) + "," + std::to_string(v) + ")");

  int n = g.n(), m = g.m();
  std::set<int> keep_nodes;
  DirBinaryTree t;
  t.root = gad.super_root;

  // B and the super root: every arc between two B nodes or into a.
  std::set<int> b_nodes(gad.leaf.begin(), gad.leaf.end());
  b_nodes.insert(gad.super_root);
  // all ids below the first path node are B/a ids
  int first_path_id = gad.path_node[0][0].empty() ? 2 * n : gad.path_node[0][0][0];
  for (auto& [x, y] : gad.dag.arcs())
    if (x < first_path_id && y < first_path_id) t.arcs.emplace_back(x, y);

  // Paths of the two colors that differ from sigma at each vertex.
  for (int color = 0; color < 3; color++)
    for (int i = 0; i < n; i++) {
      if (sigma.color[i] == static_cast<Color>(color)) continue;
      t.arcs.emplace_back(gad.path_node[color][i][0], gad.leaf[i]);
      for (int p = 0; p + 1 < n; p++)
        t.arcs.emplace_back(gad.path_node[color][i][p + 1], gad.path_node[color][i][p]);
    }

  // Every gadget tree survives; the root hangs off a kept path.
  for (int color = 0; color < 3; color++)
    for (int e = 0; e < m; e++) {
      int base = gad.gadget_root[color][e];
      for (long long j = 1; j < gad.t; j++)
        t.arcs.emplace_back(base + static_cast<int>(j), base + static_cast<int>((j - 1) / 2));
      auto [u, v] = g.edges()[e];
      bool u_keeps = sigma.color[u] != static_cast<Color>(color);
      int target = u_keeps ? gad.slot[color][e].first : gad.slot[color][e].second;
      t.arcs.emplace_back(base, target);
    }
  return t;
}

DirBinaryTree maximalize_tree(const Digraph& g, const DirBinaryTree& t) {
  std::vector<char> in_tree(g.n(), 0);
  std::vector<int> indeg(g.n(), 0);
  DirBinaryTree out = t;
  in_tree[t.root] = 1;
  for (auto& [u, v] : t.arcs) {
    in_tree[u] = 1;
    in_tree[v] = 1;
    indeg[v]++;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto& [u, v] : g.arcs()) {
      if (in_tree[u] || !in_tree[v] || indeg[v] >= 2) continue;
      in_tree[u] = 1;
      indeg[v]++;
      out.arcs.emplace_back(u, v);
      grew = true;
    }
  }
  return out;
}

ExtractedColoring tree_to_coloring(const ColorGadget& gad, const DirBinaryTree& t) {
  if (t.root != gad.super_root)
    throw std::invalid_argument("tree_to_coloring: tree not rooted at the super root");
  auto report = validate_dir_tree(gad.dag, t);
  if (!report.ok)
    throw std::invalid_argument("tree_to_coloring: invalid tree: " + report.reason);

  ExtractedColoring out;
  out.maximalized = maximalize_tree(gad.dag, t);

  int n = gad.source.n();
  std::vector<char> present(gad.dag.n(), 0);
  present[out.maximalized.root] = 1;
  for (auto& [u, v] : out.maximalized.arcs) {
    present[u] = 1;
    present[v] = 1;
  }

  out.sigma.color.assign(n, Color::Red);
  for (int i = 0; i < n; i++) {
    std::vector<int> missing;
    for (int color = 0; color < 3; color++)
      if (!present[gad.path_node[color][i][0]]) missing.push_back(color);
    if (missing.size() != 1) {
      out.ambiguous = true;
      out.sigma.color[i] = static_cast<Color>(missing.empty() ? 0 : missing[0]);
    } else {
      out.sigma.color[i] = static_cast<Color>(missing[0]);
    }
  }
  for (auto& [u, v] : gad.source.edges())
    if (out.sigma.color[u] == out.sigma.color[v]) out.monochromatic_edges++;
  return out;
}

}  // namespace mbt
