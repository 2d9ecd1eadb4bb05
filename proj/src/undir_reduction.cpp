#include "mbt/undir_reduction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace mbt {

UndirSquareMap undir_square(const UGraph& g) {
  UndirSquareMap sq;
  sq.base = g;
  sq.n_base = g.n();
  sq.m_base = g.m();
  int n = g.n(), m = g.m();
  std::vector<Edge> edges;
  auto add_copy_internals = [&](int c) {
    for (auto& [a, b] : g.edges()) edges.push_back({sq.flat(c, a), sq.flat(c, b)});
  };
  for (int e = 0; e < m; e++) {
    int c = sq.edge_copy(e);
    add_copy_internals(c);
    auto [u, v] = g.edges()[e];
    for (int w = 0; w < n; w++) {
      edges.push_back(make_edge(u, sq.flat(c, w)));
      edges.push_back(make_edge(v, sq.flat(c, w)));
    }
  }
  for (int v = 0; v < n; v++)
    for (int which = 0; which < 2; which++) {
      int c = sq.pendant_copy(v, which);
      add_copy_internals(c);
      for (int w = 0; w < n; w++) edges.push_back(make_edge(v, sq.flat(c, w)));
    }
  sq.squared = UGraph(n + (m + 2 * n) * n, std::move(edges));
  return sq;
}

namespace {

int edge_index(const UGraph& g, int u, int v) {
  auto e = make_edge(u, v);
  auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
  if (it == g.edges().end() || *it != e)
    throw std::logic_error("edge_index: edge not in graph");
  return static_cast<int>(it - g.edges().begin());
}

}  // namespace

UndirBoostResultTree undir_boost_tree(const UndirSquareMap& sq, const UndirBinaryTree& t1) {
  auto report = validate_undir_tree(sq.base, t1);
  if (!report.ok)
    throw std::invalid_argument("undir_boost_tree: invalid input tree: " + report.reason);

  UndirBoostResultTree out;
  auto verts = t1.vertices();
  int s = static_cast<int>(verts.size());

  if (s == 1) {
    int v = verts[0];
    out.degraded_singleton = true;
    for (int which = 0; which < 2; which++)
      out.tree.edges.push_back(make_edge(v, sq.flat(sq.pendant_copy(v, which), v)));
    return out;
  }

  std::map<int, int> deg;
  for (auto& [u, v] : t1.edges) {
    deg[u]++;
    deg[v]++;
  }
  int leaf = -1;
  for (int v : verts)
    if (deg[v] == 1) {
      leaf = v;
      break;
    }

  auto plant = [&](int c, int attach_to, bool both, int second_attach) {
    for (auto& [a, b] : t1.edges)
      out.tree.edges.push_back({sq.flat(c, a), sq.flat(c, b)});
    out.tree.edges.push_back(make_edge(attach_to, sq.flat(c, leaf)));
    if (both) out.tree.edges.push_back(make_edge(second_attach, sq.flat(c, leaf)));
  };

  for (auto& [u, v] : t1.edges)
    plant(sq.edge_copy(edge_index(sq.base, u, v)), u, true, v);
  for (int v : verts) {
    if (deg[v] == 1) {
      plant(sq.pendant_copy(v, 0), v, false, -1);
      plant(sq.pendant_copy(v, 1), v, false, -1);
    } else if (deg[v] == 2) {
      plant(sq.pendant_copy(v, 0), v, false, -1);
    }
  }
  return out;
}

namespace {

// Component labels of t2 restricted to each copy (original vertices cut
// out); label by copy-resident vertex id.
struct CopyComponents {
  std::map<int, int> comp_of;              // copy vertex -> component id
  std::vector<std::vector<int>> members;   // component id -> vertices
  std::vector<int> comp_copy;              // component id -> copy index
};

CopyComponents copy_components(const UndirSquareMap& sq, const UndirBinaryTree& t2) {
  std::map<int, std::vector<int>> adj;
  for (auto& [a, b] : t2.edges) {
    if (sq.is_original(a) || sq.is_original(b)) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<int> copy_verts;
  for (auto& [a, b] : t2.edges) {
    if (!sq.is_original(a)) copy_verts.insert(a);
    if (!sq.is_original(b)) copy_verts.insert(b);
  }
  if (t2.solo && !sq.is_original(*t2.solo)) copy_verts.insert(*t2.solo);

  CopyComponents cc;
  for (int start : copy_verts) {
    if (cc.comp_of.count(start)) continue;
    int id = static_cast<int>(cc.members.size());
    cc.members.push_back({});
    cc.comp_copy.push_back(sq.copy_of(start));
    std::vector<int> queue{start};
    cc.comp_of[start] = id;
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      cc.members[id].push_back(x);
      for (int y : adj[x])
        if (!cc.comp_of.count(y)) {
          cc.comp_of[y] = id;
          queue.push_back(y);
        }
    }
  }
  return cc;
}

}  // namespace

UndirBinaryTree undir_project(const UndirSquareMap& sq, const UndirBinaryTree& t2) {
  auto report = validate_undir_tree(sq.squared, t2);
  if (!report.ok)
    throw std::invalid_argument("undir_project: invalid input tree: " + report.reason);

  std::set<int> originals;
  for (int v : t2.vertices())
    if (sq.is_original(v)) originals.insert(v);

  UndirBinaryTree proj;
  if (originals.empty()) return proj;  // empty projection, caller handles copies

  auto cc = copy_components(sq, t2);
  // component -> originals attached through t2 edges
  std::map<int, std::set<int>> attached;
  for (auto& [a, b] : t2.edges) {
    int orig = -1, copyv = -1;
    if (sq.is_original(a) && !sq.is_original(b)) {
      orig = a;
      copyv = b;
    } else if (sq.is_original(b) && !sq.is_original(a)) {
      orig = b;
      copyv = a;
    } else {
      continue;
    }
    attached[cc.comp_of.at(copyv)].insert(orig);
  }

  std::set<Edge> proj_edges;
  for (auto& [comp, origs] : attached) {
    if (cc.comp_copy[comp] >= sq.m_base) continue;  // pendant copies never bridge
    auto [u, v] = sq.base.edges()[cc.comp_copy[comp]];
    if (origs.count(u) && origs.count(v)) proj_edges.insert(make_edge(u, v));
  }
  proj.edges.assign(proj_edges.begin(), proj_edges.end());
  if (proj.edges.empty()) proj.solo = *originals.begin();
  return proj;
}

UndirExtractResult undir_extract(const UndirSquareMap& sq, const UndirBinaryTree& t2) {
  UndirExtractResult out;
  UndirBinaryTree proj = undir_project(sq, t2);

  auto cc = copy_components(sq, t2);
  out.forest_trees = static_cast<long long>(cc.members.size());

  UndirBinaryTree best_copy_tree;
  size_t best = 0;
  for (size_t id = 0; id < cc.members.size(); id++) {
    if (cc.members[id].size() <= best) continue;
    best = cc.members[id].size();
    best_copy_tree = UndirBinaryTree{};
    if (cc.members[id].size() == 1) {
      best_copy_tree.solo = sq.inner_of(cc.members[id][0]);
    } else {
      std::set<int> in_comp(cc.members[id].begin(), cc.members[id].end());
      for (auto& [a, b] : t2.edges)
        if (in_comp.count(a) && in_comp.count(b))
          best_copy_tree.edges.push_back(
              make_edge(sq.inner_of(a), sq.inner_of(b)));
    }
  }

  size_t proj_size = proj.vertices().size();
  out.tree = proj_size >= best ? proj : best_copy_tree;
  return out;
}

UndirBoostSolveResult undir_boost_solve(const UGraph& g, const UndirSolver& solver,
                                        double epsilon, long long size_guard) {
  UndirBoostSolveResult out;
  // same level formula as the directed booster
  if (epsilon <= 0 || epsilon >= 1)
    throw std::invalid_argument("undir_boost_solve: epsilon must be in (0,1)");
  if (solver.ratio <= 0 || solver.ratio > 1)
    throw std::invalid_argument("undir_boost_solve: ratio must be in (0,1]");
  if (solver.ratio >= 1) {
    out.requested_k = 0;
  } else {
    double ratio = std::log2(solver.ratio) / std::log2(1 - epsilon);
    out.requested_k = 1 + static_cast<int>(std::ceil(std::log2(ratio)));
  }

  std::vector<UndirSquareMap> stack;
  UGraph cur = g;
  for (int level = 0; level < out.requested_k; level++) {
    long long n = cur.n(), m = cur.m();
    if (n + (m + 2 * n) * n > size_guard) break;
    stack.push_back(undir_square(cur));
    cur = stack.back().squared;
  }
  out.effective_k = static_cast<int>(stack.size());

  UndirBinaryTree t = solver.solve(cur);
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) t = undir_extract(*it, t).tree;
  out.tree = t;
  return out;
}

UGraph pendant_augment(const UGraph& g) {
  int n = g.n();
  std::vector<Edge> edges = g.edges();
  for (int v = 0; v < n; v++) edges.push_back({v, n + v});
  return UGraph(2 * n, std::move(edges));
}

RestrictedTree restrict_to_base(const UGraph& base, const UndirBinaryTree& augmented_tree) {
  int n = base.n();
  RestrictedTree out;
  std::map<int, int> deg;
  for (auto& [u, v] : augmented_tree.edges) {
    if (u >= n || v >= n) continue;
    out.tree.edges.push_back({u, v});
    deg[u]++;
    deg[v]++;
  }
  if (out.tree.edges.empty()) {
    for (int v : augmented_tree.vertices())
      if (v < n) {
        out.tree.solo = v;
        break;
      }
  }
  for (auto& [v, d] : deg)
    if (d == 3) out.degree3++;
  return out;
}

}  // namespace mbt
