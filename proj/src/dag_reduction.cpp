#include "mbt/dag_reduction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace mbt {

DirSquareMap dir_square(const Digraph& g, int r) {
  if (r < 0 || r >= g.n()) throw std::invalid_argument("dir_square: root out of range");
  DirSquareMap sq;
  sq.base = g;
  sq.base_root = r;
  int n = g.n();
  sq.copy_width = n + 1;
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(n) * (g.m() + n) + g.m());
  for (int u = 0; u < n; u++) {
    for (auto& [a, b] : g.arcs()) arcs.emplace_back(sq.flat(u, a), sq.flat(u, b));
    for (int v = 0; v < n; v++) arcs.emplace_back(sq.source_of_copy(u), sq.flat(u, v));
  }
  for (auto& [u, v] : g.arcs())
    arcs.emplace_back(sq.root_of_copy(u), sq.source_of_copy(v));
  sq.squared = Digraph(n * (n + 1), std::move(arcs));
  sq.root = sq.root_of_copy(r);
  return sq;
}

DirBinaryTree dir_boost_tree(const DirSquareMap& sq, const DirBinaryTree& t1) {
  auto report = validate_dir_tree(sq.base, t1);
  if (!report.ok)
    throw std::invalid_argument("dir_boost_tree: invalid input tree: " + report.reason);
  if (t1.root != sq.base_root)
    throw std::invalid_argument("dir_boost_tree: tree not rooted at the squaring root");

  auto verts = t1.vertices();
  // Smallest-id leaf of t1 (no incoming tree arc).
  std::set<int> heads;
  for (auto& [u, v] : t1.arcs) heads.insert(v);
  int leaf = -1;
  for (int v : verts)
    if (!heads.count(v)) {
      leaf = v;
      break;
    }

  DirBinaryTree t2;
  t2.root = sq.root;
  for (int v : verts) {
    for (auto& [a, b] : t1.arcs) t2.arcs.emplace_back(sq.flat(v, a), sq.flat(v, b));
    t2.arcs.emplace_back(sq.source_of_copy(v), sq.flat(v, leaf));
  }
  for (auto& [u, v] : t1.arcs)
    t2.arcs.emplace_back(sq.root_of_copy(u), sq.source_of_copy(v));
  return t2;
}

DirBinaryTree dir_extract(const DirSquareMap& sq, const DirBinaryTree& t2) {
  if (t2.root != sq.root)
    throw std::invalid_argument("dir_extract: tree not rooted at r_r");
  auto report = validate_dir_tree(sq.squared, t2);
  if (!report.ok)
    throw std::invalid_argument("dir_extract: invalid input tree: " + report.reason);

  auto verts = t2.vertices();
  std::set<int> vert_set(verts.begin(), verts.end());

  // Projection along cross arcs.
  DirBinaryTree proj;
  proj.root = sq.base_root;
  std::set<int> used_copies;
  for (int f : verts) used_copies.insert(sq.copy_of(f));
  std::set<int> proj_verts;
  for (int u : used_copies)
    if (vert_set.count(sq.root_of_copy(u))) proj_verts.insert(u);
  for (auto& [a, b] : t2.arcs)
    if (sq.is_source(b) && sq.inner_of(a) == sq.base_root && sq.copy_of(a) != sq.copy_of(b))
      proj.arcs.emplace_back(sq.copy_of(a), sq.copy_of(b));
  // r_r is in t2, so the projection always contains the base root.

  // Per-copy restrictions minus the copy source.
  DirBinaryTree best_copy_tree;
  int best_copy_size = 0;
  for (int u : used_copies) {
    std::vector<Arc> arcs;
    std::set<int> support;
    for (auto& [a, b] : t2.arcs) {
      if (sq.copy_of(a) != u || sq.copy_of(b) != u) continue;
      if (sq.is_source(a) || sq.is_source(b)) continue;
      arcs.emplace_back(sq.inner_of(a), sq.inner_of(b));
      support.insert(sq.inner_of(a));
      support.insert(sq.inner_of(b));
    }
    if (vert_set.count(sq.root_of_copy(u))) support.insert(sq.base_root);
    int size = static_cast<int>(support.size());
    if (size > best_copy_size) {
      best_copy_size = size;
      best_copy_tree.root = sq.base_root;
      best_copy_tree.arcs = std::move(arcs);
    }
  }

  int proj_size = static_cast<int>(proj_verts.size());
  DirBinaryTree result = proj_size >= best_copy_size ? proj : best_copy_tree;
  auto out_report = validate_dir_tree(sq.base, result);
  if (!out_report.ok)
    throw std::logic_error("dir_extract: produced invalid tree: " + out_report.reason);
  return result;
}

int boost_levels(double alpha, double epsilon) {
  if (epsilon <= 0 || epsilon >= 1)
    throw std::invalid_argument("boost_levels: epsilon must be in (0,1)");
  if (alpha <= 0 || alpha > 1)
    throw std::invalid_argument("boost_levels: alpha must be in (0,1]");
  if (alpha >= 1) return 0;  // already exact: boosting degenerates
  double ratio = std::log2(alpha) / std::log2(1 - epsilon);
  return 1 + static_cast<int>(std::ceil(std::log2(ratio)));
}

DirBoostResult dir_boost_solve(const Digraph& g, int r, const DirSolver& solver,
                               double epsilon, long long size_guard) {
  DirBoostResult out;
  out.requested_k = boost_levels(solver.ratio, epsilon);

  std::vector<DirSquareMap> stack;
  Digraph cur = g;
  int cur_root = r;
  for (int level = 0; level < out.requested_k; level++) {
    long long n = cur.n();
    if (n * (n + 1) > size_guard) break;
    stack.push_back(dir_square(cur, cur_root));
    cur = stack.back().squared;
    cur_root = stack.back().root;
  }
  out.effective_k = static_cast<int>(stack.size());

  DirBinaryTree t = solver.solve(cur, cur_root);
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) t = dir_extract(*it, t);
  out.tree = t;
  return out;
}

}  // namespace mbt
