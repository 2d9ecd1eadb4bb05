#pragma once

#include <functional>

#include "mbt/tree.hpp"

namespace mbt {

// Directed squaring: one copy of G' (G plus a universal source) per
// vertex of G, copies chained by arcs (r_u, s_v) for every (u,v) in E(G).
// |V(G^2)| = N(N+1); acyclicity is preserved.
struct DirSquareMap {
  Digraph base;
  Digraph squared;
  int root = -1;  // flat id of r_r
  int base_root = -1;

  int copy_width = 0;  // N+1 inner slots per copy
  int flat(int copy, int inner) const { return copy * copy_width + inner; }
  int copy_of(int flat_id) const { return flat_id / copy_width; }
  int inner_of(int flat_id) const { return flat_id % copy_width; }
  int root_of_copy(int u) const { return flat(u, base_root); }
  int source_of_copy(int u) const { return flat(u, copy_width - 1); }
  bool is_source(int flat_id) const { return inner_of(flat_id) == copy_width - 1; }
};

DirSquareMap dir_square(const Digraph& g, int r);

// Constructive half of the squared-optimum bound: plants t1 in every used
// copy (source below the smallest-id leaf) and chains the copies along
// t1's arcs. Output size is exactly |t1| * (|t1|+1).
DirBinaryTree dir_boost_tree(const DirSquareMap& sq, const DirBinaryTree& t1);

// Extraction: the better of the cross-arc projection and the largest
// single-copy restriction (minus its source vertex).
DirBinaryTree dir_extract(const DirSquareMap& sq, const DirBinaryTree& t2);

// Rooted-MBT solver plugged into the boosting loop.
struct DirSolver {
  std::function<DirBinaryTree(const Digraph&, int)> solve;
  double ratio = 1.0;  // declared approximation factor alpha in (0,1]
};

struct DirBoostResult {
  DirBinaryTree tree;
  int requested_k = 0;
  int effective_k = 0;  // levels actually materialized under the size guard
};

// k = 1 + ceil(log2(log2(alpha) / log2(1-eps))) squarings, solve on top,
// extract back down. Graphs above the size guard are not materialized.
DirBoostResult dir_boost_solve(const Digraph& g, int r, const DirSolver& solver,
                               double epsilon, long long size_guard = 5000000);

int boost_levels(double alpha, double epsilon);

}  // namespace mbt
