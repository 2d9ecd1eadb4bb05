#pragma once

#include <functional>

#include "mbt/tree.hpp"

namespace mbt {

// Undirected squaring: each edge replaced by an edge copy joined fully to
// both endpoints, plus two pendant copies joined fully to each vertex.
// |V| = n + (m + 2n) n.
struct UndirSquareMap {
  UGraph base;
  UGraph squared;

  int n_base = 0, m_base = 0;
  // copies are indexed 0..m-1 (edge copies, in base edge order) then
  // m..m+2n-1 (pendant copies, two per vertex).
  int copy_count() const { return m_base + 2 * n_base; }
  int edge_copy(int edge_idx) const { return edge_idx; }
  int pendant_copy(int v, int which) const { return m_base + 2 * v + which; }
  int flat(int copy, int inner) const { return n_base + copy * n_base + inner; }
  bool is_original(int id) const { return id < n_base; }
  int copy_of(int id) const { return (id - n_base) / n_base; }
  int inner_of(int id) const { return (id - n_base) % n_base; }
};

UndirSquareMap undir_square(const UGraph& g);

// Constructive half of the squared-optimum bound; size 2s^2 + 2s for
// trees with s >= 2 vertices. Singleton inputs degrade to 2s+1, flagged.
struct UndirBoostResultTree {
  UndirBinaryTree tree;
  bool degraded_singleton = false;
};
UndirBoostResultTree undir_boost_tree(const UndirSquareMap& sq, const UndirBinaryTree& t1);

// Projection on V(t2) ^ V(G): edge {u,v} survives when t2 routes the
// u-v path through the copy of that edge.
UndirBinaryTree undir_project(const UndirSquareMap& sq, const UndirBinaryTree& t2);

// The better of the projection and the largest copy-resident component of
// t2 minus the original vertices.
struct UndirExtractResult {
  UndirBinaryTree tree;
  long long forest_trees = 0;  // components of t2 - V(G), for the few-trees bound
};
UndirExtractResult undir_extract(const UndirSquareMap& sq, const UndirBinaryTree& t2);

struct UndirSolver {
  std::function<UndirBinaryTree(const UGraph&)> solve;
  double ratio = 1.0;
};

struct UndirBoostSolveResult {
  UndirBinaryTree tree;
  int requested_k = 0;
  int effective_k = 0;
};
UndirBoostSolveResult undir_boost_solve(const UGraph& g, const UndirSolver& solver,
                                        double epsilon, long long size_guard = 5000000);

// Pendant augmentation: one new degree-1 neighbor per vertex. Pendant of
// vertex v gets id n+v.
UGraph pendant_augment(const UGraph& g);
// Restriction of a tree in the augmented graph back to the base graph;
// also reports the number of degree-3 vertices in the restriction.
struct RestrictedTree {
  UndirBinaryTree tree;
  int degree3 = 0;
};
RestrictedTree restrict_to_base(const UGraph& base, const UndirBinaryTree& augmented_tree);

}  // namespace mbt
