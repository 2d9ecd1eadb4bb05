#pragma once

#include <optional>

#include "mbt/tree.hpp"

namespace mbt {

// Exhaustive exact solvers: trustworthy at tiny scale, used as ground
// truth by every other solver and by the reduction property tests.
// Witness ties are broken deterministically (subsets enumerated in
// decreasing size, lexicographic within a size; edge choices explored in
// include-first lexicographic order).

struct DirOptResult {
  int size = 0;
  DirBinaryTree tree;
};

struct UndirOptResult {
  int size = 0;
  UndirBinaryTree tree;
};

struct OracleCaps {
  int undirected = 16;
  int dag = 20;
  int directed = 12;
};

// Maximum connected acyclic subgraph with max degree <= degree_bound.
UndirOptResult brute_mbt_undirected(const UGraph& g, int degree_bound = 3,
                                    int cap = 16);

// True iff an r-rooted binary tree spanning exactly s exists in the DAG;
// solved as a degree-constrained assignment (each non-root vertex picks
// one out-neighbor in s, targets accept at most 2). On a DAG any such
// assignment is automatically a tree.
struct SubsetFeasibility {
  bool feasible = false;
  DirBinaryTree tree;
};
SubsetFeasibility dag_subset_feasible(const Digraph& g, const std::vector<int>& s, int r);

DirOptResult brute_mbt_dag(const Digraph& g, int r, int cap = 20);
DirOptResult brute_mbt_directed(const Digraph& g, int r, int cap = 12);

// Unrooted variant on DAGs: best over all roots.
DirOptResult brute_mbt_dag_unrooted(const Digraph& g, int cap = 20);

}  // namespace mbt
