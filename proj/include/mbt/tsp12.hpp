#pragma once

#include <functional>

#include "mbt/tree.hpp"

namespace mbt {

// Complete graph with edge weights in {1,2}; only weight-2 pairs are
// stored, everything else weighs 1.
struct Tsp12Instance {
  int n = 0;
  std::vector<Edge> weight2;  // normalized, sorted

  static Tsp12Instance make(int n, std::vector<Edge> weight2_pairs);
  int weight(int u, int v) const;
  UGraph weight1_subgraph() const;  // S1
};

Tsp12Instance read_tsp12(const std::string& text);
std::string write_tsp12(const Tsp12Instance& inst);

// Post-order path merge: a binary tree with d degree-3 vertices turns
// into a path on the same vertex set of weight at most w(T) + d.
struct WeightedPath {
  std::vector<int> order;
  long long weight = 0;
};
WeightedPath tree_to_path(const Tsp12Instance& inst, const UndirBinaryTree& t);

struct Tsp12Solver {
  std::function<UndirBinaryTree(const UGraph&, double eps)> solve;
};

struct Tsp12Tour {
  std::vector<int> order;  // each vertex once; the tour closes back to order[0]
  long long weight = 0;
};

// Pendant-augment S1, solve with error eps/4, restrict, path-ify, then
// patch in missing vertices (increasing id) over weight-2 edges.
Tsp12Tour tsp12_tour(const Tsp12Instance& inst, const Tsp12Solver& solver, double epsilon);

}  // namespace mbt
