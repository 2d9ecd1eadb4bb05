#pragma once

#include <optional>

#include "mbt/tree.hpp"

namespace mbt {

// Per-side vertex orderings of a bipartite graph; valid ("strong") when
// every pair of cross edges forces the parallel pair to exist.
struct StrongOrdering {
  std::vector<int> s_order;  // vertex ids, ascending in the ordering
  std::vector<int> t_order;
};

struct OrderingCheck {
  bool ok = true;
  std::string violation;  // first offending quadruple when not ok
};

OrderingCheck validate_strong_ordering(const UGraph& g, const StrongOrdering& ord);

// Heuristic (iterated neighbor-average sorting) gated by validation, with
// a complete fallback that enumerates the smaller side (the other side's
// order is forced up to twins by the interval property). The solver never
// trusts an unvalidated ordering. exhaustive_cap bounds the enumerated
// side.
std::optional<StrongOrdering> find_strong_ordering(const UGraph& g,
                                                   int exhaustive_cap = 8);

// Instance generator from monotone neighborhood intervals [a_i,b_i] over
// the T side (0-based, nondecreasing, covering T).
struct BipermInstance {
  UGraph graph;
  StrongOrdering ordering;
};
BipermInstance gen_biperm(const std::vector<std::pair<int, int>>& intervals, int t_count);
BipermInstance gen_random_biperm(int p, int q, uint64_t seed, bool connected = true);

struct BipermResult {
  int edges = 0;
  UndirBinaryTree tree;
  std::vector<StrongOrdering> component_orderings;
};

// O(n^3) dynamic program over suffix pairs of a strong ordering, solved
// per connected component.
BipermResult solve_biperm(const UGraph& g);

}  // namespace mbt
