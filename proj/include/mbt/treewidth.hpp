#pragma once

#include <map>
#include <optional>

#include "mbt/tree.hpp"

namespace mbt {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;          // sorted vertex lists
  std::vector<std::pair<int, int>> tree_edges; // over bag indexes
  int width() const;
};

ValidityReport validate_td(const UGraph& g, const TreeDecomposition& td);

// Min-fill elimination ordering; validated before return.
TreeDecomposition heuristic_td(const UGraph& g);

// PACE .td format; 1-based ids, header "s td <#bags> <width+1> <n>".
TreeDecomposition read_td(const std::string& text);
std::string write_td(const TreeDecomposition& td, int n);

// Rooted normalized decomposition: leaf/introduce-vertex/drop/join nodes
// plus introduce-edge chains placed directly below the drop node of the
// endpoint dropped first. The s'-special form adds s' to every bag and
// introduces {s,s'} below the drop node of s.
struct NiceNode {
  enum Kind { Leaf, IntroVertex, Drop, Join, IntroEdge } kind = Leaf;
  int vertex = -1;                 // IntroVertex/Drop
  std::pair<int, int> edge{-1,-1}; // IntroEdge
  std::vector<int> children;
  std::vector<int> bag;            // sorted
};

struct SpecialTD {
  std::vector<NiceNode> nodes;  // topological: children precede parents
  int root = -1;
  int s_prime = -1;  // pendant root vertex id (== n of the base graph)
  UGraph host;       // G^s = base graph plus the pendant s'
};

SpecialTD to_special(const TreeDecomposition& td, const UGraph& g, int s);

struct TwOptResult {
  int edges = 0;
  UndirBinaryTree tree;
  long long max_states_per_node = 0;
};

// w^O(w) n dynamic program over (subset, partition, degree map) states of
// an s'-special decomposition. Value: edge count of the maximum binary
// tree rooted at s (degree of s at most 2).
TwOptResult solve_rooted_tw(const UGraph& g, int s, const TreeDecomposition& td);

// Unrooted wrapper: universal vertex plus a binary tree with |E(G)| edges
// guarding the second root slot.
TwOptResult solve_unrooted_tw(const UGraph& g, const TreeDecomposition& td);

}  // namespace mbt
