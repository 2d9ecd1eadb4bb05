#pragma once

#include <array>

#include "mbt/tree.hpp"

namespace mbt {

enum class Color { Red = 0, Green = 1, Blue = 2 };

struct Coloring {
  std::vector<Color> color;  // per vertex of the source graph
};

// DAG built from an undirected graph for the coloring reduction:
// a binary tree B over the vertex leaves under super root a, three
// length-n paths per vertex feeding its leaf, and three t-node trees per
// edge whose roots attach to free path slots at both endpoints.
// t = ceil((2 eps n(n+1) + 4n^2) / (eps m)), N = 3mt + 3n^2 + 2n.
struct ColorGadget {
  UGraph source;
  Digraph dag;
  long long eps_num = 1, eps_den = 1;
  long long t = 0;
  long long total = 0;  // N

  int super_root = -1;          // a
  std::vector<int> leaf;        // v_i per source vertex
  // path_node[c][i][p] = p-th node (0-based; p=0 is the head feeding v_i)
  std::array<std::vector<std::vector<int>>, 3> path_node;
  // gadget_root[c][e] = a_e^C; gadget trees occupy contiguous id blocks
  std::array<std::vector<int>, 3> gadget_root;
  std::array<std::vector<std::pair<int, int>>, 3> slot;  // (node in side-i path, node in side-j path)
};

ColorGadget build_color_gadget(const UGraph& g, long long eps_num, long long eps_den);

// a-rooted tree of size exactly N - n^2 realizing a proper coloring
// (drops the matching path per vertex).
DirBinaryTree coloring_to_tree(const ColorGadget& gad, const Coloring& sigma);

struct ExtractedColoring {
  Coloring sigma;
  long long monochromatic_edges = 0;
  bool ambiguous = false;  // some vertex had several missing heads after maximalization
  DirBinaryTree maximalized;
};

// Greedy maximalization (arc-id order) followed by reading each vertex's
// color off the unique missing first path node.
ExtractedColoring tree_to_coloring(const ColorGadget& gad, const DirBinaryTree& t);

// Greedy maximalization alone, exposed for maximality checks.
DirBinaryTree maximalize_tree(const Digraph& g, const DirBinaryTree& t);

}  // namespace mbt
