#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mbt/graph.hpp"

namespace mbt {

struct ValidityReport {
  bool ok = true;
  bool structural_error = false;  // out-of-range ids etc., not an invariant failure
  std::string reason;

  static ValidityReport valid() { return {}; }
  static ValidityReport invalid(std::string why) { return {false, false, std::move(why)}; }
  static ValidityReport structural(std::string why) { return {false, true, std::move(why)}; }
};

// r-rooted binary tree certificate inside a host digraph: every non-root
// vertex has exactly one outgoing tree arc, in-degrees at most 2, all
// parent chains end at the root.
struct DirBinaryTree {
  int root = -1;
  std::vector<Arc> arcs;

  std::vector<int> vertices() const;  // sorted support (root plus arc endpoints)
  int size() const { return static_cast<int>(vertices().size()); }
};

// Binary tree certificate inside a host undirected graph: connected,
// acyclic, max degree 3. A single vertex is represented with empty edges
// and solo set.
struct UndirBinaryTree {
  std::vector<Edge> edges;
  std::optional<int> solo;

  std::vector<int> vertices() const;
  int size() const { return static_cast<int>(vertices().size()); }
};

struct DegreeCensus {
  long long i0 = 0, i1 = 0, i2 = 0, i3 = 0;
  long long total() const { return i0 + i1 + i2 + i3; }
};

ValidityReport validate_dir_tree(const Digraph& g, const DirBinaryTree& t);
ValidityReport validate_undir_tree(const UGraph& g, const UndirBinaryTree& t,
                                   std::optional<int> root = std::nullopt);

// Counts tree vertices by degree; rejects certificates that are not
// binary trees on their own support. The identity
// 3*i0 + 2*i1 + i2 == |V| + 2 holds for every nonempty binary tree.
DegreeCensus degree_census(const UndirBinaryTree& t);

// JSON forms used by the CLI: {"root": id|null, "edges": [[u,v],...]}.
std::string tree_to_json(const DirBinaryTree& t);
std::string tree_to_json(const UndirBinaryTree& t, std::optional<int> root = std::nullopt);
DirBinaryTree dir_tree_from_json(const std::string& text);
UndirBinaryTree undir_tree_from_json(const std::string& text);

}  // namespace mbt
