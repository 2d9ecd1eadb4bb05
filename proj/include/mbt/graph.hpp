#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mbt {

using Arc = std::pair<int, int>;   // (u,v): arc u -> v
using Edge = std::pair<int, int>;  // normalized u < v

// Directed graph with dense 0-based vertex ids.
// No self-loops, no parallel arcs; adjacency indexes are built once at
// construction and the object is immutable afterwards.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int n, std::vector<Arc> arcs);

  int n() const { return n_; }
  int m() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }
  bool has_arc(int u, int v) const;

  bool is_acyclic() const;
  // Topological order (sources first); empty if cyclic.
  std::vector<int> topo_order() const;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// Undirected simple graph, edges stored normalized (u < v).
class UGraph {
 public:
  UGraph() = default;
  UGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  // 2-coloring sides if bipartite (per component, side of the smallest
  // vertex id is 0); nullopt otherwise.
  std::optional<std::vector<int>> bipartition() const;
  std::vector<std::vector<int>> components() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

inline Edge make_edge(int u, int v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Permutation DAG of a sequence of pairwise distinct values: vertex i per
// position, arc (i,j) whenever i > j and values[i] >= values[j].
Digraph permutation_dag(const std::vector<long long>& values);

// Rooted restriction of an unrooted DAG instance: keep only vertices that
// can reach r, drop r's outgoing arcs. Vertex ids are compacted.
struct RootedRestriction {
  Digraph sub;
  std::vector<int> orig_of;  // new id -> original id
  std::vector<int> new_of;   // original id -> new id, -1 if dropped
  int root = -1;             // new id of r
};
RootedRestriction rooted_from_unrooted_dag(const Digraph& g, int r);

// Random instance generation, deterministic under (kind,n,m,seed).
enum class GraphKind { Dir, Dag, Undir };
Digraph gen_random_digraph(GraphKind kind, int n, int m, uint64_t seed);
UGraph gen_random_ugraph(int n, int m, uint64_t seed);

}  // namespace mbt
