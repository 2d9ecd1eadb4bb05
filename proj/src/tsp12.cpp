#include "mbt/tsp12.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mbt/graph_io.hpp"
#include "mbt/undir_reduction.hpp"

namespace mbt {

Tsp12Instance Tsp12Instance::make(int n, std::vector<Edge> weight2_pairs) {
  if (n < 3) throw std::invalid_argument("Tsp12Instance: need at least 3 vertices");
  Tsp12Instance inst;
  inst.n = n;
  for (auto& e : weight2_pairs) e = make_edge(e.first, e.second);
  std::sort(weight2_pairs.begin(), weight2_pairs.end());
  weight2_pairs.erase(std::unique(weight2_pairs.begin(), weight2_pairs.end()),
                      weight2_pairs.end());
  for (auto& [u, v] : weight2_pairs) {
    if (u < 0 || v >= n || u == v)
      throw std::invalid_argument("Tsp12Instance: bad weight-2 pair");
  }
  inst.weight2 = std::move(weight2_pairs);
  return inst;
}

int Tsp12Instance::weight(int u, int v) const {
  if (u == v) throw std::invalid_argument("weight: u == v");
  return std::binary_search(weight2.begin(), weight2.end(), make_edge(u, v)) ? 2 : 1;
}

UGraph Tsp12Instance::weight1_subgraph() const {
  std::vector<Edge> edges;
  std::set<Edge> w2(weight2.begin(), weight2.end());
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      if (!w2.count({u, v})) edges.push_back({u, v});
  return UGraph(n, std::move(edges));
}

Tsp12Instance read_tsp12(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  int n;
  if (!(in >> tag >> n) || tag != "tsp12")
    throw std::invalid_argument("read_tsp12: expected header 'tsp12 <n>'");
  std::vector<Edge> pairs;
  int u, v, w;
  while (in >> u >> v >> w) {
    if (w != 2) throw std::invalid_argument("read_tsp12: only weight-2 pairs are listed");
    pairs.push_back(make_edge(u, v));
  }
  return Tsp12Instance::make(n, std::move(pairs));
}

std::string write_tsp12(const Tsp12Instance& inst) {
  std::ostringstream out;
  out << "tsp12 " << inst.n << "\n";
  for (auto& [u, v] : inst.weight2) out << u << " " << v << " 2\n";
  return out.str();
}

WeightedPath tree_to_path(const Tsp12Instance& inst, const UndirBinaryTree& t) {
  auto verts = t.vertices();
  if (verts.empty()) throw std::invalid_argument("tree_to_path: empty tree");
  for (int v : verts)
    if (v < 0 || v >= inst.n)
      throw std::invalid_argument("tree_to_path: vertex outside the instance");

  std::map<int, std::vector<int>> adj;
  for (auto& [u, v] : t.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

  // smallest-id vertex of degree <= 2 becomes the root
  int root = -1;
  for (int v : verts)
    if (adj[v].size() <= 2) {
      root = v;
      break;
    }
  if (root < 0) throw std::logic_error("tree_to_path: no vertex of degree <= 2");

  WeightedPath out;
  for (auto& [u, v] : t.edges) out.weight += inst.weight(u, v);

  // path_of(v) returns the subtree's vertices as a path starting at v;
  // two-child vertices merge the child paths end-to-start.
  auto path_of = [&](auto&& self, int v, int parent) -> std::vector<int> {
    std::vector<int> kids;
    for (int w : adj[v])
      if (w != parent) kids.push_back(w);
    if (kids.empty()) return {v};
    if (kids.size() == 1) {
      auto p = self(self, kids[0], v);
      p.insert(p.begin(), v);
      return p;
    }
    auto p1 = self(self, kids[0], v);
    auto p2 = self(self, kids[1], v);
    // drop tree edge {v, kids[1]}, add {end of p1, start of p2}
    out.weight += inst.weight(p1.back(), p2.front()) - inst.weight(v, kids[1]);
    std::vector<int> merged{v};
    merged.insert(merged.end(), p1.begin(), p1.end());
    merged.insert(merged.end(), p2.begin(), p2.end());
    return merged;
  };

  std::vector<int> kids;
  for (int w : adj[root]) kids.push_back(w);
  if (kids.size() <= 1) {
    out.order = path_of(path_of, root, -1);
  } else {
    // root of degree 2 sits in the middle, no extra weight
    auto p1 = path_of(path_of, kids[0], root);
    auto p2 = path_of(path_of, kids[1], root);
    std::reverse(p1.begin(), p1.end());
    out.order = std::move(p1);
    out.order.push_back(root);
    out.order.insert(out.order.end(), p2.begin(), p2.end());
  }
  if (out.order.size() != verts.size())
    throw std::logic_error("tree_to_path: path misses vertices");
  return out;
}

Tsp12Tour tsp12_tour(const Tsp12Instance& inst, const Tsp12Solver& solver,
                     double epsilon) {
  UGraph s1 = inst.weight1_subgraph();
  UGraph augmented = pendant_augment(s1);
  UndirBinaryTree t_aug = solver.solve(augmented, epsilon / 4);
  auto restricted = restrict_to_base(s1, t_aug);
  if (restricted.tree.vertices().empty())
    throw std::runtime_error("tsp12_tour: solver returned a tree without base vertices");

  WeightedPath path = tree_to_path(inst, restricted.tree);

  Tsp12Tour tour;
  tour.order = path.order;
  tour.weight = path.weight;
  std::set<int> present(tour.order.begin(), tour.order.end());
  for (int v = 0; v < inst.n; v++) {
    if (present.count(v)) continue;
    tour.weight += inst.weight(tour.order.back(), v);
    tour.order.push_back(v);
    present.insert(v);
  }
  tour.weight += inst.weight(tour.order.back(), tour.order.front());

  if (static_cast<int>(tour.order.size()) != inst.n)
    throw std::logic_error("tsp12_tour: tour misses vertices");
  std::set<int> uniq(tour.order.begin(), tour.order.end());
  if (static_cast<int>(uniq.size()) != inst.n)
    throw std::logic_error("tsp12_tour: repeated vertex in tour");
  return tour;
}

}  // namespace mbt
