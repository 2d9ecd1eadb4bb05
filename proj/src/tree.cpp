#include "mbt/tree.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace mbt {

std::vector<int> DirBinaryTree::vertices() const {
  std::set<int> vs;
  if (root >= 0) vs.insert(root);
  for (auto& [u, v] : arcs) {
    vs.insert(u);
    vs.insert(v);
  }
  return {vs.begin(), vs.end()};
}

std::vector<int> UndirBinaryTree::vertices() const {
  std::set<int> vs;
  if (solo) vs.insert(*solo);
  for (auto& [u, v] : edges) {
    vs.insert(u);
    vs.insert(v);
  }
  return {vs.begin(), vs.end()};
}

ValidityReport validate_dir_tree(const Digraph& g, const DirBinaryTree& t) {
  if (t.root < 0 || t.root >= g.n())
    return ValidityReport::structural("root id out of range");
  for (auto& [u, v] : t.arcs)
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
      return ValidityReport::structural("arc endpoint out of range");
  std::set<Arc> arc_set(t.arcs.begin(), t.arcs.end());
  if (arc_set.size() != t.arcs.size())
    return ValidityReport::structural("duplicate tree arc");
  for (auto& [u, v] : arc_set)
    if (!g.has_arc(u, v))
      return ValidityReport::invalid("tree arc not present in host graph");

  auto verts = t.vertices();
  std::map<int, int> out_deg, in_deg;
  std::map<int, int> parent;
  for (auto& [u, v] : arc_set) {
    out_deg[u]++;
    in_deg[v]++;
    parent[u] = v;
  }
  for (int v : verts) {
    if (v == t.root) {
      if (out_deg.count(v))
        return ValidityReport::invalid("root has an outgoing tree arc");
    } else if (out_deg[v] != 1) {
      return ValidityReport::invalid("non-root vertex without unique outgoing arc");
    }
    if (in_deg[v] > 2) return ValidityReport::invalid("in-degree exceeds 2");
  }
  // Parent chains must reach the root without revisiting a vertex.
  for (int v : verts) {
    std::set<int> seen;
    int cur = v;
    while (cur != t.root) {
      if (!seen.insert(cur).second)
        return ValidityReport::invalid("cycle in parent chain");
      auto it = parent.find(cur);
      if (it == parent.end())
        return ValidityReport::invalid("parent chain leaves the tree");
      cur = it->second;
    }
  }
  return ValidityReport::valid();
}

ValidityReport validate_undir_tree(const UGraph& g, const UndirBinaryTree& t,
                                   std::optional<int> root) {
  if (t.solo && (*t.solo < 0 || *t.solo >= g.n()))
    return ValidityReport::structural("solo vertex out of range");
  for (auto& [u, v] : t.edges)
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
      return ValidityReport::structural("edge endpoint out of range");
  if (root && (*root < 0 || *root >= g.n()))
    return ValidityReport::structural("root id out of range");

  std::set<Edge> edge_set;
  for (auto& [u, v] : t.edges) edge_set.insert(make_edge(u, v));
  if (edge_set.size() != t.edges.size())
    return ValidityReport::structural("duplicate tree edge");
  for (auto& [u, v] : edge_set)
    if (!g.has_edge(u, v))
      return ValidityReport::invalid("tree edge not present in host graph");

  auto verts = t.vertices();
  if (verts.empty()) return ValidityReport::invalid("empty tree");
  if (t.solo && !t.edges.empty())
    return ValidityReport::structural("solo marker on a tree with edges");

  std::map<int, std::vector<int>> adj;
  for (auto& [u, v] : edge_set) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (int v : verts)
    if (adj[v].size() > 3) return ValidityReport::invalid("degree exceeds 3");
  if (edge_set.size() != verts.size() - 1)
    return ValidityReport::invalid("edge count differs from |V|-1 (cycle or forest)");
  // Connectivity over the support.
  std::set<int> seen{verts[0]};
  std::vector<int> queue{verts[0]};
  for (size_t h = 0; h < queue.size(); h++)
    for (int w : adj[queue[h]])
      if (seen.insert(w).second) queue.push_back(w);
  if (seen.size() != verts.size()) return ValidityReport::invalid("tree is disconnected");
  if (root) {
    if (!seen.count(*root)) return ValidityReport::invalid("root not in tree");
    if (adj[*root].size() > 2) return ValidityReport::invalid("root degree exceeds 2");
  }
  return ValidityReport::valid();
}

DegreeCensus degree_census(const UndirBinaryTree& t) {
  auto verts = t.vertices();
  if (verts.empty()) throw std::invalid_argument("degree_census: empty tree");
  // Validate against the tree's own support.
  int max_id = verts.back();
  UGraph host(max_id + 1, t.edges);
  auto report = validate_undir_tree(host, t);
  if (!report.ok)
    throw std::invalid_argument("degree_census: invalid tree: " + report.reason);
  std::map<int, int> deg;
  for (auto& [u, v] : t.edges) {
    deg[u]++;
    deg[v]++;
  }
  DegreeCensus c;
  for (int v : verts) {
    switch (deg[v]) {
      case 0: c.i0++; break;
      case 1: c.i1++; break;
      case 2: c.i2++; break;
      default: c.i3++; break;
    }
  }
  return c;
}

std::string tree_to_json(const DirBinaryTree& t) {
  nlohmann::json j;
  j["root"] = t.root;
  auto arcs = t.arcs;
  std::sort(arcs.begin(), arcs.end());
  j["edges"] = nlohmann::json::array();
  for (auto& [u, v] : arcs) j["edges"].push_back({u, v});
  return j.dump();
}

std::string tree_to_json(const UndirBinaryTree& t, std::optional<int> root) {
  nlohmann::json j;
  if (root)
    j["root"] = *root;
  else if (t.solo)
    j["root"] = *t.solo;
  else
    j["root"] = nullptr;
  auto edges = t.edges;
  for (auto& e : edges) e = make_edge(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  j["edges"] = nlohmann::json::array();
  for (auto& [u, v] : edges) j["edges"].push_back({u, v});
  return j.dump();
}

DirBinaryTree dir_tree_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  DirBinaryTree t;
  if (j.at("root").is_null())
    throw std::invalid_argument("directed tree requires a root");
  t.root = j.at("root").get<int>();
  for (auto& e : j.at("edges")) t.arcs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return t;
}

UndirBinaryTree undir_tree_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  UndirBinaryTree t;
  for (auto& e : j.at("edges")) t.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  if (t.edges.empty() && !j.at("root").is_null()) t.solo = j.at("root").get<int>();
  return t;
}

}  // namespace mbt
