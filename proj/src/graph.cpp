#include "mbt/graph.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace mbt {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
  out_.assign(n_, {});
  in_.assign(n_, {});
  std::sort(arcs_.begin(), arcs_.end());
  for (size_t i = 0; i < arcs_.size(); i++) {
    auto [u, v] = arcs_[i];
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("Digraph: arc endpoint out of range");
    if (u == v) throw std::invalid_argument("Digraph: self-loop");
    if (i > 0 && arcs_[i] == arcs_[i - 1])
      throw std::invalid_argument("Digraph: duplicate arc");
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
}

bool Digraph::has_arc(int u, int v) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

std::vector<int> Digraph::topo_order() const {
  std::vector<int> indeg(n_, 0), order;
  for (auto& [u, v] : arcs_) indeg[v]++;
  std::vector<int> stack;
  for (int v = n_ - 1; v >= 0; v--)
    if (indeg[v] == 0) stack.push_back(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : out_[v])
      if (--indeg[w] == 0) stack.push_back(w);
  }
  if (static_cast<int>(order.size()) != n_) return {};
  return order;
}

bool Digraph::is_acyclic() const { return n_ == 0 || !topo_order().empty(); }

UGraph::UGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("UGraph: negative vertex count");
  adj_.assign(n_, {});
  for (auto& e : edges_) e = make_edge(e.first, e.second);
  std::sort(edges_.begin(), edges_.end());
  for (size_t i = 0; i < edges_.size(); i++) {
    auto [u, v] = edges_[i];
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("UGraph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("UGraph: self-loop");
    if (i > 0 && edges_[i] == edges_[i - 1])
      throw std::invalid_argument("UGraph: duplicate edge");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool UGraph::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

std::optional<std::vector<int>> UGraph::bipartition() const {
  std::vector<int> side(n_, -1);
  for (int s = 0; s < n_; s++) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    for (size_t h = 0; h < queue.size(); h++) {
      int v = queue[h];
      for (int w : adj_[v]) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::vector<std::vector<int>> UGraph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(n_, false);
  for (int s = 0; s < n_; s++) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = true;
    for (size_t h = 0; h < comp.size(); h++)
      for (int w : adj_[comp[h]])
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Digraph permutation_dag(const std::vector<long long>& values) {
  int n = static_cast<int>(values.size());
  std::set<long long> distinct(values.begin(), values.end());
  if (static_cast<int>(distinct.size()) != n)
    throw std::invalid_argument("permutation_dag: duplicate values");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; i++)
    for (int j = 0; j < i; j++)
      if (values[i] >= values[j]) arcs.emplace_back(i, j);
  return Digraph(n, std::move(arcs));
}

RootedRestriction rooted_from_unrooted_dag(const Digraph& g, int r) {
  if (r < 0 || r >= g.n())
    throw std::invalid_argument("rooted_from_unrooted_dag: root out of range");
  if (!g.is_acyclic())
    throw std::invalid_argument("rooted_from_unrooted_dag: graph is cyclic");
  std::vector<bool> reach(g.n(), false);
  reach[r] = true;
  std::vector<int> queue{r};
  for (size_t h = 0; h < queue.size(); h++)
    for (int u : g.in(queue[h]))
      if (!reach[u]) {
        reach[u] = true;
        queue.push_back(u);
      }
  RootedRestriction res;
  res.new_of.assign(g.n(), -1);
  for (int v = 0; v < g.n(); v++)
    if (reach[v]) {
      res.new_of[v] = static_cast<int>(res.orig_of.size());
      res.orig_of.push_back(v);
    }
  std::vector<Arc> arcs;
  for (auto& [u, v] : g.arcs())
    if (reach[u] && reach[v] && u != r) arcs.emplace_back(res.new_of[u], res.new_of[v]);
  res.sub = Digraph(static_cast<int>(res.orig_of.size()), std::move(arcs));
  res.root = res.new_of[r];
  return res;
}

namespace {

long long max_arcs(GraphKind kind, int n) {
  long long nn = n;
  switch (kind) {
    case GraphKind::Dir: return nn * (nn - 1);
    case GraphKind::Dag:
    case GraphKind::Undir: return nn * (nn - 1) / 2;
  }
  return 0;
}

}  // namespace

Digraph gen_random_digraph(GraphKind kind, int n, int m, uint64_t seed) {
  if (kind == GraphKind::Undir)
    throw std::invalid_argument("gen_random_digraph: undirected kind");
  if (m < 0 || m > max_arcs(kind, n))
    throw std::invalid_argument("gen_random_digraph: infeasible arc count");
  std::mt19937_64 rng(seed);
  std::vector<int> pos(n);
  for (int i = 0; i < n; i++) pos[i] = i;
  if (kind == GraphKind::Dag) std::shuffle(pos.begin(), pos.end(), rng);
  std::set<Arc> chosen;
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(chosen.size()) < m) {
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (kind == GraphKind::Dag && pos[u] < pos[v]) std::swap(u, v);
    chosen.insert({u, v});
  }
  return Digraph(n, std::vector<Arc>(chosen.begin(), chosen.end()));
}

UGraph gen_random_ugraph(int n, int m, uint64_t seed) {
  if (m < 0 || m > max_arcs(GraphKind::Undir, n))
    throw std::invalid_argument("gen_random_ugraph: infeasible edge count");
  std::mt19937_64 rng(seed);
  std::set<Edge> chosen;
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(chosen.size()) < m) {
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    chosen.insert(make_edge(u, v));
  }
  return UGraph(n, std::vector<Edge>(chosen.begin(), chosen.end()));
}

}  // namespace mbt
