#include "mbt/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbt {

namespace {

// Combinations of {0..n-1} of a given size in lexicographic order.
struct CombinationIter {
  int n, k;
  std::vector<int> cur;
  bool done = false;

  CombinationIter(int n_, int k_) : n(n_), k(k_) {
    if (k > n) {
      done = true;
      return;
    }
    cur.resize(k);
    for (int i = 0; i < k; i++) cur[i] = i;
  }

  bool advance() {
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) i--;
    if (i < 0) {
      done = true;
      return false;
    }
    cur[i]++;
    for (int j = i + 1; j < k; j++) cur[j] = cur[j - 1] + 1;
    return true;
  }
};

struct SpanningSearch {
  const std::vector<Edge>& edges;
  int need;  // edges still to pick
  std::vector<int> deg;
  std::vector<int> uf;
  int bound;

  int find(int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); }

  bool run(size_t idx, std::vector<Edge>& chosen) {
    if (need == 0) return true;
    if (edges.size() - idx < static_cast<size_t>(need)) return false;
    auto [u, v] = edges[idx];
    int ru = find(u), rv = find(v);
    if (ru != rv && deg[u] < bound && deg[v] < bound) {
      auto saved_uf = uf;
      uf[ru] = rv;
      deg[u]++;
      deg[v]++;
      need--;
      chosen.push_back(edges[idx]);
      if (run(idx + 1, chosen)) return true;
      chosen.pop_back();
      need++;
      deg[u]--;
      deg[v]--;
      uf = saved_uf;
    }
    return run(idx + 1, chosen);
  }
};

// Degree-bounded spanning tree of the induced subgraph on `verts`,
// include-first over lexicographically sorted edges.
std::optional<std::vector<Edge>> spanning_bounded_tree(const UGraph& g,
                                                       const std::vector<int>& verts,
                                                       int bound) {
  if (verts.size() == 1) return std::vector<Edge>{};
  std::vector<int> inset(g.n(), 0);
  for (int v : verts) inset[v] = 1;
  std::vector<Edge> edges;
  for (auto& [u, v] : g.edges())
    if (inset[u] && inset[v]) edges.push_back({u, v});
  if (edges.size() + 1 < verts.size()) return std::nullopt;
  SpanningSearch search{edges, static_cast<int>(verts.size()) - 1,
                        std::vector<int>(g.n(), 0), std::vector<int>(g.n()), bound};
  for (int i = 0; i < g.n(); i++) search.uf[i] = i;
  std::vector<Edge> chosen;
  if (search.run(0, chosen)) return chosen;
  return std::nullopt;
}

}  // namespace

UndirOptResult brute_mbt_undirected(const UGraph& g, int degree_bound, int cap) {
  if (g.n() > cap)
    throw std::invalid_argument("brute_mbt_undirected: n=" + std::to_string(g.n()) +
                                " exceeds cap " + std::to_string(cap));
  if (degree_bound < 1) throw std::invalid_argument("brute_mbt_undirected: degree bound");
  if (g.n() == 0) return {};
  for (int size = g.n(); size >= 1; size--) {
    for (CombinationIter it(g.n(), size); !it.done; it.advance()) {
      auto tree_edges = spanning_bounded_tree(g, it.cur, degree_bound);
      if (!tree_edges) continue;
      UndirOptResult res;
      res.size = size;
      res.tree.edges = *tree_edges;
      if (size == 1) res.tree.solo = it.cur[0];
      return res;
    }
  }
  return {};
}

namespace {

// Capacitated bipartite matching: every left vertex must pick one target
// from its candidate list; each target accepts at most `cap` picks.
struct TargetMatcher {
  const std::vector<std::vector<int>>& cand;  // per left index
  std::vector<int> cap;                       // per target id
  std::vector<std::vector<int>> taken;        // target -> left indexes matched
  std::vector<int> assign;                    // left index -> target or -1

  TargetMatcher(const std::vector<std::vector<int>>& cand_, std::vector<int> cap_)
      : cand(cand_), cap(std::move(cap_)), taken(cap.size()), assign(cand.size(), -1) {}

  bool augment(int left, std::vector<char>& visited) {
    for (int t : cand[left]) {
      if (visited[t]) continue;
      visited[t] = 1;
      if (static_cast<int>(taken[t].size()) < cap[t]) {
        taken[t].push_back(left);
        assign[left] = t;
        return true;
      }
      for (int& other : taken[t]) {
        if (augment(other, visited)) {
          // `other` moved elsewhere; this slot now hosts `left`.
          other = left;
          assign[left] = t;
          return true;
        }
      }
    }
    return false;
  }

  bool solve() {
    for (size_t l = 0; l < cand.size(); l++) {
      std::vector<char> visited(cap.size(), 0);
      if (!augment(static_cast<int>(l), visited)) return false;
    }
    return true;
  }
};

bool assignment_feasible(const std::vector<std::vector<int>>& cand, int n_targets,
                         const std::vector<int>& target_cap) {
  TargetMatcher m(cand, target_cap);
  (void)n_targets;
  return m.solve();
}

}  // namespace

SubsetFeasibility dag_subset_feasible(const Digraph& g, const std::vector<int>& s, int r) {
  if (!g.is_acyclic()) throw std::invalid_argument("dag_subset_feasible: graph is cyclic");
  std::vector<int> verts = s;
  std::sort(verts.begin(), verts.end());
  if (!std::binary_search(verts.begin(), verts.end(), r))
    throw std::invalid_argument("dag_subset_feasible: root not in subset");
  std::vector<int> inset(g.n(), 0);
  for (int v : verts) {
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("dag_subset_feasible: vertex out of range");
    inset[v] = 1;
  }

  std::vector<int> lefts;
  for (int v : verts)
    if (v != r) lefts.push_back(v);
  std::vector<std::vector<int>> cand(lefts.size());
  for (size_t i = 0; i < lefts.size(); i++) {
    for (int w : g.out(lefts[i]))
      if (inset[w]) cand[i].push_back(w);
    std::sort(cand[i].begin(), cand[i].end());
    if (cand[i].empty()) return {};
  }
  std::vector<int> cap(g.n(), 0);
  for (int v : verts) cap[v] = 2;

  if (!assignment_feasible(cand, g.n(), cap)) return {};

  // Lex-smallest assignment: fix targets greedily, re-checking that the
  // remaining vertices stay matchable.
  SubsetFeasibility out;
  out.feasible = true;
  out.tree.root = r;
  std::vector<int> cap_left = cap;
  for (size_t i = 0; i < lefts.size(); i++) {
    bool placed = false;
    for (int w : cand[i]) {
      if (cap_left[w] == 0) continue;
      cap_left[w]--;
      std::vector<std::vector<int>> rest(cand.begin() + i + 1, cand.end());
      if (assignment_feasible(rest, g.n(), cap_left)) {
        out.tree.arcs.emplace_back(lefts[i], w);
        placed = true;
        break;
      }
      cap_left[w]++;
    }
    if (!placed) return {};  // should not happen after the feasibility check
  }
  return out;
}

DirOptResult brute_mbt_dag(const Digraph& g, int r, int cap) {
  if (g.n() > cap)
    throw std::invalid_argument("brute_mbt_dag: n=" + std::to_string(g.n()) +
                                " exceeds cap " + std::to_string(cap));
  if (!g.is_acyclic()) throw std::invalid_argument("brute_mbt_dag: graph is cyclic");
  if (r < 0 || r >= g.n()) throw std::invalid_argument("brute_mbt_dag: root out of range");
  std::vector<int> others;
  for (int v = 0; v < g.n(); v++)
    if (v != r) others.push_back(v);
  for (int size = g.n(); size >= 1; size--) {
    for (CombinationIter it(static_cast<int>(others.size()), size - 1); !it.done;
         it.advance()) {
      std::vector<int> subset{r};
      for (int idx : it.cur) subset.push_back(others[idx]);
      std::sort(subset.begin(), subset.end());
      auto feas = dag_subset_feasible(g, subset, r);
      if (feas.feasible) return {size, feas.tree};
    }
  }
  return {1, DirBinaryTree{r, {}}};
}

DirOptResult brute_mbt_dag_unrooted(const Digraph& g, int cap) {
  DirOptResult best;
  for (int r = 0; r < g.n(); r++) {
    auto res = brute_mbt_dag(g, r, cap);
    if (res.size > best.size) best = res;
  }
  return best;
}

namespace {

// Backtracking assignment for general digraphs: each vertex of s\{r}
// picks one out-neighbor inside s; in-degrees capped at 2; an arc is
// rejected if the target's current chain loops back to the source.
struct DirectedSearch {
  const Digraph& g;
  const std::vector<int>& lefts;  // s \ {r}, increasing
  const std::vector<int>& inset;
  std::vector<int> assign;  // by vertex id, -1 if none
  std::vector<int> incap;

  bool creates_cycle(int v, int w) const {
    int cur = w;
    while (cur != -1) {
      if (cur == v) return true;
      cur = assign[cur];
    }
    return false;
  }

  bool run(size_t i, std::vector<Arc>& arcs) {
    if (i == lefts.size()) return true;
    int v = lefts[i];
    for (int w : g.out(v)) {
      if (!inset[w] || incap[w] == 0 || creates_cycle(v, w)) continue;
      incap[w]--;
      assign[v] = w;
      arcs.emplace_back(v, w);
      if (run(i + 1, arcs)) return true;
      arcs.pop_back();
      assign[v] = -1;
      incap[w]++;
    }
    return false;
  }
};

}  // namespace

DirOptResult brute_mbt_directed(const Digraph& g, int r, int cap) {
  if (g.n() > cap)
    throw std::invalid_argument("brute_mbt_directed: n=" + std::to_string(g.n()) +
                                " exceeds cap " + std::to_string(cap));
  if (r < 0 || r >= g.n())
    throw std::invalid_argument("brute_mbt_directed: root out of range");
  std::vector<int> others;
  for (int v = 0; v < g.n(); v++)
    if (v != r) others.push_back(v);
  for (int size = g.n(); size >= 1; size--) {
    for (CombinationIter it(static_cast<int>(others.size()), size - 1); !it.done;
         it.advance()) {
      std::vector<int> subset{r};
      for (int idx : it.cur) subset.push_back(others[idx]);
      std::sort(subset.begin(), subset.end());
      std::vector<int> inset(g.n(), 0);
      for (int v : subset) inset[v] = 1;
      std::vector<int> lefts;
      for (int v : subset)
        if (v != r) lefts.push_back(v);
      DirectedSearch search{g, lefts, inset, std::vector<int>(g.n(), -1),
                            std::vector<int>(g.n(), 2)};
      std::vector<Arc> arcs;
      if (search.run(0, arcs)) {
        DirOptResult res;
        res.size = size;
        res.tree.root = r;
        res.tree.arcs = arcs;
        return res;
      }
    }
  }
  return {1, DirBinaryTree{r, {}}};
}

}  // namespace mbt
