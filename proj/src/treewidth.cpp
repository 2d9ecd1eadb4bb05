#include "mbt/treewidth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mbt {

int TreeDecomposition::width() const {
  int w = -1;
  for (auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

ValidityReport validate_td(const UGraph& g, const TreeDecomposition& td) {
  size_t nb = td.bags.size();
  if (nb == 0) return ValidityReport::invalid("no bags");
  for (auto& [a, b] : td.tree_edges)
    if (a < 0 || b < 0 || a >= static_cast<int>(nb) || b >= static_cast<int>(nb))
      return ValidityReport::structural("tree edge out of range");
  if (td.tree_edges.size() != nb - 1)
    return ValidityReport::invalid("decomposition tree is not a tree (edge count)");
  // connectivity of the decomposition tree
  std::vector<std::vector<int>> adj(nb);
  for (auto& [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(nb, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t h = 0; h < queue.size(); h++)
    for (int w : adj[queue[h]])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(nb))
    return ValidityReport::invalid("decomposition tree is disconnected");

  // (T1) coverage
  std::vector<char> covered(g.n(), 0);
  for (auto& bag : td.bags)
    for (int v : bag) {
      if (v < 0 || v >= g.n()) return ValidityReport::structural("bag vertex out of range");
      covered[v] = 1;
    }
  for (int v = 0; v < g.n(); v++)
    if (!covered[v]) return ValidityReport::invalid("vertex not covered by any bag (T1)");
  // (T2) edges
  for (auto& [u, v] : g.edges()) {
    bool found = false;
    for (auto& bag : td.bags)
      if (std::binary_search(bag.begin(), bag.end(), u) &&
          std::binary_search(bag.begin(), bag.end(), v)) {
        found = true;
        break;
      }
    if (!found) return ValidityReport::invalid("edge not inside any bag (T2)");
  }
  // (T3) per-vertex connectivity
  for (int v = 0; v < g.n(); v++) {
    std::vector<int> with_v;
    for (size_t i = 0; i < nb; i++)
      if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v))
        with_v.push_back(static_cast<int>(i));
    if (with_v.empty()) continue;
    std::set<int> want(with_v.begin(), with_v.end());
    std::set<int> reached{with_v[0]};
    std::vector<int> q{with_v[0]};
    while (!q.empty()) {
      int x = q.back();
      q.pop_back();
      for (int y : adj[x])
        if (want.count(y) && !reached.count(y)) {
          reached.insert(y);
          q.push_back(y);
        }
    }
    if (reached.size() != want.size())
      return ValidityReport::invalid("bags of vertex " + std::to_string(v) +
                                     " are not connected (T3)");
  }
  return ValidityReport::valid();
}

TreeDecomposition heuristic_td(const UGraph& g) {
  int n = g.n();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }
  std::vector<std::set<int>> adj(n);
  for (auto& [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> gone(n, 0);
  std::vector<int> elim_index(n, -1);
  std::vector<std::vector<int>> bag_of(n);

  for (int step = 0; step < n; step++) {
    int best = -1;
    long long best_fill = -1;
    for (int v = 0; v < n; v++) {
      if (gone[v]) continue;
      long long fill = 0;
      std::vector<int> nb(adj[v].begin(), adj[v].end());
      for (size_t i = 0; i < nb.size(); i++)
        for (size_t j = i + 1; j < nb.size(); j++)
          if (!adj[nb[i]].count(nb[j])) fill++;
      if (best == -1 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    elim_index[best] = step;
    bag_of[step] = {best};
    for (int w : adj[best]) bag_of[step].push_back(w);
    std::sort(bag_of[step].begin(), bag_of[step].end());
    std::vector<int> nb(adj[best].begin(), adj[best].end());
    for (size_t i = 0; i < nb.size(); i++)
      for (size_t j = i + 1; j < nb.size(); j++) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
    for (int w : nb) adj[w].erase(best);
    adj[best].clear();
    gone[best] = 1;
  }

  td.bags = bag_of;
  // parent: the bag of the first-eliminated neighbor in this bag; roots
  // (bags without later neighbors) are chained afterwards.
  std::vector<int> roots;
  std::vector<int> order_of(n);  // step -> eliminated vertex
  for (int v = 0; v < n; v++) order_of[elim_index[v]] = v;
  for (int step = 0; step < n; step++) {
    int v = order_of[step];
    int parent_step = -1;
    for (int w : bag_of[step])
      if (w != v && (parent_step == -1 || elim_index[w] < parent_step))
        parent_step = elim_index[w];
    if (parent_step == -1)
      roots.push_back(step);
    else
      td.tree_edges.push_back({step, parent_step});
  }
  for (size_t i = 1; i < roots.size(); i++)
    td.tree_edges.push_back({roots[i - 1], roots[i]});

  auto report = validate_td(g, td);
  if (!report.ok) throw std::logic_error("heuristic_td: invalid output: " + report.reason);
  return td;
}

TreeDecomposition read_td(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  TreeDecomposition td;
  int nbags = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "s") {
      std::string td_tag;
      int width_plus, n;
      if (!(ls >> td_tag >> nbags >> width_plus >> n) || td_tag != "td")
        throw std::invalid_argument("read_td: malformed solution line");
      td.bags.assign(nbags, {});
    } else if (tag == "b") {
      int idx;
      if (nbags < 0 || !(ls >> idx) || idx < 1 || idx > nbags)
        throw std::invalid_argument("read_td: bad bag line");
      int v;
      while (ls >> v) td.bags[idx - 1].push_back(v - 1);
      std::sort(td.bags[idx - 1].begin(), td.bags[idx - 1].end());
    } else {
      int a = std::stoi(tag), b;
      if (!(ls >> b)) throw std::invalid_argument("read_td: bad edge line");
      edges.push_back({a - 1, b - 1});
    }
  }
  if (nbags < 0) throw std::invalid_argument("read_td: missing solution line");
  td.tree_edges = edges;
  return td;
}

std::string write_td(const TreeDecomposition& td, int n) {
  std::ostringstream out;
  out << "s td " << td.bags.size() << " " << td.width() + 1 << " " << n << "\n";
  for (size_t i = 0; i < td.bags.size(); i++) {
    out << "b " << i + 1;
    for (int v : td.bags[i]) out << " " << v + 1;
    out << "\n";
  }
  for (auto& [a, b] : td.tree_edges) out << a + 1 << " " << b + 1 << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// s'-special nice decomposition
// ---------------------------------------------------------------------------

namespace {

struct NiceBuilder {
  std::vector<NiceNode> nodes;

  int emit(NiceNode n) {
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }

  int leaf() {
    NiceNode n;
    n.kind = NiceNode::Leaf;
    return emit(n);
  }
  int intro_vertex(int child, int v) {
    NiceNode n;
    n.kind = NiceNode::IntroVertex;
    n.vertex = v;
    n.children = {child};
    n.bag = nodes[child].bag;
    n.bag.insert(std::lower_bound(n.bag.begin(), n.bag.end(), v), v);
    return emit(n);
  }
  int drop(int child, int v) {
    NiceNode n;
    n.kind = NiceNode::Drop;
    n.vertex = v;
    n.children = {child};
    n.bag = nodes[child].bag;
    n.bag.erase(std::find(n.bag.begin(), n.bag.end(), v));
    return emit(n);
  }
  int join(int a, int b) {
    NiceNode n;
    n.kind = NiceNode::Join;
    n.children = {a, b};
    n.bag = nodes[a].bag;
    return emit(n);
  }
  int intro_edge(int child, int u, int v) {
    NiceNode n;
    n.kind = NiceNode::IntroEdge;
    n.edge = {u, v};
    n.children = {child};
    n.bag = nodes[child].bag;
    return emit(n);
  }
};

}  // namespace

SpecialTD to_special(const TreeDecomposition& td, const UGraph& g, int s) {
  if (s < 0 || s >= g.n()) throw std::invalid_argument("to_special: root out of range");
  auto report = validate_td(g, td);
  if (!report.ok)
    throw std::invalid_argument("to_special: invalid decomposition: " + report.reason);

  // Root the decomposition at bag 0 and orient.
  size_t nb = td.bags.size();
  std::vector<std::vector<int>> adj(nb);
  for (auto& [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> order{0}, parent(nb, -1);
  std::vector<char> seen(nb, 0);
  seen[0] = 1;
  for (size_t h = 0; h < order.size(); h++)
    for (int w : adj[order[h]])
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[h];
        order.push_back(w);
      }
  std::vector<std::vector<int>> kids(nb);
  for (size_t i = 1; i < order.size(); i++) kids[parent[order[i]]].push_back(order[i]);

  NiceBuilder nb_;
  // Recursive construction; returns the node whose bag equals td.bags[b].
  auto build = [&](auto&& self, int b) -> int {
    const std::vector<int>& bag = td.bags[b];
    std::vector<int> chains;
    for (int c : kids[b]) {
      int top = self(self, c);
      // drop bag(c) \ bag(b), then introduce bag(b) \ bag(c)
      for (int v : td.bags[c])
        if (!std::binary_search(bag.begin(), bag.end(), v)) top = nb_.drop(top, v);
      for (int v : bag)
        if (!std::binary_search(td.bags[c].begin(), td.bags[c].end(), v))
          top = nb_.intro_vertex(top, v);
      chains.push_back(top);
    }
    if (chains.empty()) {
      int top = nb_.leaf();
      for (int v : bag) top = nb_.intro_vertex(top, v);
      return top;
    }
    int acc = chains[0];
    for (size_t i = 1; i < chains.size(); i++) acc = nb_.join(acc, chains[i]);
    return acc;
  };
  int top = build(build, 0);
  // drop the root bag down to the empty set
  for (int v : td.bags[0]) top = nb_.drop(top, v);

  // Locate each vertex's unique drop node, depth-first numbering for the
  // descendant tests.
  size_t count = nb_.nodes.size();
  std::vector<int> node_parent(count, -1);
  for (size_t i = 0; i < count; i++)
    for (int c : nb_.nodes[i].children) node_parent[c] = static_cast<int>(i);
  std::vector<int> drop_node(g.n(), -1);
  for (size_t i = 0; i < count; i++)
    if (nb_.nodes[i].kind == NiceNode::Drop) {
      if (drop_node[nb_.nodes[i].vertex] != -1)
        throw std::logic_error("to_special: vertex dropped twice");
      drop_node[nb_.nodes[i].vertex] = static_cast<int>(i);
    }
  for (int v = 0; v < g.n(); v++)
    if (drop_node[v] == -1) throw std::logic_error("to_special: vertex never dropped");

  auto depth_of = [&](int node) {
    int d = 0;
    for (int x = node; x != -1; x = node_parent[x]) d++;
    return d;
  };

  // Assign each edge to the lower of the two endpoint drop nodes.
  std::vector<std::vector<std::pair<int, int>>> edges_at(count);
  for (auto& [u, v] : g.edges()) {
    int du = drop_node[u], dv = drop_node[v];
    int host = depth_of(du) >= depth_of(dv) ? du : dv;
    edges_at[host].push_back({u, v});
  }

  // Rebuild with introduce-edge chains spliced below their drop nodes and
  // s' in every bag. Child indexes shift, so rebuild bottom-up.
  SpecialTD sp;
  int s_prime = g.n();
  sp.s_prime = s_prime;
  {
    std::vector<Edge> host_edges = g.edges();
    host_edges.push_back({s, s_prime});
    sp.host = UGraph(g.n() + 1, std::move(host_edges));
  }
  NiceBuilder out;
  std::vector<int> remap(count, -1);
  for (size_t i = 0; i < count; i++) {
    NiceNode n = nb_.nodes[i];
    for (auto& c : n.children) c = remap[c];
    n.bag.insert(std::lower_bound(n.bag.begin(), n.bag.end(), s_prime), s_prime);
    if (n.kind == NiceNode::Drop) {
      // splice the introduce-edge chain between this drop node and its
      // child; chain nodes are emitted first to keep children before
      // parents in the node vector
      int chain = n.children[0];
      for (auto& [u, v] : edges_at[i]) {
        const auto& cbag = out.nodes[chain].bag;
        if (!std::binary_search(cbag.begin(), cbag.end(), u) ||
            !std::binary_search(cbag.begin(), cbag.end(), v))
          throw std::logic_error("to_special: edge endpoints missing at introduce node");
        chain = out.intro_edge(chain, u, v);
      }
      if (nb_.nodes[i].vertex == s) chain = out.intro_edge(chain, s, s_prime);
      n.children[0] = chain;
    }
    remap[i] = out.emit(n);
  }
  sp.nodes = std::move(out.nodes);
  sp.root = remap[static_cast<int>(count) - 1];
  return sp;
}

// ---------------------------------------------------------------------------
// the dynamic program
// ---------------------------------------------------------------------------

namespace {

struct TwState {
  std::vector<int> xs;    // sorted vertex ids present in the forest
  std::vector<int> part;  // canonical part label per position
  std::vector<int> deg;   // exact degree per position

  bool operator<(const TwState& o) const {
    if (xs != o.xs) return xs < o.xs;
    if (part != o.part) return part < o.part;
    return deg < o.deg;
  }
  bool operator==(const TwState& o) const {
    return xs == o.xs && part == o.part && deg == o.deg;
  }
};

void canonicalize(TwState& st) {
  std::map<int, int> relabel;
  for (int& p : st.part) {
    auto it = relabel.find(p);
    if (it == relabel.end()) {
      int fresh = static_cast<int>(relabel.size());
      relabel[p] = fresh;
      p = fresh;
    } else {
      p = it->second;
    }
  }
}

int position_of(const TwState& st, int v) {
  auto it = std::lower_bound(st.xs.begin(), st.xs.end(), v);
  if (it == st.xs.end() || *it != v) return -1;
  return static_cast<int>(it - st.xs.begin());
}

struct Entry {
  int value = -1;
  enum Tag { FromLeaf, Carry, NewVertex, UsedEdge, Dropped, Pair } tag = FromLeaf;
  TwState child1, child2;
  bool has_child2 = false;
};

using Table = std::map<TwState, Entry>;

void offer(Table& t, const TwState& key, Entry e) {
  auto it = t.find(key);
  if (it == t.end() || e.value > it->second.value) t[key] = std::move(e);
}

}  // namespace

TwOptResult solve_rooted_tw(const UGraph& g, int s, const TreeDecomposition& td) {
  SpecialTD sp = to_special(td, g, s);
  const auto& nodes = sp.nodes;
  int s_prime = sp.s_prime;

  // Structural bookkeeping for the join disjointness property.
  std::vector<std::set<int>> desc_verts(nodes.size());
  std::vector<std::set<Edge>> desc_edges(nodes.size());

  std::vector<Table> tables(nodes.size());
  for (size_t i = 0; i < nodes.size(); i++) {
    const NiceNode& node = nodes[i];
    Table& table = tables[i];
    for (int v : node.bag) desc_verts[i].insert(v);
    for (int c : node.children) {
      desc_verts[i].insert(desc_verts[c].begin(), desc_verts[c].end());
      desc_edges[i].insert(desc_edges[c].begin(), desc_edges[c].end());
    }

    switch (node.kind) {
      case NiceNode::Leaf: {
        TwState st;
        st.xs = {s_prime};
        st.part = {0};
        st.deg = {0};
        Entry e;
        e.value = 0;
        e.tag = Entry::FromLeaf;
        table[st] = e;
        break;
      }
      case NiceNode::IntroVertex: {
        int v = node.vertex;
        for (auto& [st, entry] : tables[node.children[0]]) {
          Entry carry;
          carry.value = entry.value;
          carry.tag = Entry::Carry;
          carry.child1 = st;
          offer(table, st, carry);

          TwState ext = st;
          int pos = static_cast<int>(std::lower_bound(ext.xs.begin(), ext.xs.end(), v) -
                                     ext.xs.begin());
          int fresh = 0;
          for (int p : ext.part) fresh = std::max(fresh, p + 1);
          ext.xs.insert(ext.xs.begin() + pos, v);
          ext.part.insert(ext.part.begin() + pos, fresh);
          ext.deg.insert(ext.deg.begin() + pos, 0);
          canonicalize(ext);
          Entry grown;
          grown.value = entry.value;
          grown.tag = Entry::NewVertex;
          grown.child1 = st;
          offer(table, ext, grown);
        }
        break;
      }
      case NiceNode::IntroEdge: {
        auto [u, v] = node.edge;
        desc_edges[i].insert(make_edge(u, v));
        for (auto& [st, entry] : tables[node.children[0]]) {
          Entry carry;
          carry.value = entry.value;
          carry.tag = Entry::Carry;
          carry.child1 = st;
          offer(table, st, carry);

          int pu = position_of(st, u), pv = position_of(st, v);
          if (pu < 0 || pv < 0) continue;
          if (st.part[pu] == st.part[pv]) continue;  // would close a cycle
          if (st.deg[pu] >= 3 || st.deg[pv] >= 3) continue;
          TwState used = st;
          int from = used.part[pv], into = used.part[pu];
          for (int& p : used.part)
            if (p == from) p = into;
          used.deg[pu]++;
          used.deg[pv]++;
          canonicalize(used);
          Entry e;
          e.value = entry.value + 1;
          e.tag = Entry::UsedEdge;
          e.child1 = st;
          offer(table, used, e);
        }
        break;
      }
      case NiceNode::Drop: {
        int v = node.vertex;
        for (auto& [st, entry] : tables[node.children[0]]) {
          int pos = position_of(st, v);
          if (pos < 0) {
            Entry carry;
            carry.value = entry.value;
            carry.tag = Entry::Carry;
            carry.child1 = st;
            offer(table, st, carry);
            continue;
          }
          // a dropped vertex keeps its degree forever: it must carry at
          // least one edge and may not leave its tree bagless
          if (st.deg[pos] == 0) continue;
          int members = 0;
          for (int p : st.part)
            if (p == st.part[pos]) members++;
          if (members < 2) continue;
          TwState rest = st;
          rest.xs.erase(rest.xs.begin() + pos);
          rest.part.erase(rest.part.begin() + pos);
          rest.deg.erase(rest.deg.begin() + pos);
          canonicalize(rest);
          Entry e;
          e.value = entry.value;
          e.tag = Entry::Dropped;
          e.child1 = st;
          offer(table, rest, e);
        }
        break;
      }
      case NiceNode::Join: {
        int cj = node.children[0], ck = node.children[1];
        if (nodes[cj].bag != nodes[ck].bag)
          throw std::logic_error("solve_rooted_tw: join children bags differ");
        // Lemma: descendant vertex/edge sets meet only inside the bag.
        for (int v : desc_verts[cj])
          if (desc_verts[ck].count(v) &&
              !std::binary_search(node.bag.begin(), node.bag.end(), v))
            throw std::logic_error("solve_rooted_tw: join shares a non-bag vertex");
        for (auto& e : desc_edges[cj])
          if (desc_edges[ck].count(e))
            throw std::logic_error("solve_rooted_tw: join shares an edge");

        std::map<std::vector<int>, std::vector<const std::pair<const TwState, Entry>*>>
            by_xs;
        for (auto& kv : tables[ck]) by_xs[kv.first.xs].push_back(&kv);
        for (auto& [stj, ej] : tables[cj]) {
          auto it = by_xs.find(stj.xs);
          if (it == by_xs.end()) continue;
          for (auto* kvp : it->second) {
            const TwState& stk = kvp->first;
            const Entry& ek = kvp->second;
            size_t sz = stj.xs.size();
            TwState merged;
            merged.xs = stj.xs;
            merged.deg.resize(sz);
            bool ok = true;
            for (size_t p = 0; p < sz && ok; p++) {
              merged.deg[p] = stj.deg[p] + stk.deg[p];
              if (merged.deg[p] > 3) ok = false;
            }
            if (!ok) continue;
            // merge the two partitions; reject if gluing closes a cycle
            std::vector<int> uf(sz);
            for (size_t p = 0; p < sz; p++) uf[p] = static_cast<int>(p);
            auto find = [&](int x) {
              while (uf[x] != x) x = uf[x] = uf[uf[x]];
              return x;
            };
            auto fold = [&](const std::vector<int>& part) {
              std::map<int, int> head;
              for (size_t p = 0; p < sz; p++) {
                auto hit = head.find(part[p]);
                if (hit == head.end()) {
                  head[part[p]] = static_cast<int>(p);
                  continue;
                }
                int a = find(hit->second), b = find(static_cast<int>(p));
                if (a == b) return false;  // cycle in the merged graph
                uf[a] = b;
              }
              return true;
            };
            if (!fold(stj.part) || !fold(stk.part)) continue;
            merged.part.resize(sz);
            for (size_t p = 0; p < sz; p++) merged.part[p] = find(static_cast<int>(p));
            canonicalize(merged);
            Entry e;
            e.value = ej.value + ek.value;
            e.tag = Entry::Pair;
            e.child1 = stj;
            e.child2 = stk;
            e.has_child2 = true;
            offer(table, merged, e);
          }
        }
        break;
      }
    }
  }

  TwOptResult out;
  for (auto& t : tables)
    out.max_states_per_node =
        std::max(out.max_states_per_node, static_cast<long long>(t.size()));

  // answer state at the root: ({s'}, {{s'}}, D(s')=1)
  TwState want;
  want.xs = {s_prime};
  want.part = {0};
  want.deg = {1};
  auto it = tables[sp.root].find(want);
  if (it == tables[sp.root].end()) {
    out.edges = 0;
    out.tree = UndirBinaryTree{{}, s};
    return out;
  }

  // Reconstruct by walking the backpointers.
  std::vector<Edge> picked;
  auto walk = [&](auto&& self, int node_id, const TwState& key) -> void {
    const Entry& e = tables[node_id].at(key);
    const NiceNode& node = nodes[node_id];
    switch (node.kind) {
      case NiceNode::Leaf:
        return;
      case NiceNode::Join:
        self(self, node.children[0], e.child1);
        self(self, node.children[1], e.child2);
        return;
      default:
        if (node.kind == NiceNode::IntroEdge && e.tag == Entry::UsedEdge)
          picked.push_back(make_edge(node.edge.first, node.edge.second));
        self(self, node.children[0], e.child1);
        return;
    }
  };
  walk(walk, sp.root, want);

  UndirBinaryTree full;  // tree in G^s rooted at s'
  full.edges = picked;
  auto rep = validate_undir_tree(sp.host, full, s_prime);
  if (!rep.ok) throw std::logic_error("solve_rooted_tw: witness invalid: " + rep.reason);
  if (static_cast<int>(picked.size()) != it->second.value)
    throw std::logic_error("solve_rooted_tw: witness size mismatch");

  // strip s' and {s,s'}
  UndirBinaryTree result;
  for (auto& [u, v] : picked)
    if (v != s_prime && u != s_prime) result.edges.push_back({u, v});
  if (result.edges.empty()) result.solo = s;
  out.edges = static_cast<int>(result.edges.size());
  auto rep2 = validate_undir_tree(g, result, s);
  if (!rep2.ok) throw std::logic_error("solve_rooted_tw: stripped witness invalid");
  out.tree = result;
  return out;
}

TwOptResult solve_unrooted_tw(const UGraph& g, const TreeDecomposition& td) {
  if (g.n() == 0) throw std::invalid_argument("solve_unrooted_tw: empty graph");
  auto report = validate_td(g, td);
  if (!report.ok)
    throw std::invalid_argument("solve_unrooted_tw: invalid decomposition: " +
                                report.reason);
  int n = g.n();
  int s = n;
  int b_count = g.m() + 1;  // binary tree with |E(G)| edges
  int b_base = n + 1;

  std::vector<Edge> edges = g.edges();
  for (int v = 0; v < n; v++) edges.push_back({v, s});
  edges.push_back({s, b_base});
  for (int j = 1; j < b_count; j++)
    edges.push_back(make_edge(b_base + j, b_base + (j - 1) / 2));
  UGraph gp(n + 1 + b_count, std::move(edges));

  TreeDecomposition tdp;
  for (auto& bag : td.bags) {
    std::vector<int> nb = bag;
    nb.push_back(s);
    std::sort(nb.begin(), nb.end());
    tdp.bags.push_back(nb);
  }
  tdp.tree_edges = td.tree_edges;
  // bags for the guard tree: {s, b_root} at the root, {s, child, parent} below
  int root_bag = static_cast<int>(tdp.bags.size());
  tdp.bags.push_back({s, b_base});
  tdp.tree_edges.push_back({0, root_bag});
  std::vector<int> bag_of_b(b_count, root_bag);
  for (int j = 1; j < b_count; j++) {
    int parent = (j - 1) / 2;
    int idx = static_cast<int>(tdp.bags.size());
    std::vector<int> nb{s, b_base + j, b_base + parent};
    std::sort(nb.begin(), nb.end());
    tdp.bags.push_back(nb);
    tdp.tree_edges.push_back({bag_of_b[parent], idx});
    bag_of_b[j] = idx;
  }

  TwOptResult rooted = solve_rooted_tw(gp, s, tdp);

  // the G-side subtree below s
  TwOptResult out;
  out.max_states_per_node = rooted.max_states_per_node;
  std::map<int, std::vector<int>> adj;
  for (auto& [u, v] : rooted.tree.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  UndirBinaryTree best;
  int best_size = 0;
  for (int child : adj[s]) {
    if (child >= n) continue;  // guard-tree side
    std::set<int> comp{child};
    std::vector<int> q{child};
    while (!q.empty()) {
      int x = q.back();
      q.pop_back();
      for (int y : adj[x])
        if (y != s && !comp.count(y)) {
          comp.insert(y);
          q.push_back(y);
        }
    }
    if (static_cast<int>(comp.size()) > best_size) {
      best_size = static_cast<int>(comp.size());
      best = UndirBinaryTree{};
      for (auto& [u, v] : rooted.tree.edges)
        if (comp.count(u) && comp.count(v)) best.edges.push_back({u, v});
      if (best.edges.empty()) best.solo = child;
    }
  }
  if (best_size == 0) best = UndirBinaryTree{{}, 0};
  out.tree = best;
  out.edges = static_cast<int>(best.edges.size());
  auto rep = validate_undir_tree(g, best);
  if (!rep.ok) throw std::logic_error("solve_unrooted_tw: invalid witness");
  return out;
}

}  // namespace mbt
