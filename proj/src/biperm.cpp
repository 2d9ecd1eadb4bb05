#include "mbt/biperm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mbt {

namespace {

bool covers_all(const std::vector<int>& order, int n, std::vector<int>& pos) {
  pos.assign(n, -1);
  for (size_t i = 0; i < order.size(); i++) {
    int v = order[i];
    if (v < 0 || v >= n || pos[v] != -1) return false;
    pos[v] = static_cast<int>(i);
  }
  return true;
}

}  // namespace

OrderingCheck validate_strong_ordering(const UGraph& g, const StrongOrdering& ord) {
  int n = g.n();
  if (static_cast<int>(ord.s_order.size() + ord.t_order.size()) != n)
    return {false, "orders do not cover the vertex set"};
  std::vector<int> side(n, -1);
  for (int v : ord.s_order) {
    if (v < 0 || v >= n || side[v] != -1) return {false, "bad S order"};
    side[v] = 0;
  }
  for (int v : ord.t_order) {
    if (v < 0 || v >= n || side[v] != -1) return {false, "bad T order"};
    side[v] = 1;
  }
  for (auto& [u, v] : g.edges())
    if (side[u] == side[v]) return {false, "edge inside one side"};

  const auto& S = ord.s_order;
  const auto& T = ord.t_order;
  for (size_t i = 0; i < S.size(); i++)
    for (size_t i2 = i + 1; i2 < S.size(); i2++)
      for (size_t j = 0; j < T.size(); j++)
        for (size_t j2 = j + 1; j2 < T.size(); j2++) {
          if (g.has_edge(S[i], T[j2]) && g.has_edge(S[i2], T[j]) &&
              !(g.has_edge(S[i], T[j]) && g.has_edge(S[i2], T[j2]))) {
            std::ostringstream why;
            why << "cross edges (" << S[i] << "," << T[j2] << ") and (" << S[i2] << ","
                << T[j] << ") without parallel edges";
            return {false, why.str()};
          }
        }

  // Interval property on connected inputs: neighborhoods are contiguous
  // T-position ranges with nondecreasing endpoints.
  if (g.components().size() == 1 && !S.empty() && !T.empty()) {
    std::vector<int> t_pos(n, -1);
    for (size_t j = 0; j < T.size(); j++) t_pos[T[j]] = static_cast<int>(j);
    int prev_lo = 0, prev_hi = 0;
    for (size_t i = 0; i < S.size(); i++) {
      std::vector<int> ps;
      for (int w : g.neighbors(S[i])) ps.push_back(t_pos[w]);
      std::sort(ps.begin(), ps.end());
      if (ps.empty()) return {false, "isolated vertex in a connected graph"};
      if (ps.back() - ps.front() + 1 != static_cast<int>(ps.size()))
        return {false, "neighborhood of " + std::to_string(S[i]) + " is not an interval"};
      if (i > 0 && (ps.front() < prev_lo || ps.back() < prev_hi))
        return {false, "neighborhood intervals are not monotone"};
      prev_lo = ps.front();
      prev_hi = ps.back();
    }
  }
  return {};
}

std::optional<StrongOrdering> find_strong_ordering(const UGraph& g, int exhaustive_cap) {
  auto side = g.bipartition();
  if (!side) throw std::invalid_argument("find_strong_ordering: graph is not bipartite");

  StrongOrdering ord;
  for (int v = 0; v < g.n(); v++)
    ((*side)[v] == 0 ? ord.s_order : ord.t_order).push_back(v);

  auto resort = [&](std::vector<int>& mine, const std::vector<int>& other) {
    std::vector<int> pos(g.n(), 0);
    for (size_t i = 0; i < other.size(); i++) pos[other[i]] = static_cast<int>(i);
    std::vector<int> my_pos(g.n(), 0);
    for (size_t i = 0; i < mine.size(); i++) my_pos[mine[i]] = static_cast<int>(i);
    std::vector<std::pair<double, int>> keyed;
    for (int v : mine) {
      double avg = 0;
      if (g.degree(v) == 0) {
        avg = my_pos[v];
      } else {
        for (int w : g.neighbors(v)) avg += pos[w];
        avg /= g.degree(v);
      }
      keyed.push_back({avg, v});
    }
    std::stable_sort(keyed.begin(), keyed.end());
    std::vector<int> next;
    for (auto& [a, v] : keyed) next.push_back(v);
    bool changed = next != mine;
    mine = std::move(next);
    return changed;
  };

  for (int round = 0; round < 2 * g.n() + 4; round++) {
    bool c1 = resort(ord.s_order, ord.t_order);
    bool c2 = resort(ord.t_order, ord.s_order);
    if (!c1 && !c2) break;
  }
  if (validate_strong_ordering(g, ord).ok) return ord;

  // Complete fallback over the smaller side: once one side is fixed, the
  // other is forced up to twins by the neighborhood-interval order, so
  // sorting it by (min,max) neighbor position loses nothing.
  bool s_smaller = ord.s_order.size() <= ord.t_order.size();
  std::vector<int> fixed = s_smaller ? ord.s_order : ord.t_order;
  std::vector<int> derived = s_smaller ? ord.t_order : ord.s_order;
  if (fixed.size() <= static_cast<size_t>(exhaustive_cap)) {
    std::sort(fixed.begin(), fixed.end());
    do {
      std::vector<int> pos(g.n(), 0);
      for (size_t i = 0; i < fixed.size(); i++) pos[fixed[i]] = static_cast<int>(i);
      std::vector<std::tuple<int, int, int>> keyed;
      for (int v : derived) {
        int lo = g.n(), hi = -1;
        for (int w : g.neighbors(v)) {
          lo = std::min(lo, pos[w]);
          hi = std::max(hi, pos[w]);
        }
        keyed.push_back({lo, hi, v});
      }
      std::sort(keyed.begin(), keyed.end());
      StrongOrdering trial;
      (s_smaller ? trial.s_order : trial.t_order) = fixed;
      for (auto& [lo, hi, v] : keyed)
        (s_smaller ? trial.t_order : trial.s_order).push_back(v);
      if (validate_strong_ordering(g, trial).ok) return trial;
    } while (std::next_permutation(fixed.begin(), fixed.end()));
  }
  return std::nullopt;
}

BipermInstance gen_biperm(const std::vector<std::pair<int, int>>& intervals, int t_count) {
  int p = static_cast<int>(intervals.size()), q = t_count;
  if (p < 1 || q < 1) throw std::invalid_argument("gen_biperm: empty side");
  std::vector<bool> covered(q, false);
  for (int i = 0; i < p; i++) {
    auto [a, b] = intervals[i];
    if (a > b || a < 0 || b >= q) throw std::invalid_argument("gen_biperm: bad interval");
    if (i > 0 && (a < intervals[i - 1].first || b < intervals[i - 1].second))
      throw std::invalid_argument("gen_biperm: intervals not nondecreasing");
    for (int j = a; j <= b; j++) covered[j] = true;
  }
  if (!std::all_of(covered.begin(), covered.end(), [](bool c) { return c; }))
    throw std::invalid_argument("gen_biperm: intervals do not cover T");

  std::vector<Edge> edges;
  for (int i = 0; i < p; i++)
    for (int j = intervals[i].first; j <= intervals[i].second; j++)
      edges.push_back({i, p + j});
  BipermInstance inst;
  inst.graph = UGraph(p + q, std::move(edges));
  inst.ordering.s_order.resize(p);
  std::iota(inst.ordering.s_order.begin(), inst.ordering.s_order.end(), 0);
  inst.ordering.t_order.resize(q);
  std::iota(inst.ordering.t_order.begin(), inst.ordering.t_order.end(), p);
  if (!validate_strong_ordering(inst.graph, inst.ordering).ok)
    throw std::logic_error("gen_biperm: interval construction failed validation");
  return inst;
}

BipermInstance gen_random_biperm(int p, int q, uint64_t seed, bool connected) {
  if (p < 1 || q < 1) throw std::invalid_argument("gen_random_biperm: empty side");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; attempt++) {
    std::vector<std::pair<int, int>> intervals(p);
    int a = 0, b = std::uniform_int_distribution<int>(0, std::min(2, q - 1))(rng);
    intervals[0] = {a, b};
    for (int i = 1; i < p; i++) {
      int slack = connected ? 0 : 1;
      int hi_a = std::min(q - 1, intervals[i - 1].second + slack);
      a = std::uniform_int_distribution<int>(intervals[i - 1].first, hi_a)(rng);
      int lo_b = std::max(a, intervals[i - 1].second);
      int hi_b = std::min(q - 1, lo_b + 3);
      b = std::uniform_int_distribution<int>(lo_b, hi_b)(rng);
      intervals[i] = {a, b};
    }
    intervals[p - 1].second = q - 1;
    if (intervals[p - 1].first > intervals[p - 1].second) continue;
    BipermInstance inst = gen_biperm(intervals, q);
    if (connected && inst.graph.components().size() != 1) continue;

    // random relabeling so downstream ordering search is exercised
    std::vector<int> relabel(p + q);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<Edge> edges;
    for (auto& [u, v] : inst.graph.edges())
      edges.push_back(make_edge(relabel[u], relabel[v]));
    BipermInstance out;
    out.graph = UGraph(p + q, std::move(edges));
    for (int v : inst.ordering.s_order) out.ordering.s_order.push_back(relabel[v]);
    for (int v : inst.ordering.t_order) out.ordering.t_order.push_back(relabel[v]);
    return out;
  }
  throw std::runtime_error("gen_random_biperm: rejection sampling failed");
}

namespace {

struct ComponentDP {
  // 1-based positions into the component's strong ordering
  int p = 0, q = 0;
  std::vector<int> s_of, t_of;  // position -> global vertex id
  std::vector<std::vector<int>> nbr_lo, nbr_hi;  // not used; contiguity via lists
  std::vector<std::vector<int>> t_nbrs;  // t position -> sorted s positions
  std::vector<std::vector<int>> s_nbrs;  // s position -> sorted t positions
  std::vector<std::vector<int>> val_s, val_t, bp_s, bp_t;

  int d_count(const std::vector<int>& nbrs, int from) const {
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), from);
    return static_cast<int>(nbrs.end() - it);
  }
  bool has_pos(const std::vector<int>& nbrs, int pos) const {
    return std::binary_search(nbrs.begin(), nbrs.end(), pos);
  }

  void fill() {
    val_s.assign(p + 2, std::vector<int>(q + 2, 0));
    val_t.assign(p + 2, std::vector<int>(q + 2, 0));
    bp_s.assign(p + 2, std::vector<int>(q + 2, 0));
    bp_t.assign(p + 2, std::vector<int>(q + 2, 0));
    for (int i = p; i >= 1; i--) {
      for (int j = q; j >= 1; j--) {
        {  // MBT_S(i,j): s_i leaf, edge {s_i,t_j}
          const auto& nbrs = t_nbrs[j];
          if (!has_pos(nbrs, i)) {
            val_s[i][j] = 0;
          } else {
            int d = d_count(nbrs, i);
            if (d == 1) {
              val_s[i][j] = 1;
              bp_s[i][j] = 0;
            } else {
              int best = val_t[i + 1][j] + 1, bestk = 1;
              for (int k = 2; k <= d - 1; k++) {
                int cand = val_t[i + k][j] + 2;
                if (cand > best) {
                  best = cand;
                  bestk = k;
                }
              }
              val_s[i][j] = best;
              bp_s[i][j] = bestk;
            }
          }
        }
        {  // MBT_T(i,j): t_j leaf, edge {s_i,t_j}
          const auto& nbrs = s_nbrs[i];
          if (!has_pos(nbrs, j)) {
            val_t[i][j] = 0;
          } else {
            int d = d_count(nbrs, j);
            if (d == 1) {
              val_t[i][j] = 1;
              bp_t[i][j] = 0;
            } else {
              int best = val_s[i][j + 1] + 1, bestk = 1;
              for (int k = 2; k <= d - 1; k++) {
                int cand = val_s[i][j + k] + 2;
                if (cand > best) {
                  best = cand;
                  bestk = k;
                }
              }
              val_t[i][j] = best;
              bp_t[i][j] = bestk;
            }
          }
        }
      }
    }
  }

  void rebuild_s(int i, int j, std::vector<Edge>& out) const;
  void rebuild_t(int i, int j, std::vector<Edge>& out) const;
};

void ComponentDP::rebuild_s(int i, int j, std::vector<Edge>& out) const {
  out.push_back(make_edge(s_of[i], t_of[j]));
  int k = bp_s[i][j];
  if (k == 0) return;  // the single edge
  if (k == 1) {
    rebuild_t(i + 1, j, out);
  } else {
    out.push_back(make_edge(s_of[i + 1], t_of[j]));
    rebuild_t(i + k, j, out);
  }
}

void ComponentDP::rebuild_t(int i, int j, std::vector<Edge>& out) const {
  out.push_back(make_edge(s_of[i], t_of[j]));
  int k = bp_t[i][j];
  if (k == 0) return;
  if (k == 1) {
    rebuild_s(i, j + 1, out);
  } else {
    out.push_back(make_edge(s_of[i], t_of[j + 1]));
    rebuild_s(i, j + k, out);
  }
}

}  // namespace

BipermResult solve_biperm(const UGraph& g) {
  BipermResult res;
  int best_solo = g.n() > 0 ? 0 : -1;
  bool have_tree = false;

  for (const auto& comp : g.components()) {
    // local subgraph
    std::map<int, int> local;
    for (size_t i = 0; i < comp.size(); i++) local[comp[i]] = static_cast<int>(i);
    std::vector<Edge> ledges;
    for (auto& [u, v] : g.edges())
      if (local.count(u) && local.count(v))
        ledges.push_back(make_edge(local[u], local[v]));
    UGraph lg(static_cast<int>(comp.size()), std::move(ledges));

    auto ord = find_strong_ordering(lg);
    if (!ord)
      throw std::runtime_error(
          "solve_biperm: no strong ordering for the component containing vertex " +
          std::to_string(comp[0]) + " (not a bipartite permutation graph)");
    StrongOrdering global_ord;
    for (int v : ord->s_order) global_ord.s_order.push_back(comp[v]);
    for (int v : ord->t_order) global_ord.t_order.push_back(comp[v]);
    res.component_orderings.push_back(global_ord);

    ComponentDP dp;
    dp.p = static_cast<int>(ord->s_order.size());
    dp.q = static_cast<int>(ord->t_order.size());
    dp.s_of.assign(dp.p + 2, -1);
    dp.t_of.assign(dp.q + 2, -1);
    std::vector<int> s_pos(lg.n(), -1), t_pos(lg.n(), -1);
    for (int i = 1; i <= dp.p; i++) {
      dp.s_of[i] = comp[ord->s_order[i - 1]];
      s_pos[ord->s_order[i - 1]] = i;
    }
    for (int j = 1; j <= dp.q; j++) {
      dp.t_of[j] = comp[ord->t_order[j - 1]];
      t_pos[ord->t_order[j - 1]] = j;
    }
    dp.t_nbrs.assign(dp.q + 2, {});
    dp.s_nbrs.assign(dp.p + 2, {});
    for (auto& [u, v] : lg.edges()) {
      int su = s_pos[u] != -1 ? u : v;
      int tv = s_pos[u] != -1 ? v : u;
      dp.t_nbrs[t_pos[tv]].push_back(s_pos[su]);
      dp.s_nbrs[s_pos[su]].push_back(t_pos[tv]);
    }
    for (auto& nb : dp.t_nbrs) std::sort(nb.begin(), nb.end());
    for (auto& nb : dp.s_nbrs) std::sort(nb.begin(), nb.end());
    dp.fill();

    for (int i = 1; i <= dp.p; i++)
      for (int j = 1; j <= dp.q; j++) {
        if (dp.val_s[i][j] > res.edges) {
          res.edges = dp.val_s[i][j];
          std::vector<Edge> edges;
          dp.rebuild_s(i, j, edges);
          res.tree = UndirBinaryTree{edges, std::nullopt};
          have_tree = true;
        }
        if (dp.val_t[i][j] > res.edges) {
          res.edges = dp.val_t[i][j];
          std::vector<Edge> edges;
          dp.rebuild_t(i, j, edges);
          res.tree = UndirBinaryTree{edges, std::nullopt};
          have_tree = true;
        }
      }
  }

  if (!have_tree) {
    if (best_solo < 0) throw std::invalid_argument("solve_biperm: empty graph");
    res.tree = UndirBinaryTree{{}, best_solo};
  }
  if (static_cast<int>(res.tree.edges.size()) != res.edges)
    throw std::logic_error("solve_biperm: reconstruction size mismatch");
  auto report = validate_undir_tree(g, res.tree);
  if (!report.ok)
    throw std::logic_error("solve_biperm: invalid witness: " + report.reason);
  return res;
}

}  // namespace mbt
