#include "mbt/lp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mbt {

Rational FractionalSolution::y_of(int v) const {
  auto it = y.find(v);
  return it == y.end() ? Rational(0) : it->second;
}

Rational FractionalSolution::x_of(const Arc& a) const {
  auto it = x.find(a);
  return it == x.end() ? Rational(0) : it->second;
}

Rational FractionalSolution::objective() const {
  Rational total = 0;
  for (auto& [v, val] : y) total += val;
  return total;
}

FractionalSolution FractionalSolution::from_tree(const Digraph& g, const DirBinaryTree& t) {
  auto report = validate_dir_tree(g, t);
  if (!report.ok)
    throw std::invalid_argument("from_tree: invalid tree: " + report.reason);
  FractionalSolution sol;
  for (int v : t.vertices()) sol.y[v] = 1;
  for (auto& a : t.arcs) sol.x[a] = 1;
  return sol;
}

namespace {

std::string yname(int v) { return "Y" + std::to_string(v); }
std::string xname(const Arc& a) {
  return "X" + std::to_string(a.first) + "_" + std::to_string(a.second);
}

}  // namespace

std::string emit_lp(const Digraph& g, int r, bool integer, int cap) {
  if (r < 0 || r >= g.n()) throw std::invalid_argument("emit_lp: root out of range");
  if (g.n() > cap) {
    int others = g.n() - 1;
    // sum over nonempty S of |S| = (n-1) 2^(n-2)
    double cuts = others * std::pow(2.0, others - 1);
    throw std::invalid_argument("emit_lp: n=" + std::to_string(g.n()) + " exceeds cap " +
                                std::to_string(cap) + " (about " +
                                std::to_string(static_cast<long long>(cuts)) +
                                " cut constraints)");
  }

  std::ostringstream out;
  out << "Maximize\n obj:";
  for (int v = 0; v < g.n(); v++) out << (v ? " + " : " ") << yname(v);
  out << "\nSubject To\n";
  for (int u = 0; u < g.n(); u++) {
    out << " indeg" << u << ":";
    for (int w : g.in(u)) out << " + " << xname({w, u});
    out << " - 2 " << yname(u) << " <= 0\n";
  }
  for (int u = 0; u < g.n(); u++) {
    if (u == r) continue;
    out << " outdeg" << u << ":";
    for (int w : g.out(u)) out << " + " << xname({u, w});
    out << " - " << yname(u) << " = 0\n";
  }
  // every nonempty S avoiding r, for every u in S
  std::vector<int> others;
  for (int v = 0; v < g.n(); v++)
    if (v != r) others.push_back(v);
  for (uint64_t picked = 1; picked < (uint64_t(1) << others.size()); picked++) {
    std::vector<int> subset;
    for (size_t i = 0; i < others.size(); i++)
      if (picked >> i & 1) subset.push_back(others[i]);
    std::vector<char> inset(g.n(), 0);
    for (int v : subset) inset[v] = 1;
    std::ostringstream lhs;
    for (auto& [a, b] : g.arcs())
      if (inset[a] && !inset[b]) lhs << " + " << xname({a, b});
    for (int u : subset) {
      out << " cut" << picked << "_" << u << ":" << lhs.str() << " - " << yname(u)
          << " >= 0\n";
    }
  }
  out << "Bounds\n";
  for (int v = 0; v < g.n(); v++) out << " 0 <= " << yname(v) << " <= 1\n";
  for (auto& a : g.arcs()) out << " 0 <= " << xname(a) << " <= 1\n";
  if (integer) {
    out << "Generals\n";
    for (int v = 0; v < g.n(); v++) out << " " << yname(v) << "\n";
    for (auto& a : g.arcs()) out << " " << xname(a) << "\n";
  }
  out << "End\n";
  return out.str();
}

namespace {

// Exact-rational max flow (BFS augmenting paths) on arc capacities.
struct RationalFlow {
  int n;
  struct FlowEdge {
    int to;
    Rational cap;
    int rev;
  };
  std::vector<std::vector<FlowEdge>> adj;

  explicit RationalFlow(int n_) : n(n_), adj(n_) {}

  void add_arc(int u, int v, const Rational& cap) {
    adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
    adj[v].push_back({u, Rational(0), static_cast<int>(adj[u].size()) - 1});
  }

  Rational max_flow(int s, int t, std::vector<char>* min_cut_side = nullptr) {
    Rational total = 0;
    while (true) {
      std::vector<int> prev_node(n, -1), prev_edge(n, -1);
      std::vector<char> seen(n, 0);
      std::vector<int> queue{s};
      seen[s] = 1;
      for (size_t h = 0; h < queue.size() && !seen[t]; h++) {
        int u = queue[h];
        for (size_t e = 0; e < adj[u].size(); e++) {
          const FlowEdge& fe = adj[u][e];
          if (fe.cap > 0 && !seen[fe.to]) {
            seen[fe.to] = 1;
            prev_node[fe.to] = u;
            prev_edge[fe.to] = static_cast<int>(e);
            queue.push_back(fe.to);
          }
        }
      }
      if (!seen[t]) {
        if (min_cut_side) *min_cut_side = seen;
        return total;
      }
      Rational push = -1;
      for (int v = t; v != s; v = prev_node[v]) {
        const FlowEdge& fe = adj[prev_node[v]][prev_edge[v]];
        if (push < 0 || fe.cap < push) push = fe.cap;
      }
      for (int v = t; v != s; v = prev_node[v]) {
        FlowEdge& fe = adj[prev_node[v]][prev_edge[v]];
        fe.cap -= push;
        adj[fe.to][fe.rev].cap += push;
      }
      total += push;
    }
  }
};

void check_local(const Digraph& g, int r, const FractionalSolution& sol,
                 FeasibilityReport& rep) {
  for (int u = 0; u < g.n(); u++) {
    Rational in_sum = 0;
    for (int w : g.in(u)) in_sum += sol.x_of({w, u});
    if (in_sum > 2 * sol.y_of(u))
      rep.violations.push_back(
          {"indeg" + std::to_string(u), "in-arc mass exceeds 2 Y_" + std::to_string(u)});
    if (u != r) {
      Rational out_sum = 0;
      for (int w : g.out(u)) out_sum += sol.x_of({u, w});
      if (out_sum != sol.y_of(u))
        rep.violations.push_back({"outdeg" + std::to_string(u),
                                  "out-arc mass differs from Y_" + std::to_string(u)});
    }
  }
  for (auto& [v, val] : sol.y)
    if (val < 0 || val > 1)
      rep.violations.push_back({"bounds Y" + std::to_string(v), "outside [0,1]"});
  for (auto& [a, val] : sol.x) {
    if (val < 0 || val > 1)
      rep.violations.push_back({"bounds " + xname(a), "outside [0,1]"});
    if (!g.has_arc(a.first, a.second))
      rep.violations.push_back({"support " + xname(a), "arc not in graph"});
  }
}

}  // namespace

FeasibilityReport verify_fractional(const Digraph& g, int r, const FractionalSolution& sol) {
  if (r < 0 || r >= g.n()) throw std::invalid_argument("verify_fractional: bad root");
  FeasibilityReport rep;
  check_local(g, r, sol, rep);

  // Cut constraints via min-cut duality: for every u with Y_u > 0 the
  // u -> r min cut under capacities X must be at least Y_u.
  for (int u = 0; u < g.n(); u++) {
    if (u == r) continue;
    Rational yu = sol.y_of(u);
    if (yu == 0) continue;
    RationalFlow flow(g.n());
    for (auto& a : g.arcs()) {
      Rational cap = sol.x_of(a);
      if (cap > 0) flow.add_arc(a.first, a.second, cap);
    }
    std::vector<char> side;
    Rational value = flow.max_flow(u, r, &side);
    if (value < yu) {
      std::ostringstream detail;
      detail << "min cut " << value << " below Y_" << u << " = " << yu << "; S = {";
      bool first = true;
      for (int v = 0; v < g.n(); v++)
        if (side[v]) {
          detail << (first ? "" : ",") << v;
          first = false;
        }
      detail << "}";
      rep.violations.push_back({"cut u=" + std::to_string(u), detail.str()});
    }
  }
  rep.feasible = rep.violations.empty();
  return rep;
}

FeasibilityReport verify_fractional_enumerated(const Digraph& g, int r,
                                               const FractionalSolution& sol, int cap) {
  if (g.n() > cap)
    throw std::invalid_argument("verify_fractional_enumerated: n exceeds cap");
  FeasibilityReport rep;
  check_local(g, r, sol, rep);
  std::vector<int> others;
  for (int v = 0; v < g.n(); v++)
    if (v != r) others.push_back(v);
  for (uint64_t picked = 1; picked < (uint64_t(1) << others.size()); picked++) {
    std::vector<char> inset(g.n(), 0);
    for (size_t i = 0; i < others.size(); i++)
      if (picked >> i & 1) inset[others[i]] = 1;
    Rational boundary = 0;
    for (auto& a : g.arcs())
      if (inset[a.first] && !inset[a.second]) boundary += sol.x_of(a);
    for (int u = 0; u < g.n(); u++) {
      if (!inset[u]) continue;
      if (boundary < sol.y_of(u))
        rep.violations.push_back({"cut S=" + std::to_string(picked) +
                                      " u=" + std::to_string(u),
                                  "boundary mass below Y_u"});
    }
  }
  rep.feasible = rep.violations.empty();
  return rep;
}

Rational integrality_gap_report(const Digraph& g, int r, const FractionalSolution& sol,
                                int oracle_opt) {
  if (oracle_opt <= 0) throw std::invalid_argument("integrality_gap_report: bad optimum");
  auto rep = verify_fractional(g, r, sol);
  if (!rep.feasible)
    throw std::invalid_argument("integrality_gap_report: solution infeasible");
  return sol.objective() / oracle_opt;
}

Rational ip_opt_reference(int k) {
  if (k < 1) throw std::invalid_argument("ip_opt_reference: k >= 1 required");
  Rational v = 0;
  for (int i = 2; i <= k; i++) v = 4 * v + 7;
  return v;
}

Rational lp_obj_reference(int k) {
  if (k < 1) throw std::invalid_argument("lp_obj_reference: k >= 1 required");
  Rational v = 0;
  for (int i = 2; i <= k; i++) v = 8 * v + 14;
  return v;
}

}  // namespace mbt
