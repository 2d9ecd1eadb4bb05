#include "mbt/detect.hpp"

#include <cmath>
#include <random>
#include <set>

namespace mbt {

namespace {

// Evaluate the circuit over GF(2^l)[Z_2^d] with x_i <- r_i (e_0 + e_{v_i}).
bool nonzero_evaluation(const Circuit& c, int d, std::mt19937_64& rng,
                        const Gf2Field& field) {
  std::uniform_int_distribution<uint64_t> any_scalar(0, field.mask);
  std::uniform_int_distribution<uint64_t> nonzero_vec(1, (uint64_t(1) << d) - 1);

  std::vector<GroupAlgebraElement> var_value(c.n_vars);
  for (int v = 0; v < c.n_vars; v++)
    var_value[v] = GroupAlgebraElement::pair(d, nonzero_vec(rng), any_scalar(rng));

  std::vector<GroupAlgebraElement> val(c.gates.size());
  for (size_t i = 0; i < c.gates.size(); i++) {
    const Gate& g = c.gates[i];
    switch (g.kind) {
      case Gate::InputVar:
        val[i] = var_value[g.var];
        break;
      case Gate::Add: {
        val[i] = GroupAlgebraElement::zero(d);
        for (int a : g.args) val[i].add_inplace(val[a]);
        break;
      }
      case Gate::Mul:
        val[i] = ga_mul(val[g.args[0]], val[g.args[1]], field);
        break;
      case Gate::Scalar:
        val[i] = val[g.args[0]];
        val[i].scale_inplace(g.scalar, field);
        break;
    }
  }
  return !val[c.output].is_zero();
}

}  // namespace

int detect_trial_count(double delta) {
  if (delta <= 0 || delta >= 1) throw std::invalid_argument("delta must be in (0,1)");
  return static_cast<int>(std::ceil(std::log(1.0 / delta) / 0.25));
}

bool detect_multilinear(const Circuit& c, int degree, const DetectParams& params) {
  if (c.output < 0) throw std::invalid_argument("detect_multilinear: no output gate");
  if (c.degree() > degree)
    throw std::invalid_argument("detect_multilinear: circuit degree " +
                                std::to_string(c.degree()) + " exceeds declared " +
                                std::to_string(degree));
  Gf2Field field = Gf2Field::make(params.field_bits);
  std::mt19937_64 rng(params.seed);
  int trials = detect_trial_count(params.delta);
  for (int t = 0; t < trials; t++)
    if (nonzero_evaluation(c, degree, rng, field)) return true;
  return false;
}

bool decide_k_binary_tree(const Digraph& g, int k, const FptParams& params) {
  if (k < 1) throw std::invalid_argument("decide_k_binary_tree: k must be >= 1");
  if (k > params.k_cap)
    throw std::invalid_argument("decide_k_binary_tree: k exceeds cap " +
                                std::to_string(params.k_cap));
  if (g.n() == 0) return false;
  Gf2Field field = Gf2Field::make(params.field_bits);
  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<uint64_t> nonzero_scalar(1, field.mask);

  Circuit c = build_circuit(g, k, std::vector<uint64_t>(g.m(), 1));
  int trials = detect_trial_count(params.delta);
  std::vector<uint64_t> rho(g.m());
  for (int t = 0; t < trials; t++) {
    for (auto& r : rho) r = nonzero_scalar(rng);
    c.set_arc_fingerprints(rho);
    if (nonzero_evaluation(c, k + 1, rng, field)) return true;
  }
  return false;
}

std::optional<DirBinaryTree> search_k_binary_tree(const Digraph& g, int k,
                                                  const FptParams& params) {
  if (k < 1) throw std::invalid_argument("search_k_binary_tree: k must be >= 1");
  if (g.n() == 0) return std::nullopt;

  std::vector<Arc> arcs = g.arcs();
  int m = static_cast<int>(arcs.size());
  FptParams sub = params;
  if (m > 0) sub.delta = params.delta / m;

  std::vector<bool> removed(arcs.size(), false);
  std::mt19937_64 seed_stream(params.seed ^ 0x9e3779b97f4a7c15ULL);
  for (size_t e = 0; e < arcs.size(); e++) {
    std::vector<Arc> kept;
    for (size_t i = 0; i < arcs.size(); i++)
      if (!removed[i] && i != e) kept.push_back(arcs[i]);
    Digraph candidate(g.n(), kept);
    sub.seed = seed_stream();
    if (decide_k_binary_tree(candidate, k, sub)) removed[e] = true;
  }

  std::vector<Arc> survivors;
  for (size_t i = 0; i < arcs.size(); i++)
    if (!removed[i]) survivors.push_back(arcs[i]);

  DirBinaryTree t;
  if (survivors.empty()) {
    if (k != 1 || g.n() == 0) return std::nullopt;
    t.root = 0;
    return t;
  }
  // The survivors should form the tree; the root is the unique vertex
  // without an outgoing survivor arc.
  std::set<int> support, tails;
  for (auto& [u, v] : survivors) {
    support.insert(u);
    support.insert(v);
    tails.insert(u);
  }
  std::vector<int> roots;
  for (int v : support)
    if (!tails.count(v)) roots.push_back(v);
  if (roots.size() != 1) return std::nullopt;
  t.root = roots[0];
  t.arcs = survivors;
  if (static_cast<int>(support.size()) != k) return std::nullopt;
  if (!validate_dir_tree(g, t).ok) return std::nullopt;
  return t;
}

}  // namespace mbt
