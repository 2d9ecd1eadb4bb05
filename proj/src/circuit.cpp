#include "mbt/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbt {

int Circuit::add_gate(Gate g) {
  switch (g.kind) {
    case Gate::InputVar:
      g.degree = 1;
      break;
    case Gate::Add: {
      if (g.args.empty()) throw std::invalid_argument("add gate without arguments");
      g.degree = 0;
      for (int a : g.args) g.degree = std::max(g.degree, gates[a].degree);
      break;
    }
    case Gate::Mul:
      if (g.args.size() != 2) throw std::invalid_argument("mul gate fan-in must be 2");
      g.degree = gates[g.args[0]].degree + gates[g.args[1]].degree;
      break;
    case Gate::Scalar:
      if (g.args.size() != 1) throw std::invalid_argument("scalar gate fan-in must be 1");
      g.degree = gates[g.args[0]].degree;
      break;
  }
  gates.push_back(std::move(g));
  return static_cast<int>(gates.size()) - 1;
}

void Circuit::set_arc_fingerprints(const std::vector<uint64_t>& rho) {
  for (auto& g : gates)
    if (g.kind == Gate::Scalar && g.arc >= 0) g.scalar = rho.at(g.arc);
}

int Circuit::input(int var) {
  Gate g;
  g.kind = Gate::InputVar;
  g.var = var;
  n_vars = std::max(n_vars, var + 1);
  return add_gate(g);
}

int Circuit::add(std::vector<int> args) {
  Gate g;
  g.kind = Gate::Add;
  g.args = std::move(args);
  return add_gate(g);
}

int Circuit::mul(int a, int b) {
  Gate g;
  g.kind = Gate::Mul;
  g.args = {a, b};
  return add_gate(g);
}

int Circuit::scale(uint64_t s, int arg) {
  Gate g;
  g.kind = Gate::Scalar;
  g.scalar = s;
  g.args = {arg};
  return add_gate(g);
}

Circuit build_circuit(const Digraph& g, int k,
                      const std::vector<uint64_t>& fingerprints) {
  if (k < 1) throw std::invalid_argument("build_circuit: k must be >= 1");
  if (fingerprints.size() != static_cast<size_t>(g.m()))
    throw std::invalid_argument("build_circuit: one fingerprint per arc required");

  int n = g.n();
  Circuit c;
  c.n_vars = n + 1;
  c.y_var = n;

  std::vector<int> x_gate(n), arc_index;
  for (int v = 0; v < n; v++) x_gate[v] = c.input(v);
  int y_gate = c.input(c.y_var);

  // Map (u,v) -> arc position for fingerprint slots.
  std::map<Arc, int> arc_pos;
  for (int i = 0; i < g.m(); i++) arc_pos[g.arcs()[i]] = i;

  // y powers y^1..y^(k-1).
  std::vector<int> y_pow(std::max(k, 2), -1);
  if (k >= 2) {
    y_pow[1] = y_gate;
    for (int j = 2; j <= k - 1; j++) y_pow[j] = c.mul(y_pow[j - 1], y_gate);
  }

  // p[v][j] = gate of P_v^(j); a[v][j] = gate of sum_u rho_uv P_u^(j).
  std::vector<std::vector<int>> p(n, std::vector<int>(k + 1, -1));
  std::vector<std::vector<int>> fp(n);  // fingerprinted child terms, per j below
  for (int v = 0; v < n; v++) p[v][1] = x_gate[v];

  // fingerprint scalar gate for arc (u,v) applied to P_u^(j)
  auto rho_term = [&](int u, int v, int j) {
    int pos = arc_pos.at({u, v});
    Gate s;
    s.kind = Gate::Scalar;
    s.scalar = fingerprints[pos];
    s.arc = pos;
    s.args = {p[u][j]};
    return c.add_gate(s);
  };

  for (int j = 2; j <= k; j++) {
    // a[v][l] for l < j is available; compute this layer's P values.
    for (int v = 0; v < n; v++) {
      const auto& in = g.in(v);
      if (in.empty()) {
        p[v][j] = c.mul(x_gate[v], y_pow[j - 1]);
        continue;
      }
      std::vector<int> terms;
      // one child of size j-1
      {
        std::vector<int> parts;
        for (int u : in) parts.push_back(rho_term(u, v, j - 1));
        terms.push_back(parts.size() == 1 ? parts[0] : c.add(parts));
      }
      // two children, unequal sizes: smaller slot first, each split once
      for (int l = 1; 2 * l < j - 1; l++) {
        std::vector<int> small, large;
        for (int u : in) {
          small.push_back(rho_term(u, v, l));
          large.push_back(rho_term(u, v, j - 1 - l));
        }
        int sg = small.size() == 1 ? small[0] : c.add(small);
        int lg = large.size() == 1 ? large[0] : c.add(large);
        terms.push_back(c.mul(sg, lg));
      }
      // two children of equal size: unordered vertex pairs via prefix sums
      if ((j - 1) % 2 == 0 && j >= 3) {
        int l = (j - 1) / 2;
        std::vector<int> sorted_in = in;
        std::sort(sorted_in.begin(), sorted_in.end());
        int prefix = -1;
        for (int u : sorted_in) {
          int b = rho_term(u, v, l);
          if (prefix >= 0) terms.push_back(c.mul(prefix, b));
          prefix = prefix < 0 ? b : c.add({prefix, b});
        }
      }
      int inner = terms.size() == 1 ? terms[0] : c.add(terms);
      p[v][j] = c.mul(x_gate[v], inner);
    }
  }

  c.root_output.resize(n);
  for (int v = 0; v < n; v++) c.root_output[v] = p[v][k];
  std::vector<int> all;
  for (int v = 0; v < n; v++) all.push_back(p[v][k]);
  int pg = all.size() == 1 ? all[0] : c.add(all);
  c.output = c.mul(y_gate, pg);
  return c;
}

namespace {

template <typename Coef, typename AddFn, typename MulFn>
std::map<Monomial, Coef> expand_impl(const Circuit& c, size_t term_cap, AddFn coef_add,
                                     MulFn coef_mul, Coef one) {
  using Poly = std::map<Monomial, Coef>;
  if (c.output < 0) throw std::invalid_argument("expand: circuit has no output");
  std::vector<Poly> val(c.gates.size());
  auto prune = [](Poly& p) {
    for (auto it = p.begin(); it != p.end();)
      it = it->second == Coef{} ? p.erase(it) : std::next(it);
  };
  for (size_t i = 0; i < c.gates.size(); i++) {
    const Gate& g = c.gates[i];
    Poly& out = val[i];
    switch (g.kind) {
      case Gate::InputVar: {
        Monomial m(c.n_vars, 0);
        m[g.var] = 1;
        out[m] = one;
        break;
      }
      case Gate::Add:
        for (int a : g.args)
          for (auto& [m, coef] : val[a]) out[m] = coef_add(out[m], coef);
        prune(out);
        break;
      case Gate::Mul: {
        const Poly& pa = val[g.args[0]];
        const Poly& pb = val[g.args[1]];
        for (auto& [ma, ca] : pa)
          for (auto& [mb, cb] : pb) {
            Monomial m = ma;
            for (size_t q = 0; q < m.size(); q++) m[q] += mb[q];
            out[m] = coef_add(out[m], coef_mul(ca, cb));
            if (out.size() > term_cap)
              throw std::runtime_error("expand: term cap exceeded");
          }
        prune(out);
        break;
      }
      case Gate::Scalar: {
        for (auto& [m, coef] : val[g.args[0]]) {
          Coef s = coef_mul(coef, static_cast<Coef>(g.scalar));
          if (!(s == Coef{})) out[m] = s;
        }
        break;
      }
    }
    if (out.size() > term_cap) throw std::runtime_error("expand: term cap exceeded");
  }
  return val[c.output];
}

}  // namespace

std::map<Monomial, uint64_t> expand_symbolic(const Circuit& c, const Gf2Field& f,
                                             size_t term_cap) {
  return expand_impl<uint64_t>(
      c, term_cap, [](uint64_t a, uint64_t b) { return a ^ b; },
      [&f](uint64_t a, uint64_t b) { return f.mul(a, b); }, uint64_t{1});
}

std::map<Monomial, unsigned long long> expand_integer(const Circuit& c, size_t term_cap) {
  for (auto& g : c.gates)
    if (g.kind == Gate::Scalar && g.scalar != 1)
      throw std::invalid_argument("expand_integer: requires unit fingerprints");
  return expand_impl<unsigned long long>(
      c, term_cap, [](unsigned long long a, unsigned long long b) { return a + b; },
      [](unsigned long long a, unsigned long long b) { return a * b; },
      1ULL);
}

}  // namespace mbt
