#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mbt/gf2.hpp"
#include "mbt/graph.hpp"

namespace mbt {

// Arithmetic circuit over GF(2^l) variables x_0..x_{n-1}, y. Gates are
// stored in topological order; formal degree is tracked per gate.
struct Gate {
  enum Kind { InputVar, Add, Mul, Scalar } kind = InputVar;
  int var = -1;            // InputVar
  std::vector<int> args;   // Add: any fan-in; Mul: exactly 2; Scalar: 1
  uint64_t scalar = 1;     // Scalar
  int arc = -1;            // Scalar fingerprinting arc index, -1 if fixed
  int degree = 0;
};

struct Circuit {
  int n_vars = 0;  // x variables plus y when present
  int y_var = -1;
  std::vector<Gate> gates;
  int output = -1;
  std::vector<int> root_output;  // per-vertex gate computing P_v^(k)

  int degree() const { return output < 0 ? 0 : gates[output].degree; }
  int add_gate(Gate g);

  // Refresh the per-arc fingerprint scalars (indexed like Digraph::arcs()).
  void set_arc_fingerprints(const std::vector<uint64_t>& rho);

  // Convenience builders for hand-made circuits in tests and examples.
  int input(int var);
  int add(std::vector<int> args);
  int mul(int a, int b);
  int scale(uint64_t s, int arg);
};

// Circuit for y * sum_v P_v^(k) where P_v^(k) follows the recursive
// subtree-polynomial construction. Each unordered pair of child subtrees
// is emitted exactly once (smaller subtree first; equal sizes paired over
// increasing vertex index), so over a characteristic-2 field every tree
// shape contributes a single monomial weighted by its arc fingerprints.
// Size O(k^2 (n + m)) gates.
Circuit build_circuit(const Digraph& g, int k, const std::vector<uint64_t>& fingerprints);

// Exact sum-of-products expansion; a test oracle for small instances.
// Monomial key: exponent vector over the circuit variables.
using Monomial = std::vector<uint8_t>;
std::map<Monomial, uint64_t> expand_symbolic(const Circuit& c, const Gf2Field& f,
                                             size_t term_cap = 1 << 20);
// Integer lift: coefficients accumulated over Z instead of GF(2^l);
// requires every scalar gate to hold 1.
std::map<Monomial, unsigned long long> expand_integer(const Circuit& c,
                                                      size_t term_cap = 1 << 20);

}  // namespace mbt
