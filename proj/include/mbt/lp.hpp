#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "mbt/tree.hpp"

namespace mbt {

using Rational = boost::multiprecision::cpp_rational;

// Fractional point for the cut-constraint program: vertex values Y and
// arc values X; absent entries read as 0.
struct FractionalSolution {
  std::map<int, Rational> y;
  std::map<Arc, Rational> x;

  Rational y_of(int v) const;
  Rational x_of(const Arc& a) const;
  Rational objective() const;

  static FractionalSolution from_tree(const Digraph& g, const DirBinaryTree& t);
};

// LP-file emission (Maximize / Subject To / Bounds / Generals / End).
// The cut family is enumerated explicitly, so emission is desk-scale
// only: n above the cap is refused with the would-be constraint count.
std::string emit_lp(const Digraph& g, int r, bool integer, int cap = 20);

struct Violation {
  std::string constraint;  // human-readable name
  std::string detail;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Violation> violations;
};

// Exact feasibility of (1),(2),(4),(5) plus the cut family via
// rational max-flow (min u->r cut under capacities X must carry Y_u).
FeasibilityReport verify_fractional(const Digraph& g, int r, const FractionalSolution& sol);

// Test-oracle twin of the flow check: explicit enumeration over all
// subsets; exponential, for cross-validation at n <= 8.
FeasibilityReport verify_fractional_enumerated(const Digraph& g, int r,
                                               const FractionalSolution& sol, int cap = 8);

// (sum Y) / oracle optimum as an exact rational; sol must be feasible.
Rational integrality_gap_report(const Digraph& g, int r, const FractionalSolution& sol,
                                int oracle_opt);

// Reference evaluators for the gap family's recurrences:
// IP-OPT(k) = 4 IP-OPT(k-1) + 7 with IP-OPT(1) = 0,
// LP-obj(k) = 8 LP-obj(k-1) + 14 with LP-obj(1) = 0.
Rational ip_opt_reference(int k);
Rational lp_obj_reference(int k);

}  // namespace mbt
