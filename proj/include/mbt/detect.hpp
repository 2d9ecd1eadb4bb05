#pragma once

#include <optional>

#include "mbt/circuit.hpp"
#include "mbt/group_algebra.hpp"
#include "mbt/tree.hpp"

namespace mbt {

// Randomized multilinear-term detection via group-algebra evaluation:
// substituting x_i <- r_i (e_0 + e_{v_i}) kills every monomial with a
// squared variable, so a nonzero evaluation certifies a multilinear term
// (no false positives). Per-trial success probability when a term with
// nonzero coefficient exists is at least 0.28 (1 - d/2^l); the trial
// count ceil(ln(1/delta)/0.25) drives the failure rate below delta.
struct DetectParams {
  double delta = 1e-3;
  uint64_t seed = 0;
  int field_bits = 64;
};

int detect_trial_count(double delta);

bool detect_multilinear(const Circuit& c, int degree, const DetectParams& params);

struct FptParams {
  double delta = 1e-3;
  uint64_t seed = 0;
  int field_bits = 64;
  int k_cap = 10;  // group-algebra dimension 2^(k+1); naive convolution cost 4^(k+1)
};

// One-sided decision for "does g contain a binary tree of size k (any
// root)": yes with probability >= 1-delta when one exists, no with
// probability 1 otherwise. Fresh arc fingerprints every trial.
bool decide_k_binary_tree(const Digraph& g, int k, const FptParams& params);

// Search by repeated decision on arc-deleted graphs (delta split over the
// arcs); nullopt means 'no'.
std::optional<DirBinaryTree> search_k_binary_tree(const Digraph& g, int k,
                                                  const FptParams& params);

}  // namespace mbt
