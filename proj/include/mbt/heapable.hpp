#pragma once

#include <optional>

#include "mbt/tree.hpp"

namespace mbt {

// Longest heapable subsequence through the permutation-DAG equivalence:
// positions become vertices, arcs run from later-and-larger elements to
// earlier-and-smaller ones, and heapable subsequences correspond to
// binary trees of the DAG.

struct HeapTrace {
  bool heapable = false;
  std::vector<int> parent;  // per element index; -1 for the root, -2 when stuck
};

// Greedy insertion: each element attaches below the largest already
// placed value that is at most the element and still has a free child
// slot. Validated against exhaustive attachment search in tests.
HeapTrace is_heapable(const std::vector<long long>& seq);

// Exhaustive attachment search (test oracle, exponential).
bool is_heapable_exhaustive(const std::vector<long long>& seq);

struct HeapableResult {
  int length = 0;
  std::vector<int> positions;  // ascending positions of the witness subsequence
};

enum class HeapableSolver { Brute, Fpt };

HeapableResult longest_heapable(const std::vector<long long>& seq,
                                HeapableSolver solver = HeapableSolver::Brute,
                                uint64_t seed = 0);

}  // namespace mbt
