#include "mbt/heapable.hpp"

#include <algorithm>
#include <set>

#include "mbt/detect.hpp"
#include "mbt/oracle.hpp"

namespace mbt {

HeapTrace is_heapable(const std::vector<long long>& seq) {
  std::set<long long> distinct(seq.begin(), seq.end());
  if (distinct.size() != seq.size())
    throw std::invalid_argument("is_heapable: duplicate values");
  HeapTrace trace;
  trace.parent.assign(seq.size(), -1);
  if (seq.empty()) {
    trace.heapable = true;
    return trace;
  }
  std::vector<int> slots(seq.size(), 0);  // free child slots per element
  slots[0] = 2;
  for (size_t i = 1; i < seq.size(); i++) {
    int best = -1;
    for (size_t j = 0; j < i; j++)
      if (slots[j] > 0 && seq[j] <= seq[i] && (best < 0 || seq[j] > seq[best]))
        best = static_cast<int>(j);
    if (best < 0) {
      trace.parent[i] = -2;
      trace.heapable = false;
      return trace;
    }
    slots[best]--;
    slots[i] = 2;
    trace.parent[i] = best;
  }
  trace.heapable = true;
  return trace;
}

namespace {

bool attach_search(const std::vector<long long>& seq, size_t i, std::vector<int>& slots) {
  if (i == seq.size()) return true;
  for (size_t j = 0; j < i; j++) {
    if (slots[j] == 0 || seq[j] > seq[i]) continue;
    slots[j]--;
    slots[i] = 2;
    if (attach_search(seq, i + 1, slots)) return true;
    slots[j]++;
    slots[i] = 0;
  }
  return false;
}

}  // namespace

bool is_heapable_exhaustive(const std::vector<long long>& seq) {
  std::set<long long> distinct(seq.begin(), seq.end());
  if (distinct.size() != seq.size())
    throw std::invalid_argument("is_heapable_exhaustive: duplicate values");
  if (seq.empty()) return true;
  std::vector<int> slots(seq.size(), 0);
  slots[0] = 2;
  return attach_search(seq, 1, slots);
}

HeapableResult longest_heapable(const std::vector<long long>& seq, HeapableSolver solver,
                                uint64_t seed) {
  Digraph dag = permutation_dag(seq);
  HeapableResult out;
  if (seq.empty()) return out;

  DirBinaryTree witness;
  if (solver == HeapableSolver::Brute) {
    auto best = brute_mbt_dag_unrooted(dag, 24);
    out.length = best.size;
    witness = best.tree;
  } else {
    FptParams params;
    params.seed = seed;
    int k = 1;
    std::optional<DirBinaryTree> last;
    while (k <= dag.n() && k <= params.k_cap) {
      auto found = search_k_binary_tree(dag, k, params);
      if (!found) break;
      last = found;
      k++;
    }
    if (!last) throw std::runtime_error("longest_heapable: fpt search failed at k=1");
    witness = *last;
    out.length = witness.size();
  }

  out.positions = witness.vertices();
  std::vector<long long> sub;
  for (int p : out.positions) sub.push_back(seq[p]);
  if (!is_heapable(sub).heapable)
    throw std::logic_error("longest_heapable: witness subsequence not heapable");
  return out;
}

}  // namespace mbt
