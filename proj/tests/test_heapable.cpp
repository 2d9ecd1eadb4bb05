#include <algorithm>
#include <random>

#include "doctest.h"
#include "mbt/heapable.hpp"
#include "mbt/oracle.hpp"

using namespace mbt;

TEST_CASE("greedy heapability on named sequences") {
  CHECK(is_heapable({1, 2, 3}).heapable);
  CHECK_FALSE(is_heapable({2, 1}).heapable);
  CHECK(is_heapable({1, 3, 2, 4}).heapable);
  CHECK(is_heapable({5}).heapable);
  CHECK(is_heapable({}).heapable);
  CHECK_THROWS_AS(is_heapable({1, 1}), std::invalid_argument);

  // trace forms a valid attachment map
  auto trace = is_heapable({1, 3, 2, 4});
  CHECK(trace.parent[0] == -1);
  for (size_t i = 1; i < trace.parent.size(); i++) CHECK(trace.parent[i] >= 0);
}

TEST_CASE("greedy equals exhaustive attachment for all permutations up to n=8") {
  for (int n = 1; n <= 8; n++) {
    std::vector<long long> perm(n);
    for (int i = 0; i < n; i++) perm[i] = i + 1;
    int mismatch = 0;
    do {
      if (is_heapable(perm).heapable != is_heapable_exhaustive(perm)) mismatch++;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(mismatch == 0);
  }
}

TEST_CASE("longest heapable on named sequences") {
  auto inc = longest_heapable({1, 2, 3, 4, 5});
  CHECK(inc.length == 5);

  auto dec = longest_heapable({5, 4, 3, 2, 1});
  CHECK(dec.length == 1);

  auto mix = longest_heapable({1, 3, 2, 4});
  CHECK(mix.length == 4);
}

namespace {

// independent oracle: maximum over subsequences accepted by the greedy
// check (the greedy check itself is validated against exhaustive search)
int subsequence_oracle(const std::vector<long long>& seq) {
  int n = static_cast<int>(seq.size());
  int best = 0;
  for (uint64_t mask = 1; mask < (uint64_t(1) << n); mask++) {
    int size = __builtin_popcountll(mask);
    if (size <= best) continue;
    std::vector<long long> sub;
    for (int i = 0; i < n; i++)
      if (mask >> i & 1) sub.push_back(seq[i]);
    if (is_heapable(sub).heapable) best = size;
  }
  return best;
}

}  // namespace

TEST_CASE("equivalence with the permutation-DAG optimum on random sequences") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 40; trial++) {
    int n = 1 + static_cast<int>(rng() % 7);
    std::vector<long long> seq(n);
    for (int i = 0; i < n; i++) seq[i] = i;
    std::shuffle(seq.begin(), seq.end(), rng);
    auto via_dag = longest_heapable(seq);
    CHECK(via_dag.length == subsequence_oracle(seq));
    // witness is a real subsequence of the input
    CHECK(std::is_sorted(via_dag.positions.begin(), via_dag.positions.end()));
  }
}

TEST_CASE("fpt-backed solver agrees with brute on small sequences") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 6; trial++) {
    int n = 3 + static_cast<int>(rng() % 4);
    std::vector<long long> seq(n);
    for (int i = 0; i < n; i++) seq[i] = i;
    std::shuffle(seq.begin(), seq.end(), rng);
    auto brute = longest_heapable(seq, HeapableSolver::Brute);
    auto fpt = longest_heapable(seq, HeapableSolver::Fpt, rng());
    CHECK(brute.length == fpt.length);
  }
}
