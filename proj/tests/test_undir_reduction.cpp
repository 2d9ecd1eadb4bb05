#include <map>
#include <random>

#include "doctest.h"
#include "mbt/oracle.hpp"
#include "mbt/tsp12.hpp"
#include "mbt/undir_reduction.hpp"

using namespace mbt;

TEST_CASE("undir_square vertex counts") {
  UGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(undir_square(star).squared.n() == 48);  // 4 + (3+8)*4

  UGraph lonely(1, {});
  CHECK(undir_square(lonely).squared.n() == 3);

  UGraph single_edge(2, {{0, 1}});
  CHECK(undir_square(single_edge).squared.n() == 12);  // 2 + (1+4)*2

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; trial++) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto g = gen_random_ugraph(n, std::min(2 * n, n * (n - 1) / 2), rng());
    auto sq = undir_square(g);
    CHECK(sq.squared.n() == n + (g.m() + 2 * n) * n);
  }
}

TEST_CASE("booster size 2s^2+2s and census identity") {
  UGraph path3(3, {{0, 1}, {1, 2}});
  auto sq = undir_square(path3);
  UndirBinaryTree t1{{{0, 1}, {1, 2}}, std::nullopt};
  auto boosted = undir_boost_tree(sq, t1);
  CHECK_FALSE(boosted.degraded_singleton);
  CHECK(boosted.tree.size() == 24);  // 2*9+6
  CHECK(validate_undir_tree(sq.squared, boosted.tree).ok);
  auto census = degree_census(boosted.tree);
  CHECK(3 * census.i0 + 2 * census.i1 + census.i2 == census.total() + 2);

  UndirBinaryTree t_edge{{{0, 1}}, std::nullopt};
  auto b_edge = undir_boost_tree(sq, t_edge);
  CHECK(b_edge.tree.size() == 12);  // 2*4+4

  UndirBinaryTree t_solo{{}, 1};
  auto b_solo = undir_boost_tree(sq, t_solo);
  CHECK(b_solo.degraded_singleton);
  CHECK(b_solo.tree.size() == 3);  // 2s+1
  CHECK(validate_undir_tree(sq.squared, b_solo.tree).ok);
}

TEST_CASE("projection recovers the planted vertex set") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 15; trial++) {
    int n = 2 + static_cast<int>(rng() % 4);  // 2..5
    auto g = gen_random_ugraph(n, std::min(2 * n, n * (n - 1) / 2), rng());
    auto t1 = brute_mbt_undirected(g).tree;
    if (t1.size() < 2) continue;
    auto sq = undir_square(g);
    auto boosted = undir_boost_tree(sq, t1);
    auto proj = undir_project(sq, boosted.tree);
    CHECK(proj.vertices() == t1.vertices());
    CHECK(validate_undir_tree(g, proj).ok);
  }
}

TEST_CASE("projection edge cases") {
  UGraph path3(3, {{0, 1}, {1, 2}});
  auto sq = undir_square(path3);

  // a tree fully inside a pendant copy projects to nothing
  int c = sq.pendant_copy(1, 0);
  UndirBinaryTree inside{{{sq.flat(c, 0), sq.flat(c, 1)}}, std::nullopt};
  REQUIRE(validate_undir_tree(sq.squared, inside).ok);
  auto empty_proj = undir_project(sq, inside);
  CHECK(empty_proj.vertices().empty());

  // a single original vertex projects to itself
  UndirBinaryTree solo{{}, 2};
  auto p_solo = undir_project(sq, solo);
  CHECK(p_solo.vertices() == std::vector<int>{2});

  // extract returns the copy tree verbatim when the projection is empty
  auto ex = undir_extract(sq, inside);
  CHECK(ex.tree.size() == 2);
  CHECK(validate_undir_tree(path3, ex.tree).ok);
}

TEST_CASE("extract round trip and forest bound") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 15; trial++) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto g = gen_random_ugraph(n, std::min(2 * n, n * (n - 1) / 2), rng());
    auto t1 = brute_mbt_undirected(g).tree;
    auto sq = undir_square(g);
    auto boosted = undir_boost_tree(sq, t1);
    auto ex = undir_extract(sq, boosted.tree);
    CHECK(ex.tree.size() >= t1.size());
    CHECK(validate_undir_tree(g, ex.tree).ok);
    // Claim: |F| <= 2 |projection| + 1
    auto proj = undir_project(sq, boosted.tree);
    CHECK(ex.forest_trees <= 2 * static_cast<long long>(proj.vertices().size()) + 1);
    auto census = degree_census(ex.tree);
    CHECK(3 * census.i0 + 2 * census.i1 + census.i2 == census.total() + 2);
  }
}

TEST_CASE("undirected boost-solve with the exact oracle") {
  UGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  UndirSolver oracle{[](const UGraph& gg) { return brute_mbt_undirected(gg, 3, 60).tree; },
                     1.0};
  auto res = undir_boost_solve(g, oracle, 0.5);
  CHECK(res.effective_k == 0);
  CHECK(res.tree.size() == brute_mbt_undirected(g).size);

  UndirSolver half{[](const UGraph& gg) { return brute_mbt_undirected(gg, 3, 60).tree; },
                   0.5};
  auto res2 = undir_boost_solve(UGraph(3, {{0, 1}, {1, 2}}), half, 0.5);
  CHECK(res2.requested_k == 1);
  CHECK(res2.effective_k == 1);
  CHECK(res2.tree.size() == 3);
}

TEST_CASE("pendant augmentation and restriction") {
  UGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});  // C4: Hamiltonian
  auto aug = pendant_augment(g);
  CHECK(aug.n() == 8);
  CHECK(aug.m() == 8);

  // explicit caterpillar: spanning binary tree of the augmented graph
  UndirBinaryTree cat{{{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}},
                      std::nullopt};
  CHECK(validate_undir_tree(aug, cat).ok);
  CHECK(cat.size() == 8);

  auto rest = restrict_to_base(g, cat);
  CHECK(rest.tree.size() == 4);
  CHECK(rest.degree3 == 0);
  CHECK(validate_undir_tree(g, rest.tree).ok);

  // restriction lemma on the oracle output: few degree-3 vertices
  auto t_aug = brute_mbt_undirected(aug, 3, 16).tree;
  auto r2 = restrict_to_base(g, t_aug);
  int missing = 2 * g.n() - t_aug.size();
  CHECK(r2.degree3 <= missing);  // every degree-3 vertex forfeits its pendant
}

TEST_CASE("tree_to_path weight bound") {
  auto inst = Tsp12Instance::make(4, {{1, 2}});  // one weight-2 pair
  // K_{1,3} star at 0, all incident edges weight 1
  UndirBinaryTree star{{{0, 1}, {0, 2}, {0, 3}}, std::nullopt};
  auto path = tree_to_path(inst, star);
  CHECK(path.order.size() == 4);
  CHECK(path.weight <= 3 + 1);

  // path input: unchanged weight, d=0
  UndirBinaryTree p{{{0, 1}, {1, 3}}, std::nullopt};
  auto wp = tree_to_path(inst, p);
  CHECK(wp.order.size() == 3);
  CHECK(wp.weight == 2);  // edges {0,1} and {1,3}, both weight 1

  // exhaustive: all binary trees on <= 8 vertices inside a weighted K8
  auto inst8 = Tsp12Instance::make(
      8, {{0, 5}, {1, 6}, {2, 7}, {3, 4}, {1, 3}});
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 8; n++) {
    // random spanning binary trees via the oracle over random subgraphs
    for (int trial = 0; trial < 40; trial++) {
      auto g = gen_random_ugraph(n, std::min(2 * n, n * (n - 1) / 2), rng());
      auto t = brute_mbt_undirected(g).tree;
      if (t.size() < 2) continue;
      long long w = 0;
      int d3 = 0;
      std::map<int, int> deg;
      for (auto& [u, v] : t.edges) {
        w += inst8.weight(u, v);
        deg[u]++;
        deg[v]++;
      }
      for (auto& [v, d] : deg)
        if (d == 3) d3++;
      auto wp2 = tree_to_path(inst8, t);
      CHECK(wp2.order.size() == t.vertices().size());
      CHECK(wp2.weight <= w + d3);
    }
  }
}

TEST_CASE("tsp12 pipeline on promise instances") {
  // weight-1 4-cycle, everything else weight 2
  std::vector<Edge> w2;
  UGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  for (int u = 0; u < 4; u++)
    for (int v = u + 1; v < 4; v++)
      if (!c4.has_edge(u, v)) w2.push_back({u, v});
  auto inst = Tsp12Instance::make(4, w2);
  Tsp12Solver oracle{[](const UGraph& g, double) {
    return brute_mbt_undirected(g, 3, 20).tree;
  }};
  auto tour = tsp12_tour(inst, oracle, 0.5);
  CHECK(tour.order.size() == 4);
  CHECK(tour.weight <= 5);  // n + 1

  // all-weight-1 K5
  auto k5 = Tsp12Instance::make(5, {});
  auto tour5 = tsp12_tour(k5, oracle, 0.5);
  CHECK(tour5.order.size() == 5);
  CHECK(tour5.weight == 5);
}

TEST_CASE("tsp12 io") {
  auto inst = Tsp12Instance::make(4, {{0, 2}, {1, 3}});
  auto text = write_tsp12(inst);
  auto back = read_tsp12(text);
  CHECK(back.n == 4);
  CHECK(back.weight2 == inst.weight2);
  CHECK(back.weight(0, 2) == 2);
  CHECK(back.weight(0, 1) == 1);
  CHECK_THROWS(read_tsp12("tsp12 4\n0 1 3\n"));
}
