#include <random>

#include "doctest.h"
#include "mbt/oracle.hpp"

using namespace mbt;

TEST_CASE("undirected brute force on small named instances") {
  UGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(brute_mbt_undirected(triangle).size == 3);

  UGraph k14(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(brute_mbt_undirected(k14, 3).size == 4);
  CHECK(brute_mbt_undirected(k14, 2).size == 3);  // path only

  UGraph empty3(3, {});
  auto res = brute_mbt_undirected(empty3);
  CHECK(res.size == 1);
  REQUIRE(res.tree.solo.has_value());
  CHECK(*res.tree.solo == 0);  // deterministic tie-break

  UGraph big(17, {});
  CHECK_THROWS_AS(brute_mbt_undirected(big), std::invalid_argument);
}

TEST_CASE("witnesses validate and tie-breaks are deterministic") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; trial++) {
    auto g = gen_random_ugraph(8, 10, rng());
    auto a = brute_mbt_undirected(g);
    auto b = brute_mbt_undirected(g);
    CHECK(a.tree.edges == b.tree.edges);
    CHECK(validate_undir_tree(g, a.tree).ok);
    CHECK(a.size == a.tree.size());
  }
}

TEST_CASE("dag subset feasibility") {
  Digraph chain(3, {{0, 1}, {1, 2}});
  auto feas = dag_subset_feasible(chain, {0, 1, 2}, 2);
  CHECK(feas.feasible);
  CHECK(validate_dir_tree(chain, feas.tree).ok);

  // three sources into one sink: in-degree 3 needed
  Digraph star(4, {{0, 3}, {1, 3}, {2, 3}});
  CHECK_FALSE(dag_subset_feasible(star, {0, 1, 2, 3}, 3).feasible);

  Digraph diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto dres = dag_subset_feasible(diamond, {0, 1, 2, 3}, 3);
  CHECK(dres.feasible);
  CHECK(validate_dir_tree(diamond, dres.tree).ok);
  CHECK(dres.tree.vertices().size() == 4);

  CHECK_THROWS_AS(dag_subset_feasible(chain, {0, 1}, 2), std::invalid_argument);
  Digraph cyc(2, {{0, 1}, {1, 0}});
  CHECK_THROWS_AS(dag_subset_feasible(cyc, {0, 1}, 0), std::invalid_argument);
}

TEST_CASE("dag brute force") {
  Digraph chain(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(brute_mbt_dag(chain, 3).size == 4);

  Digraph instar(6, {{0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
  CHECK(brute_mbt_dag(instar, 5).size == 3);  // root plus two sources

  auto pd = permutation_dag({1, 2, 3});
  CHECK(brute_mbt_dag_unrooted(pd).size == 3);
}

TEST_CASE("directed brute force agrees with the dag oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; trial++) {
    int n = 4 + static_cast<int>(rng() % 5);  // 4..8
    auto g = gen_random_digraph(GraphKind::Dag, n, std::min(2 * n, n * (n - 1) / 2), rng());
    int r = static_cast<int>(rng() % n);
    auto via_dag = brute_mbt_dag(g, r);
    auto via_dir = brute_mbt_directed(g, r);
    CHECK(via_dag.size == via_dir.size);
    CHECK(validate_dir_tree(g, via_dir.tree).ok);
  }

  Digraph cyc2(2, {{0, 1}, {1, 0}});
  CHECK(brute_mbt_directed(cyc2, 1).size == 2);
  Digraph lonely(1, {});
  CHECK(brute_mbt_directed(lonely, 0).size == 1);
}

TEST_CASE("monotonicity: adding an edge never decreases the optimum") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; trial++) {
    auto g = gen_random_ugraph(7, 7, rng());
    auto base = brute_mbt_undirected(g).size;
    // add one random absent edge
    int u = static_cast<int>(rng() % 7), v = static_cast<int>(rng() % 7);
    if (u == v || g.has_edge(u, v)) continue;
    auto edges = g.edges();
    edges.push_back(make_edge(u, v));
    CHECK(brute_mbt_undirected(UGraph(7, edges)).size >= base);
  }
}
