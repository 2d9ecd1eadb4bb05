#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "mbt/color_gadget.hpp"

using namespace mbt;

namespace {

UGraph k3() { return UGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

long long tree_size(const DirBinaryTree& t) { return t.vertices().size(); }

}  // namespace

TEST_CASE("gadget parameters follow the t and N formulas") {
  auto gk3 = build_color_gadget(k3(), 1, 1);
  CHECK(gk3.t == 20);
  CHECK(gk3.total == 213);
  CHECK(gk3.dag.n() == 213);
  CHECK(gk3.dag.is_acyclic());

  UGraph p2(2, {{0, 1}});
  auto gp2 = build_color_gadget(p2, 1, 1);
  CHECK(gp2.t == 28);
  CHECK(gp2.total == 100);
  CHECK(gp2.dag.is_acyclic());

  CHECK_THROWS_AS(build_color_gadget(p2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_color_gadget(UGraph(3, {}), 1, 1), std::invalid_argument);
}

TEST_CASE("gadget DAGs from random graphs are acyclic with exact node count") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 8; trial++) {
    int n = 3 + static_cast<int>(rng() % 4);
    int m = 1 + static_cast<int>(rng() % (n * (n - 1) / 2));
    auto g = gen_random_ugraph(n, m, rng());
    if (g.m() == 0) continue;
    auto gad = build_color_gadget(g, 1, 2);
    CHECK(gad.dag.n() == gad.total);
    CHECK(gad.dag.is_acyclic());
    CHECK(gad.total == 3 * g.m() * gad.t + 3LL * n * n + 2 * n);
  }
}

TEST_CASE("coloring_to_tree hits N - n^2 exactly and validates") {
  auto gad = build_color_gadget(k3(), 1, 1);
  Coloring sigma{{Color::Red, Color::Green, Color::Blue}};
  auto t = coloring_to_tree(gad, sigma);
  CHECK(tree_size(t) == 204);  // N - n^2 = 213 - 9
  CHECK(validate_dir_tree(gad.dag, t).ok);
  CHECK(t.root == gad.super_root);

  UGraph p2(2, {{0, 1}});
  auto gp2 = build_color_gadget(p2, 1, 1);
  Coloring sig2{{Color::Red, Color::Green}};
  auto t2 = coloring_to_tree(gp2, sig2);
  CHECK(tree_size(t2) == 96);  // 100 - 4
  CHECK(validate_dir_tree(gp2.dag, t2).ok);

  Coloring mono{{Color::Red, Color::Red, Color::Blue}};
  CHECK_THROWS_AS(coloring_to_tree(gad, mono), std::invalid_argument);
}

TEST_CASE("coloring_to_tree output is maximal") {
  auto gad = build_color_gadget(k3(), 1, 1);
  Coloring sigma{{Color::Blue, Color::Red, Color::Green}};
  auto t = coloring_to_tree(gad, sigma);
  auto grown = maximalize_tree(gad.dag, t);
  CHECK(grown.arcs.size() == t.arcs.size());
}

TEST_CASE("round trip: tree back to a proper coloring") {
  auto gad = build_color_gadget(k3(), 1, 1);
  std::vector<Coloring> colorings = {
      {{Color::Red, Color::Green, Color::Blue}},
      {{Color::Blue, Color::Green, Color::Red}},
      {{Color::Green, Color::Blue, Color::Red}},
  };
  for (auto& sigma : colorings) {
    auto t = coloring_to_tree(gad, sigma);
    auto back = tree_to_coloring(gad, t);
    CHECK_FALSE(back.ambiguous);
    CHECK(back.monochromatic_edges == 0);
    for (int i = 0; i < 3; i++) CHECK(back.sigma.color[i] == sigma.color[i]);
    // on a maximal tree every leaf v_i has in-degree exactly 2
    std::map<int, int> indeg;
    for (auto& [u, v] : back.maximalized.arcs) indeg[v]++;
    for (int i = 0; i < 3; i++) CHECK(indeg[gad.leaf[i]] == 2);
  }
}

TEST_CASE("round trips on random 3-colorable graphs") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 5; trial++) {
    int n = 4 + static_cast<int>(rng() % 5);  // 4..8
    // build a random tripartite (hence 3-colorable) graph with known colors
    std::vector<Color> classes(n);
    for (int v = 0; v < n; v++) classes[v] = static_cast<Color>(rng() % 3);
    std::vector<Edge> edges;
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (classes[u] != classes[v] && rng() % 2) edges.push_back({u, v});
    if (edges.empty()) edges.push_back({0, 1});
    if (classes[0] == classes[1]) classes[1] = static_cast<Color>((static_cast<int>(classes[0]) + 1) % 3);
    UGraph g(n, edges);
    auto gad = build_color_gadget(g, 1, 1);
    Coloring sigma{classes};
    auto t = coloring_to_tree(gad, sigma);
    CHECK(tree_size(t) == gad.total - static_cast<long long>(n) * n);
    auto back = tree_to_coloring(gad, t);
    CHECK(back.monochromatic_edges == 0);
  }
}

TEST_CASE("size bound arithmetic behind the missing-roots lemma") {
  // if >= eps*m gadget roots are missing, the tree loses their whole
  // subtrees; the choice of t forces such trees below (1 - eps/4)(N - n^2)
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 6; trial++) {
    int n = 3 + static_cast<int>(rng() % 5);
    int m = 1 + static_cast<int>(rng() % (n * (n - 1) / 2));
    auto g = gen_random_ugraph(n, m, rng());
    if (g.m() == 0) continue;
    for (auto [num, den] : {std::pair<long long, long long>{1, 1}, {1, 2}, {3, 4}}) {
      auto gad = build_color_gadget(g, num, den);
      // hypothesis is "more than eps*m roots missing": floor(eps*m)+1,
      // each worth its whole t-node subtree
      long long missing_roots = num * g.m() / den + 1;
      long long nn = static_cast<long long>(g.n()) * g.n();
      // compare exactly: N - missing*t < (1 - eps/4)(N - n^2)
      // i.e. 4*den*(N - missing*t) < (4*den - num)(N - n^2)
      long long lhs = 4 * den * (gad.total - missing_roots * gad.t);
      long long rhs = (4 * den - num) * (gad.total - nn);
      CHECK(lhs < rhs);
    }
  }
}
