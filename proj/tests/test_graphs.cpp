#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "tdopt/errors.hpp"
#include "tdopt/graph.hpp"
#include "tdopt/treedepth.hpp"

using namespace tdopt;
using namespace testutil;

namespace {

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph random_graph(std::mt19937_64& g, int n, double p) {
  SimpleGraph out(n);
  std::bernoulli_distribution flip(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(g)) out.add_edge(u, v);
  return out;
}

}  // namespace

TEST_CASE("simple graph basics") {
  SimpleGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);  // duplicate ignored
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_THROWS_AS(g.add_edge(1, 1), Error);
  CHECK_THROWS_AS(g.add_edge(0, 5), Error);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("primal graph joins columns sharing a row support") {
  CHECK(primal_graph(RatMatrix::identity(3)).edge_count() == 0);

  RatMatrix ones(1, 3);
  for (int j = 0; j < 3; ++j) ones.at(0, j) = 1;
  CHECK(primal_graph(ones) == complete_graph(3));

  // the star-form matrix: its all-ones row still joins every column pair
  CHECK(primal_graph(golden_a_prime(3)) == complete_graph(3));
}

TEST_CASE("dual graph joins rows sharing a column support") {
  CHECK(dual_graph(golden_a(3)) == complete_graph(3));
  CHECK(dual_graph(RatMatrix::identity(4)).edge_count() == 0);

  SimpleGraph star = dual_graph(golden_a_prime(3));
  CHECK(star.edge_count() == 2);
  CHECK(star.has_edge(0, 1));
  CHECK(star.has_edge(0, 2));
  CHECK_FALSE(star.has_edge(1, 2));
}

TEST_CASE("rooted forest bookkeeping") {
  RootedForest f;
  f.parent = {-1, 0, 1, -1};
  f.check();
  CHECK(f.roots() == std::vector<int>{0, 3});
  CHECK(f.depth_of(2) == 2);
  CHECK(f.height() == 3);
  CHECK(f.is_ancestor(0, 2));
  CHECK(f.is_ancestor(2, 2));
  CHECK_FALSE(f.is_ancestor(2, 0));
  CHECK_FALSE(f.is_ancestor(3, 2));

  RootedForest cyc;
  cyc.parent = {1, 0};
  CHECK_THROWS_AS(cyc.check(), Error);
}

TEST_CASE("closure of a forest") {
  RootedForest path;
  path.parent = {-1, 0, 1};
  CHECK(closure(path) == complete_graph(3));

  RootedForest iso;
  iso.parent = {-1, -1, -1};
  CHECK(closure(iso).edge_count() == 0);

  RootedForest star;
  star.parent = {-1, 0, 0, 0};
  SimpleGraph want(4);
  want.add_edge(0, 1);
  want.add_edge(0, 2);
  want.add_edge(0, 3);
  CHECK(closure(star) == want);
}

TEST_CASE("tree-depth witness verification") {
  SimpleGraph empty(3);
  RootedForest any;
  any.parent = {-1, -1, -1};
  CHECK(verify_td_witness(empty, any));

  SimpleGraph k3 = complete_graph(3);
  RootedForest path;
  path.parent = {-1, 0, 1};
  CHECK(verify_td_witness(k3, path));

  RootedForest branch;
  branch.parent = {-1, 0, 0};  // children unrelated, misses edge 1-2
  CHECK_FALSE(verify_td_witness(k3, branch));
}

TEST_CASE("tree-depth of standard families") {
  SimpleGraph empty(4);
  TreedepthResult r = treedepth(empty);
  CHECK(r.value == 1);
  CHECK(r.exact);

  for (int m = 2; m <= 5; ++m) CHECK(treedepth(complete_graph(m)).value == m);

  SimpleGraph star(5);
  for (int v = 1; v < 5; ++v) star.add_edge(0, v);
  CHECK(treedepth(star).value == 2);

  for (int n = 1; n <= 7; ++n)
    CHECK(treedepth(path_graph(n)).value == static_cast<int>(ceil_log2(Int(n + 1))));

  CHECK(treedepth(SimpleGraph(0)).value == 0);
}

TEST_CASE("exact tree-depth matches the deletion-recursion oracle") {
  auto g = rng(21);
  for (int t = 0; t < 30; ++t) {
    int n = 3 + static_cast<int>(t % 5);
    SimpleGraph graph = random_graph(g, n, 0.4);
    TreedepthResult r = treedepth(graph);
    CHECK(r.exact);
    CHECK(r.value == treedepth_oracle(graph));
    CHECK(verify_td_witness(graph, r.forest));
    CHECK(r.forest.height() == r.value);
  }
}

TEST_CASE("oversized graphs fall back to a certified heuristic") {
  Limits lim;
  lim.td_max_vertices = 4;
  SimpleGraph graph = path_graph(6);
  TreedepthResult r = treedepth(graph, lim);
  CHECK_FALSE(r.exact);
  CHECK(verify_td_witness(graph, r.forest));
  CHECK(r.forest.height() == r.value);
  CHECK(r.value >= treedepth_oracle(graph));
}

TEST_CASE("heuristic bound always carries a valid witness") {
  auto g = rng(22);
  for (int t = 0; t < 15; ++t) {
    SimpleGraph graph = random_graph(g, 9, 0.3);
    TreedepthResult r = treedepth_bound(graph);
    CHECK(verify_td_witness(graph, r.forest));
    CHECK(r.forest.height() == r.value);
  }
}
