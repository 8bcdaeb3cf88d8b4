// Copyright 2026 The eventree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "eventree/error.hpp"
#include "eventree/generator.hpp"
#include "eventree/report.hpp"
#include "eventree/verifier.hpp"
#include "support.hpp"

using namespace eventree;
using namespace eventree::testing;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::ParseError;
}

// Reduced-Laplacian determinant by fraction-free elimination.
long long matrix_tree_count(const Graph& g) {
  const int k = g.order() - 1;
  if (k <= 0) return 1;
  std::vector<std::vector<long long>> a(k, std::vector<long long>(k, 0));
  for (const Edge& e : g.edges()) {
    if (e.u < k) ++a[e.u][e.u];
    if (e.v < k) ++a[e.v][e.v];
    if (e.u < k && e.v < k) {
      --a[e.u][e.v];
      --a[e.v][e.u];
    }
  }
  long long prev = 1;
  int sign = 1;
  for (int i = 0; i < k; ++i) {
    if (a[i][i] == 0) {
      int s = i + 1;
      while (s < k && a[s][i] == 0) ++s;
      if (s == k) return 0;
      std::swap(a[i], a[s]);
      sign = -sign;
    }
    for (int r = i + 1; r < k; ++r) {
      for (int c = i + 1; c < k; ++c) a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
    }
    prev = a[i][i];
  }
  return sign * a[k - 1][k - 1];
}

// Every edge subset, keep those with all degrees 2.
bool subset_two_factor(const Graph& g) {
  const auto edges = edge_vector(g);
  REQUIRE(edges.size() <= 22);
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    if (static_cast<Vertex>(std::popcount(mask)) != g.order()) continue;
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (mask >> i & 1u) ok = ++deg[edges[i].u] <= 2 && ++deg[edges[i].v] <= 2;
    }
    if (ok) return true;
  }
  return false;
}

// Every (n-1)-subset of edges that is a spanning tree with even leaves.
bool subset_even_tree(const Graph& g) {
  const auto edges = edge_vector(g);
  REQUIRE(edges.size() <= 20);
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    if (static_cast<Vertex>(std::popcount(mask)) + 1 != g.order()) continue;
    std::vector<Edge> t;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (mask >> i & 1u) t.push_back(edges[i]);
    }
    if (is_spanning_tree(g, t) && leaves_pairwise_even(g.order(), t)) return true;
  }
  return false;
}

void check_spec(const Graph& g, const GenSpec& s) {
  CHECK(g.order() == s.n);
  CHECK(degree_profile(g) == s.r);
  CHECK(g.size() == static_cast<std::size_t>(s.n) * s.r / 2);
  if (s.connected) CHECK(is_connected(g));
  if (s.nonbipartite) CHECK(has_odd_simple_cycle(g) == true);
}

}  // namespace

TEST_CASE("random_regular: n=4 r=3 is K4 for every seed") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_regular({4, 3, seed});
    CHECK(g.size() == 6);
    CHECK(edge_vector(g) == edge_vector(complete_graph(4)));
  }
}

TEST_CASE("random_regular: n=16 r=3 seed=7") {
  const GenSpec s{16, 3, 7};
  const Graph g = random_regular(s);
  check_spec(g, s);
  CHECK_FALSE(two_color(g).bipartite());
  // Same seed, same graph.
  CHECK(edge_vector(random_regular(s)) == edge_vector(g));
}

TEST_CASE("random_regular: infeasible specs") {
  CHECK(code_of([] { random_regular({5, 3, 0}); }) == Errc::InfeasibleSpec);
  CHECK(code_of([] { random_regular({4, 4, 0}); }) == Errc::InfeasibleSpec);
  CHECK(code_of([] { random_regular({6, 1, 0}); }) == Errc::InfeasibleSpec);
  CHECK(code_of([] { random_regular({0, 3, 0}); }) == Errc::InfeasibleSpec);
}

TEST_CASE("random_regular: a tiny budget runs out") {
  // K8 minus a perfect matching is the only target; one draw is rarely simple.
  CHECK(code_of([] { random_regular({8, 6, 0, true, true, 1}); }) == Errc::RejectionBudgetExhausted);
}

TEST_CASE("random_regular: output meets its constraints") {
  std::set<std::vector<Edge>> distinct;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    for (auto [n, r] : {std::pair{10, 3}, std::pair{16, 3}, std::pair{12, 4}, std::pair{20, 5}, std::pair{9, 2}}) {
      const GenSpec s{n, r, seed};
      const Graph g = random_regular(s);
      check_spec(g, s);
      if (n == 16) distinct.insert(edge_vector(g));
    }
    const GenSpec loose{12, 3, seed, false, false};
    check_spec(random_regular(loose), loose);
  }
  // Seeds do matter.
  CHECK(distinct.size() > 50);
}

TEST_CASE("figure1_graph") {
  const Graph g = figure1_graph();
  CHECK(g.order() == 16);
  CHECK(g.size() == 24);
  CHECK(degree_profile(g) == 3);
  CHECK(is_connected(g));
  CHECK(has_odd_simple_cycle(g));
  CHECK(bridges_by_deletion(g).size() == 3);
  CHECK(bridges(g) == bridges_by_deletion(g));
  CHECK_FALSE(brute_force_two_factor_exists(g));
}

TEST_CASE("fixtures") {
  const Graph p = fixture("petersen");
  CHECK(p.order() == 10);
  CHECK(degree_profile(p) == 3);
  CHECK(has_odd_simple_cycle(p));
  const Graph prism = fixture("prism");
  CHECK(prism.order() == 6);
  CHECK(degree_profile(prism) == 3);
  CHECK(edge_vector(fixture("c5")) == edge_vector(cycle_graph(5)));
  for (auto name : fixture_names()) {
    const Graph g = fixture(name);
    CHECK(degree_profile(g).has_value());
    CHECK(is_connected(g));
  }
  CHECK_FALSE(has_odd_simple_cycle(fixture("cube")));
  CHECK_FALSE(has_odd_simple_cycle(fixture("moebius-kantor")));
  CHECK(code_of([] { fixture("nope"); }) == Errc::UnknownFixture);
}

TEST_CASE("brute_force_even_spanning_tree: examples") {
  const Graph c5 = cycle_graph(5);
  const auto t = brute_force_even_spanning_tree(c5);
  REQUIRE(t.has_value());
  CHECK(t->size() == 4);
  CHECK(verify_spanning_even_tree(c5, *t).overall());

  CHECK_FALSE(brute_force_even_spanning_tree(cycle_graph(4)).has_value());

  const Graph k4 = complete_graph(4);
  const auto s = brute_force_even_spanning_tree(k4);
  REQUIRE(s.has_value());
  const auto deg = degrees_in(4, *s);
  CHECK(*std::max_element(deg.begin(), deg.end()) == 3);
}

TEST_CASE("brute_force_even_spanning_tree agrees with subset enumeration") {
  std::vector<Graph> graphs;
  for (const char* name : {"k4", "c4", "c5", "c6", "k5", "k33", "prism", "cube", "wagner", "petersen"}) {
    graphs.push_back(fixture(name));
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) graphs.push_back(random_regular({8, 3, seed, true, false}));
  for (const Graph& g : graphs) {
    const auto t = brute_force_even_spanning_tree(g);
    CHECK(t.has_value() == subset_even_tree(g));
    if (t) CHECK(verify_spanning_even_tree(g, *t).overall());
  }
}

TEST_CASE("count_spanning_trees matches the matrix-tree count") {
  CHECK(count_spanning_trees(complete_graph(4)) == 16);
  CHECK(count_spanning_trees(cycle_graph(4)) == 4);
  CHECK(count_spanning_trees(fixture("petersen")) == 2000);
  for (auto name : fixture_names()) {
    const Graph g = fixture(name);
    CHECK(count_spanning_trees(g) == static_cast<std::uint64_t>(matrix_tree_count(g)));
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_regular({12, 3, seed});
    CHECK(count_spanning_trees(g) == static_cast<std::uint64_t>(matrix_tree_count(g)));
  }
}

TEST_CASE("brute_force_two_factor_exists: examples and subset search") {
  CHECK(brute_force_two_factor_exists(complete_graph(4)));
  CHECK(brute_force_two_factor_exists(complete_graph(5)));
  CHECK_FALSE(brute_force_two_factor_exists(path_graph(4)));
  for (const char* name : {"k4", "c4", "c5", "k5", "k33", "prism", "cube", "wagner", "petersen"}) {
    const Graph g = fixture(name);
    CHECK(brute_force_two_factor_exists(g) == subset_two_factor(g));
  }
  // Two K4-minus-an-edge blocks joined by bridges.
  const Graph bridged = build_graph(10, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4},
                                                         {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}, {3, 8},
                                                         {7, 9}, {8, 9}});
  CHECK(brute_force_two_factor_exists(bridged) == subset_two_factor(bridged));
}

TEST_CASE("oracle budgets") {
  CHECK(code_of([] { brute_force_two_factor_exists(random_regular({22, 3, 0})); }) == Errc::BudgetExceeded);
  CHECK(code_of([] { brute_force_even_spanning_tree(random_regular({80, 3, 0})); }) == Errc::BudgetExceeded);
  CHECK(code_of([] { count_spanning_trees(random_regular({30, 3, 1})); }) == Errc::BudgetExceeded);
}

TEST_CASE("run_oracle: examples") {
  const OracleReport fig = run_oracle(figure1_graph());
  CHECK(fig.even_spanning_tree);
  CHECK_FALSE(fig.two_factor);
  const OracleReport c4 = run_oracle(cycle_graph(4));
  CHECK_FALSE(c4.even_spanning_tree);
  CHECK(c4.two_factor);
  const OracleReport k4 = run_oracle(complete_graph(4));
  CHECK(k4.even_spanning_tree);
  CHECK(k4.two_factor);
  CHECK(oracle_json(k4)["evenSpanningTree"] == true);
}
