// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <deque>
#include <random>
#include <sstream>

#include "doctest.h"
#include "paulic/errors.hpp"
#include "paulic/topology.hpp"

using namespace paulic;

namespace {

// Independent BFS distance oracle over an exclusion-filtered graph.
int bfs_oracle(const CouplingGraph& g, int a, int b,
               const std::vector<char>& excluded) {
  std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
  std::deque<int> q{a};
  dist[static_cast<std::size_t>(a)] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : g.adj[static_cast<std::size_t>(u)]) {
      bool blocked =
          v != a && v != b && !excluded.empty() && excluded[static_cast<std::size_t>(v)];
      if (dist[static_cast<std::size_t>(v)] < 0 && !blocked) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push_back(v);
      }
    }
  }
  return dist[static_cast<std::size_t>(b)];
}

bool connected(const CouplingGraph& g) {
  std::vector<int> dist = bfs_distances(g, 0);
  return std::count_if(dist.begin(), dist.end(),
                       [](int d) { return d >= 0; }) == g.n;
}

}  // namespace

TEST_CASE("linear topology") {
  CouplingGraph g = make_linear(5);
  CHECK(g.n == 5);
  CHECK(g.edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("grid topology") {
  CouplingGraph g = make_grid(3, 3);
  CHECK(g.n == 9);
  CHECK(g.edges().size() == 12);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 3));
  CHECK(!g.has_edge(0, 4));
}

TEST_CASE("sycamore topology is a 64-node degree<=4 lattice") {
  CouplingGraph g = make_sycamore(8, 8);
  CHECK(g.n == 64);
  CHECK(connected(g));
  for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) <= 4);
}

TEST_CASE("heavy-hex distance 5 has 65 nodes with degree<=3") {
  CouplingGraph g = make_heavy_hex(5);
  CHECK(g.n == 65);
  CHECK(connected(g));
  for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) <= 3);
  CHECK_THROWS_AS(make_heavy_hex(4), ParseError);
}

TEST_CASE("coupling file round-trip and named builders") {
  CouplingGraph g = make_grid(2, 3);
  std::istringstream in(coupling_to_text(g));
  CouplingGraph h = load_coupling(in);
  CHECK(h.edges() == g.edges());
  CHECK(topology_by_name("linear:7", 1).n == 7);
  CHECK(topology_by_name("sycamore", 1).n == 64);
  CHECK(topology_by_name("heavyhex:5", 1).n == 65);
  CHECK_THROWS_AS(topology_by_name("nope", 1), ParseError);
}

TEST_CASE("shortest_path basics") {
  CouplingGraph lin = make_linear(5);
  CHECK(shortest_path(lin, 0, 4) == std::vector<int>{0, 1, 2, 3, 4});

  CouplingGraph grid = make_grid(3, 3);
  // Lexicographically smallest among all corner-to-corner shortest paths.
  CHECK(shortest_path(grid, 0, 8) == std::vector<int>{0, 1, 2, 5, 8});

  CouplingGraph tri = make_linear(3);
  std::vector<char> excl(3, 0);
  excl[1] = 1;
  CHECK_THROWS_AS(shortest_path(tri, 0, 2, excl), RoutingError);
  CHECK(excluded_distance(tri, 0, 2, excl) == -1);
}

TEST_CASE("shortest_path matches BFS oracle on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 60)(rng);
    CouplingGraph g = make_linear(n);  // spanning path keeps it connected
    std::uniform_int_distribution<int> node(0, n - 1);
    for (int e = 0; e < n; ++e) {
      int u = node(rng), v = node(rng);
      if (u != v) g.add_edge(u, v);
    }
    for (int q = 0; q < 10; ++q) {
      int a = node(rng), b = node(rng);
      if (a == b) continue;
      std::vector<char> excl(static_cast<std::size_t>(n), 0);
      for (int x = 0; x < n / 4; ++x) excl[static_cast<std::size_t>(node(rng))] = 1;
      int oracle = bfs_oracle(g, a, b, excl);
      CHECK(excluded_distance(g, a, b, excl) == oracle);
      if (oracle >= 0) {
        std::vector<int> path = shortest_path(g, a, b, excl);
        CHECK(static_cast<int>(path.size()) - 1 == oracle);
        CHECK(path.front() == a);
        CHECK(path.back() == b);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
          CHECK(g.has_edge(path[i], path[i + 1]));
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
          CHECK((path[i] == a || path[i] == b ||
                 !excl[static_cast<std::size_t>(path[i])]));
      }
    }
  }
}

TEST_CASE("mapping stays injective under swaps; liveness tracks zero state") {
  CouplingGraph g = make_grid(3, 3);
  Mapping m = Mapping::identity_bfs(g, 4);
  CHECK(m.n_logical() == 4);
  CHECK(m.n_phys() == 9);
  for (int q = 0; q < 4; ++q) CHECK(m.logical_at(m.phys_of(q)) == q);
  CHECK(m.zero_state(8));

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> edge(0, 11);
  auto edges = g.edges();
  for (int step = 0; step < 200; ++step) {
    auto [a, b] = edges[static_cast<std::size_t>(edge(rng))];
    m.apply_swap(a, b);
    std::vector<char> seen(9, 0);
    for (int q = 0; q < 4; ++q) {
      CHECK(m.logical_at(m.phys_of(q)) == q);
      CHECK(!seen[static_cast<std::size_t>(m.phys_of(q))]);
      seen[static_cast<std::size_t>(m.phys_of(q))] = 1;
    }
  }
  // Free qubits swapped around remain |0>-guaranteed until marked in use.
  int zeros = 0;
  for (int p = 0; p < 9; ++p) zeros += m.zero_state(p) ? 1 : 0;
  CHECK(zeros == 5);
}

TEST_CASE("from_vector rejects non-injective placements") {
  CHECK_THROWS_AS(Mapping::from_vector({0, 0}, 4), SynthesisError);
  CHECK_THROWS_AS(Mapping::from_vector({0, 9}, 4), SynthesisError);
  Mapping m = Mapping::from_vector({2, 0, 3}, 5);
  CHECK(m.phys_of(0) == 2);
  CHECK(m.logical_at(3) == 2);
}

TEST_CASE("find_center midpoint and exhaustive oracle") {
  CouplingGraph lin = make_linear(5);
  // Roots at the two ends of a path tie every node at distance sum 4;
  // the smallest-index rule picks node 0.
  Mapping m = Mapping::from_vector({0, 4}, 5);
  auto [center, paths] = find_center(lin, m, {0, 1});
  CHECK(center == 0);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].empty());
  CHECK(paths[1].size() == 5);

  // Off-center roots give a strict 1-median.
  Mapping m2 = Mapping::from_vector({1, 3}, 5);
  CHECK(find_center(lin, m2, {0, 1}).first == 1);

  Mapping single = Mapping::from_vector({3}, 5);
  auto [c1, p1] = find_center(lin, single, {0});
  CHECK(c1 == 3);
  CHECK(p1[0].empty());

  // 1-median oracle on a random connected graph.
  std::mt19937 rng(3);
  CouplingGraph g = make_linear(20);
  std::uniform_int_distribution<int> node(0, 19);
  for (int e = 0; e < 15; ++e) {
    int u = node(rng), v = node(rng);
    if (u != v) g.add_edge(u, v);
  }
  Mapping mm = Mapping::from_vector({1, 7, 18, 12}, 20);
  auto [c, ps] = find_center(g, mm, {0, 1, 2, 3});
  (void)ps;
  auto sum_at = [&](int p) {
    long s = 0;
    for (int q = 0; q < 4; ++q) s += bfs_distances(g, mm.phys_of(q))[p];
    return s;
  };
  for (int p = 0; p < 20; ++p) CHECK(sum_at(c) <= sum_at(p));
}
