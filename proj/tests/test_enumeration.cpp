#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "holonomy/enumeration.hpp"
#include "support/fixtures.hpp"

using namespace holonomy;

namespace {

/// Independent brute-force oracle: extend tuples one edge at a time.
std::vector<std::vector<std::string>> walks_bruteforce(const DiGraph& g,
                                                       std::size_t length) {
  std::set<std::vector<std::string>> current;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    current.insert({g.label(v)});
  }
  for (std::size_t step = 0; step < length; ++step) {
    std::set<std::vector<std::string>> next;
    for (const std::vector<std::string>& w : current) {
      VertexId tail = g.vertex(w.back());
      for (std::size_t e : g.out_edges(tail)) {
        std::vector<std::string> extended = w;
        extended.push_back(g.label(g.edge(e).head));
        next.insert(std::move(extended));
      }
    }
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

std::set<std::vector<std::string>> closed_bruteforce(const DiGraph& g,
                                                     std::size_t max_length) {
  std::set<std::vector<std::string>> classes;
  for (std::size_t length = 1; length <= max_length; ++length) {
    for (const std::vector<std::string>& w : walks_bruteforce(g, length)) {
      if (w.front() == w.back()) {
        classes.insert(detail::canonical_rotation(w));
      }
    }
  }
  return classes;
}

}  // namespace

TEST_CASE("DFS walks match brute force on the worked fixture") {
  DiGraph g = fixtures::hq1();
  for (std::size_t length : {0, 1, 2, 3, 4}) {
    WalkSet dfs = enumerate_walks_dfs(g, length);
    CHECK_FALSE(dfs.truncated);
    CHECK(dfs.walks == walks_bruteforce(g, length));
  }
}

TEST_CASE("walk enumeration via converting matches the DFS route") {
  DiGraph g = fixtures::hq1();
  for (std::size_t length : {0, 1, 2, 3, 4, 5}) {
    WalkSet via = enumerate_walks_via_converting(g, length);
    WalkSet dfs = enumerate_walks_dfs(g, length);
    CHECK(via.walks == dfs.walks);
  }
}

TEST_CASE("the fourteen length-2 walks come out in lexicographic order") {
  WalkSet set = enumerate_walks_dfs(fixtures::hq1(), 2);
  REQUIRE(set.walks.size() == 14);
  CHECK(set.walks.front() == std::vector<std::string>{"A", "B", "C"});
  CHECK(std::is_sorted(set.walks.begin(), set.walks.end()));
}

TEST_CASE("length-0 walks are the vertices themselves") {
  WalkSet set = enumerate_walks_via_converting(fixtures::hq1(), 0);
  CHECK(set.walks.size() == 7);
}

TEST_CASE("a DAG has no very long walks") {
  WalkSet set = enumerate_walks_dfs(fixtures::hq1(), 99);
  CHECK(set.walks.empty());
  CHECK_FALSE(set.truncated);
}

TEST_CASE("closed walks on a 3-cycle") {
  DiGraph g = fixtures::elementary_cycle(3);
  WalkSet set = enumerate_contours(g, 3);
  REQUIRE(set.walks.size() == 1);
  CHECK(set.walks[0] == std::vector<std::string>{"v0", "v1", "v2", "v0"});
  WalkSet dfs3 = enumerate_walks_dfs(g, 3);
  CHECK(dfs3.walks.size() == 3);  // one closed walk per starting vertex
}

TEST_CASE("contours match brute force on fixtures") {
  for (std::size_t max_length : {3, 6}) {
    for (const DiGraph& g : {fixtures::live_contour(), fixtures::elementary_cycle(3),
                             fixtures::complete_digraph3()}) {
      WalkSet set = enumerate_contours(g, max_length);
      std::set<std::vector<std::string>> got(set.walks.begin(), set.walks.end());
      CHECK(got == closed_bruteforce(g, max_length));
    }
  }
}

TEST_CASE("the live-contour fixture has its cycle at length 3 only") {
  DiGraph g = fixtures::live_contour();
  CHECK(enumerate_contours(g, 2).walks.empty());
  WalkSet set = enumerate_contours(g, 3);
  REQUIRE(set.walks.size() == 1);
  CHECK(set.walks[0] == std::vector<std::string>{"a", "b", "c", "a"});
}

TEST_CASE("converting route agrees on closed walks of one length") {
  DiGraph g = fixtures::live_contour();
  WalkSet via = enumerate_contours_via_converting(g, 3);
  REQUIRE(via.walks.size() == 1);
  CHECK(via.walks[0] == std::vector<std::string>{"a", "b", "c", "a"});
}

TEST_CASE("the worked fixture is acyclic: no contours") {
  CHECK(enumerate_contours(fixtures::hq1(), 10).walks.empty());
}

TEST_CASE("hamiltonian circuits of the fixtures") {
  CHECK(hamiltonian_circuits(fixtures::hq1()).walks.empty());
  WalkSet cycle = hamiltonian_circuits(fixtures::elementary_cycle(3));
  REQUIRE(cycle.walks.size() == 1);
  CHECK(cycle.walks[0] == std::vector<std::string>{"v0", "v1", "v2", "v0"});
  WalkSet complete = hamiltonian_circuits(fixtures::complete_digraph3());
  REQUIRE(complete.walks.size() == 2);
  CHECK(complete.walks[0] == std::vector<std::string>{"a", "b", "c", "a"});
  CHECK(complete.walks[1] == std::vector<std::string>{"a", "c", "b", "a"});
}

TEST_CASE("oracle equivalence holds on a random corpus") {
  std::mt19937_64 rng(7501);
  for (int trial = 0; trial < 25; ++trial) {
    fixtures::RandomGraphOptions opt;
    opt.max_vertices = 8;
    opt.max_back_edges = trial % 2 == 0 ? 1 : 0;
    DiGraph g = fixtures::random_quasicanonical(rng, opt);
    for (std::size_t length = 0; length <= 6; ++length) {
      WalkSet via = enumerate_walks_via_converting(g, length);
      WalkSet dfs = enumerate_walks_dfs(g, length);
      CHECK(via.walks == dfs.walks);
      // Count law: sentinel-free vertices at step `length`.
      ConvertTrajectory traj = iterate_convert(g, length);
      std::size_t clean = 0;
      for (const TupleLabel& t : labels_at_step(traj, length)) {
        if (!has_sentinel(t)) ++clean;
      }
      CHECK(clean == via.walks.size());
    }
  }
}

TEST_CASE("budgets truncate deterministically and monotonically") {
  DiGraph g = fixtures::hq1();
  WalkSet full = enumerate_walks_dfs(g, 3);
  WalkSet small = enumerate_walks_dfs(g, 3, 10);
  CHECK(small.truncated);
  REQUIRE(small.walks.size() <= full.walks.size());
  for (std::size_t i = 0; i < small.walks.size(); ++i) {
    CHECK(small.walks[i] == full.walks[i]);
  }
  WalkSet bigger = enumerate_walks_dfs(g, 3, 20);
  REQUIRE(bigger.walks.size() >= small.walks.size());
  for (std::size_t i = 0; i < small.walks.size(); ++i) {
    CHECK(bigger.walks[i] == small.walks[i]);
  }
}

TEST_CASE("closed-walk consistency: contours appear among walks") {
  DiGraph g = fixtures::complete_digraph3();
  WalkSet walks3 = enumerate_walks_dfs(g, 3);
  for (const std::vector<std::string>& contour : enumerate_contours(g, 3).walks) {
    if (contour.size() != 4) continue;
    bool found = false;
    for (const std::vector<std::string>& w : walks3.walks) {
      if (w.front() == w.back() &&
          detail::canonical_rotation(w) == contour) {
        found = true;
      }
    }
    CHECK(found);
  }
}
