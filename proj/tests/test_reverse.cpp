#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "holonomy/converting.hpp"
#include "holonomy/reverse.hpp"
#include "support/fixtures.hpp"
#include "support/isomorphism.hpp"

using namespace holonomy;

TEST_CASE("reverse undoes the line graph of the worked fixture") {
  DiGraph g = fixtures::hq1();
  DiGraph back = reverse_convert(line_graph(g).graph);
  CHECK(fixtures::edge_correspondence_isomorphic(g, back));
}

TEST_CASE("reverse of a 3-cycle is a 3-cycle") {
  DiGraph cycle = fixtures::elementary_cycle(3);
  DiGraph back = reverse_convert(cycle);
  CHECK(back.vertex_count() == 3);
  CHECK(back.edge_count() == 3);
  CHECK(fixtures::edge_correspondence_isomorphic(cycle, line_graph(back).graph));
}

TEST_CASE("overlapping non-equal fans are rejected with a witness") {
  DiGraph g;
  g.add_edge("u", "x");
  g.add_edge("u", "y");
  g.add_edge("v", "y");
  g.add_edge("v", "z");
  try {
    reverse_convert(g);
    FAIL("expected NotALineDigraph");
  } catch (const GraphError& e) {
    CHECK(e.code() == ErrorCode::NotALineDigraph);
    CHECK(std::string(e.what()).find("'u'") != std::string::npos);
    CHECK(std::string(e.what()).find("'v'") != std::string::npos);
  }
}

TEST_CASE("round-trip holds on random single-source single-sink graphs") {
  std::mt19937_64 rng(7301);
  for (int trial = 0; trial < 60; ++trial) {
    fixtures::RandomGraphOptions opt;
    opt.max_back_edges = trial % 2 == 0 ? 2 : 0;
    DiGraph g = fixtures::random_quasicanonical(rng, opt);
    DiGraph lg = line_graph(g).graph;
    DiGraph back = reverse_convert(lg);
    CHECK(fixtures::edge_correspondence_isomorphic(g, back));
  }
}

TEST_CASE("reverse keeps converted terminals as degree-1 vertices") {
  DiGraph step1 = convert_step(fixtures::hq1()).graph;
  DiGraph back = reverse_convert(step1);
  // The worked fixture plus a pendant source and sink.
  CHECK(back.vertex_count() == 9);
  CHECK(back.edge_count() == 12);
  std::size_t pendants = 0;
  for (VertexId v = 0; v < back.vertex_count(); ++v) {
    if (back.indeg(v) + back.outdeg(v) == 1) ++pendants;
  }
  CHECK(pendants == 2);
}

TEST_CASE("reverse depth of a cycle is only bounded by the cap") {
  CHECK(reverse_depth(fixtures::elementary_cycle(3), 4) == 4);
}

TEST_CASE("reverse depth of the worked fixture is zero") {
  // B and C share successor D without sharing their whole fan.
  CHECK(reverse_depth(fixtures::hq1(), 5) == 0);
}

TEST_CASE("three converting steps can be reversed three times") {
  ConvertTrajectory traj = iterate_convert(fixtures::hq1(), 3);
  CHECK(reverse_depth(traj.step(3).graph, 5) == 3);
}

TEST_CASE("reverse rejects disconnected and too-small inputs") {
  DiGraph disconnected;
  disconnected.add_edge("a", "b");
  disconnected.add_edge("c", "d");
  CHECK_THROWS_MATCHES(reverse_convert(disconnected), GraphError,
                       Catch::Matchers::Predicate<GraphError>([](const GraphError& e) {
                         return e.code() == ErrorCode::NotConnected;
                       }));
  DiGraph single;
  single.add_edge("a", "b");
  CHECK_THROWS_AS(reverse_convert(single), GraphError);
}

TEST_CASE("parallel edges are not a line digraph") {
  DiGraph g;
  g.add_edge("a", "b");
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  CHECK_THROWS_MATCHES(reverse_convert(g), GraphError,
                       Catch::Matchers::Predicate<GraphError>([](const GraphError& e) {
                         return e.code() == ErrorCode::NotALineDigraph;
                       }));
}
