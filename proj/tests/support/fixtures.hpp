#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "holonomy/classify.hpp"
#include "holonomy/converting.hpp"
#include "holonomy/digraph.hpp"
#include "holonomy/matrix_form.hpp"

namespace fixtures {

using namespace holonomy;

/// The 7-vertex, 10-edge quasicanonical DAG used across the suite: one
/// source A, one sink G, one complicated vertex D, cyclomatic number 4.
inline DiGraph hq1() {
  DiGraph g;
  for (const char* l : {"A", "B", "C", "D", "E", "F", "G"}) g.add_vertex(l);
  const std::pair<const char*, const char*> edges[] = {
      {"A", "B"}, {"B", "C"}, {"B", "D"}, {"B", "F"}, {"C", "D"},
      {"C", "E"}, {"D", "E"}, {"D", "F"}, {"E", "F"}, {"F", "G"},
  };
  for (auto [t, h] : edges) g.add_edge(g.vertex(t), g.vertex(h));
  return g;
}

/// Out-fan followed by in-fan: every fan-out precedes every fan-in, so the
/// graph is holonomic.
inline DiGraph h1_fan_fan() {
  DiGraph g;
  g.add_edge("s", "a");
  g.add_edge("a", "b1");
  g.add_edge("a", "b2");
  g.add_edge("b1", "c");
  g.add_edge("b2", "c");
  g.add_edge("c", "t");
  return g;
}

/// Cycle with one entry and one exit: a live contour, the minimal
/// progressive-heteronomous fixture. Critical interval a -> b, length 1.
inline DiGraph live_contour() {
  DiGraph g;
  g.add_edge("s", "a");
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  g.add_edge("c", "a");
  g.add_edge("b", "t");
  return g;
}

/// Cycle with an entry but no exit (contour-trap) hanging off a plain path.
inline DiGraph deadlock_contour() {
  DiGraph g;
  g.add_edge("s", "x");
  g.add_edge("x", "a");
  g.add_edge("x", "t");
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  g.add_edge("c", "a");
  return g;
}

/// Cycle with an exit but no entry.
inline DiGraph fictitious_contour() {
  DiGraph g;
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  g.add_edge("c", "a");
  g.add_edge("b", "t");
  return g;
}

inline DiGraph elementary_cycle(std::size_t k = 3) {
  DiGraph g;
  for (std::size_t i = 0; i < k; ++i) g.add_vertex("v" + std::to_string(i));
  for (std::size_t i = 0; i < k; ++i) {
    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % k));
  }
  return g;
}

inline DiGraph complete_digraph3() {
  DiGraph g;
  for (const char* l : {"a", "b", "c"}) g.add_vertex(l);
  for (VertexId i = 0; i < 3; ++i) {
    for (VertexId j = 0; j < 3; ++j) {
      if (i != j) g.add_edge(i, j);
    }
  }
  return g;
}

struct RandomGraphOptions {
  std::size_t min_vertices = 4;
  std::size_t max_vertices = 10;
  std::size_t max_extra_edges = 4;
  std::size_t max_back_edges = 0;  // > 0 allows cycles
};

/// Random connected quasicanonical digraph with exactly one source (outdeg 1)
/// and one sink (indeg 1): a chain v0 -> ... -> v_{n-1} plus forward extras
/// between interior vertices and optional back edges. All such graphs are
/// convertible and stay quasicanonical under converting.
inline DiGraph random_quasicanonical(std::mt19937_64& rng,
                                     const RandomGraphOptions& opt = {}) {
  std::uniform_int_distribution<std::size_t> size_dist(opt.min_vertices,
                                                       opt.max_vertices);
  std::size_t n = size_dist(rng);
  DiGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  std::set<std::pair<VertexId, VertexId>> used;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    used.insert({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  }
  // Interior vertices are v1..v_{n-2}; the source keeps outdeg 1 and the
  // sink keeps indeg 1.
  std::uniform_int_distribution<std::size_t> extra_dist(0, opt.max_extra_edges);
  std::size_t extras = extra_dist(rng);
  std::uniform_int_distribution<std::size_t> interior(1, n - 2);
  for (std::size_t k = 0; k < extras; ++k) {
    std::size_t a = interior(rng);
    std::size_t b = interior(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    auto key = std::make_pair(static_cast<VertexId>(a), static_cast<VertexId>(b));
    if (used.count(key)) continue;
    used.insert(key);
    g.add_edge(key.first, key.second);
  }
  if (opt.max_back_edges > 0) {
    std::uniform_int_distribution<std::size_t> back_dist(0, opt.max_back_edges);
    std::size_t backs = back_dist(rng);
    for (std::size_t k = 0; k < backs; ++k) {
      std::size_t a = interior(rng);
      std::size_t b = interior(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      auto key = std::make_pair(static_cast<VertexId>(b), static_cast<VertexId>(a));
      if (used.count(key)) continue;
      used.insert(key);
      g.add_edge(key.first, key.second);
    }
  }
  return g;
}

/// Rejection-sample until the classifier lands on `want`.
inline DiGraph random_of_class(std::mt19937_64& rng, GraphClassKind want,
                               std::size_t max_tries = 10000) {
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    RandomGraphOptions opt;
    opt.max_back_edges = (want == GraphClassKind::H3ProgressiveHeteronomous) ? 2 : 0;
    if (want == GraphClassKind::H1Holonomic) opt.max_extra_edges = 2;
    DiGraph g = random_quasicanonical(rng, opt);
    ClassReport report = classify_graph(g);
    if (report.cls == want) return g;
  }
  throw std::runtime_error("could not sample requested graph class");
}

}  // namespace fixtures
