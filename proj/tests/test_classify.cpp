#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "holonomy/classify.hpp"
#include "support/fixtures.hpp"

using namespace holonomy;

TEST_CASE("the worked fixture is bounded-heteronomous with j_max 0") {
  ClassReport report = classify_graph(fixtures::hq1());
  CHECK(report.cls == GraphClassKind::H2BoundedHeteronomous);
  REQUIRE(report.j_max.has_value());
  CHECK(*report.j_max == 0);
  CHECK_FALSE(report.outside_paper_scope);
  REQUIRE(report.stabilization_step.has_value());
  CHECK(*report.stabilization_step == 1);
  CHECK(*report.stabilized_nu == 5);
}

TEST_CASE("fan-out before fan-in is holonomic") {
  ClassReport report = classify_graph(fixtures::h1_fan_fan());
  CHECK(report.cls == GraphClassKind::H1Holonomic);
  CHECK_FALSE(report.j_max.has_value());
  // The cyclomatic number stays put over six converting steps.
  ConvertTrajectory traj = iterate_convert(fixtures::h1_fan_fan(), 6);
  for (const TrajectoryStep& s : traj.steps) CHECK(s.nu == traj.step(0).nu);
}

TEST_CASE("a live contour makes the graph progressive-heteronomous") {
  ClassReport report = classify_graph(fixtures::live_contour());
  CHECK(report.cls == GraphClassKind::H3ProgressiveHeteronomous);
  REQUIRE(report.j_max.has_value());
  CHECK(*report.j_max == 1);
  ConvertTrajectory traj = iterate_convert(fixtures::live_contour(), 6);
  CHECK(traj.step(6).nu > traj.step(0).nu);
}

TEST_CASE("classification requires a connected graph") {
  DiGraph g;
  g.add_edge("a", "b");
  g.add_edge("c", "d");
  CHECK_THROWS_MATCHES(classify_graph(g), GraphError,
                       Catch::Matchers::Predicate<GraphError>([](const GraphError& e) {
                         return e.code() == ErrorCode::NotConnected;
                       }));
}

TEST_CASE("deadlock-only cycles are flagged outside the examined theory") {
  ClassReport report = classify_graph(fixtures::deadlock_contour());
  CHECK(report.cls == GraphClassKind::H1Holonomic);
  CHECK(report.outside_paper_scope);
  // Per the theory's margin note such graphs still behave holonomically.
  ConvertTrajectory traj = iterate_convert(fixtures::deadlock_contour(), 6);
  for (const TrajectoryStep& s : traj.steps) CHECK(s.nu == traj.step(0).nu);
}

TEST_CASE("fictitious-only cycles are flagged too") {
  ClassReport report = classify_graph(fixtures::fictitious_contour());
  CHECK(report.cls == GraphClassKind::H1Holonomic);
  CHECK(report.outside_paper_scope);
}

TEST_CASE("invariant steps of the fixtures") {
  CHECK(invariant_steps(fixtures::hq1()) == std::size_t{0});
  CHECK(invariant_steps(fixtures::live_contour()) == std::size_t{1});
  CHECK_FALSE(invariant_steps(fixtures::h1_fan_fan()).has_value());
}

TEST_CASE("invariant steps equal the last stable step of the trajectory") {
  std::mt19937_64 rng(7401);
  for (int trial = 0; trial < 20; ++trial) {
    fixtures::RandomGraphOptions opt;
    opt.max_back_edges = trial % 2 == 0 ? 1 : 0;
    DiGraph g = fixtures::random_quasicanonical(rng, opt);
    std::optional<std::size_t> inv = invariant_steps(g);
    ConvertTrajectory traj = iterate_convert(g, 11);
    std::size_t first_increase = traj.step_count();
    for (std::size_t j = 1; j < traj.step_count(); ++j) {
      if (traj.step(j).nu > traj.step(j - 1).nu) {
        first_increase = j;
        break;
      }
    }
    if (inv.has_value() && *inv + 1 < traj.step_count()) {
      CHECK(first_increase == *inv + 1);
    } else {
      CHECK(first_increase == traj.step_count());
    }
  }
}

TEST_CASE("stabilization of the worked fixture happens at step 1") {
  auto stab = stabilization_analysis(fixtures::hq1(), 6);
  REQUIRE(stab.has_value());
  CHECK(stab->step == 1);
  CHECK(stab->nu == 5);
}

TEST_CASE("holonomic graphs are stabilized from the start") {
  auto stab = stabilization_analysis(fixtures::h1_fan_fan(), 6);
  REQUIRE(stab.has_value());
  CHECK(stab->step == 0);
  CHECK(stab->nu == cyclomatic_number(fixtures::h1_fan_fan()));
}

TEST_CASE("live contours never stabilize") {
  CHECK_FALSE(stabilization_analysis(fixtures::live_contour(), 8).has_value());
}

TEST_CASE("classes match their defining evidence") {
  std::mt19937_64 rng(7402);
  for (int trial = 0; trial < 30; ++trial) {
    fixtures::RandomGraphOptions opt;
    opt.max_back_edges = trial % 3 == 0 ? 2 : 0;
    DiGraph g = fixtures::random_quasicanonical(rng, opt);
    ClassReport report = classify_graph(g);
    bool live = has_live_contour(g);
    bool criticals = !find_critical_intervals(g).empty();
    switch (report.cls) {
      case GraphClassKind::H3ProgressiveHeteronomous:
        CHECK(live);
        break;
      case GraphClassKind::H2BoundedHeteronomous:
        CHECK_FALSE(live);
        CHECK(criticals);
        break;
      case GraphClassKind::H1Holonomic:
        CHECK_FALSE(live);
        CHECK_FALSE(criticals);
        break;
    }
  }
}
