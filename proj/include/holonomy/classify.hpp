#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "holonomy/contours.hpp"
#include "holonomy/converting.hpp"
#include "holonomy/digraph.hpp"
#include "holonomy/intervals.hpp"

namespace holonomy {

enum class GraphClassKind {
  H1Holonomic,
  H2BoundedHeteronomous,
  H3ProgressiveHeteronomous,
};

inline const char* to_string(GraphClassKind k) {
  switch (k) {
    case GraphClassKind::H1Holonomic: return "H1";
    case GraphClassKind::H2BoundedHeteronomous: return "H2";
    case GraphClassKind::H3ProgressiveHeteronomous: return "H3";
  }
  return "?";
}

/// Steps the cyclomatic number survives converting unchanged: infinite
/// (nullopt) for a graph without critical intervals, otherwise the minimum
/// critical-interval length. The first nu increase happens exactly one step
/// later.
inline std::optional<std::size_t> invariant_steps(const DiGraph& g) {
  if (!is_weakly_connected(g)) {
    raise(ErrorCode::NotConnected, "invariant_steps needs a connected graph");
  }
  std::vector<Interval> criticals = find_critical_intervals(g);
  if (criticals.empty()) return std::nullopt;
  std::size_t best = criticals.front().length;
  for (const Interval& interval : criticals) best = std::min(best, interval.length);
  return best;
}

struct Stabilization {
  std::size_t step = 0;
  long long nu = 0;
};

/// Iterates converting until the graph carries no critical interval and no
/// complicated vertex (from there nu is a permanent invariant), or the step
/// cap / vertex budget runs out (nullopt = not stabilized).
inline std::optional<Stabilization> stabilization_analysis(
    const DiGraph& g, std::size_t cap,
    std::size_t vertex_budget = kDefaultVertexBudget) {
  if (!is_weakly_connected(g)) {
    raise(ErrorCode::NotConnected, "stabilization needs a connected graph");
  }
  DiGraph current = g;
  for (std::size_t j = 0; j <= cap; ++j) {
    bool complicated = !is_canonical_graph(current);
    if (!complicated && find_critical_intervals(current).empty()) {
      return Stabilization{j, cyclomatic_formula(current)};
    }
    if (j == cap) break;
    if (current.edge_count() + 2 > vertex_budget) return std::nullopt;
    current = convert_step(current).graph;
  }
  return std::nullopt;
}

/// Class report: H3 iff a live contour exists, else H2 iff critical intervals
/// exist, else H1. j_max = minimum critical length (absent for H1). The
/// stabilization step is populated for convertible H2 inputs. Graphs whose
/// only cycles are deadlock / fictitious / isolated contours fall outside the
/// examined theory and are flagged rather than rejected.
struct ClassReport {
  GraphClassKind cls = GraphClassKind::H1Holonomic;
  std::vector<Interval> critical_intervals;
  ContourSet contours;
  std::optional<std::size_t> j_max;
  std::optional<std::size_t> stabilization_step;
  std::optional<long long> stabilized_nu;
  bool outside_paper_scope = false;
};

inline ClassReport classify_graph(const DiGraph& g,
                                  std::size_t circuit_cap = kDefaultCircuitCap,
                                  std::size_t stabilization_cap_hint = 0) {
  if (!is_weakly_connected(g)) {
    raise(ErrorCode::NotConnected, "classification needs a connected graph");
  }
  ClassReport report;
  report.critical_intervals = find_critical_intervals(g);
  report.contours = find_contours(g, circuit_cap);
  bool live = has_live_contour(g);

  if (!report.critical_intervals.empty()) {
    std::size_t best = report.critical_intervals.front().length;
    for (const Interval& i : report.critical_intervals) best = std::min(best, i.length);
    report.j_max = best;
  }

  if (live) {
    report.cls = GraphClassKind::H3ProgressiveHeteronomous;
  } else if (!report.critical_intervals.empty()) {
    report.cls = GraphClassKind::H2BoundedHeteronomous;
  } else {
    report.cls = GraphClassKind::H1Holonomic;
  }
  report.outside_paper_scope = !live && has_any_contour(g);

  if (report.cls == GraphClassKind::H2BoundedHeteronomous) {
    // Criticals shrink one edge per step, so 2n + 8 comfortably covers j_kp.
    std::size_t cap = stabilization_cap_hint > 0 ? stabilization_cap_hint
                                                 : 2 * g.vertex_count() + 8;
    try {
      if (auto stab = stabilization_analysis(g, cap)) {
        report.stabilization_step = stab->step;
        report.stabilized_nu = stab->nu;
      }
    } catch (const GraphError&) {
      // Not convertible (no unique terminals, etc.); leave the fields empty.
    }
  }
  return report;
}

}  // namespace holonomy
