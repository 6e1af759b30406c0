#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "holonomy/digraph.hpp"
#include "holonomy/matrix_form.hpp"

namespace holonomy {

inline constexpr std::size_t kDefaultVertexBudget = 1'000'000;

/// Origin of one output vertex of a converting step.
///  - FromEdge: the vertex stands for input edge `edge` = (tail -> head).
///  - NewInitial: the appended initial terminal; `head` is the input graph's
///    unique initial vertex.
///  - NewFinal: the appended final terminal; `tail` is the input graph's
///    unique final vertex.
struct Provenance {
  enum class Kind { FromEdge, NewInitial, NewFinal };
  Kind kind = Kind::FromEdge;
  std::size_t edge = 0;
  VertexId tail = 0;
  VertexId head = 0;
};

using ProvenanceMap = std::vector<Provenance>;

struct ConvertResult {
  DiGraph graph;
  ProvenanceMap provenance;
};

namespace detail {

/// Smallest terminal index not used by any `#w<k>` / `#f<k>` label of g, so
/// that reloaded converted graphs keep getting fresh sentinels.
inline std::size_t next_sentinel_index(const DiGraph& g) {
  std::size_t next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::string& s = g.label(v);
    if (s.size() < 3 || s[0] != '#') continue;
    if (s[1] != 'w' && s[1] != 'f') continue;
    bool digits = true;
    for (std::size_t i = 2; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        digits = false;
        break;
      }
    }
    if (!digits) continue;
    std::size_t k = std::stoul(s.substr(2));
    if (k + 1 > next) next = k + 1;
  }
  return next;
}

inline bool is_sentinel_label(const std::string& s) { return !s.empty() && s[0] == '#'; }

}  // namespace detail

/// Directed line graph. Output vertex i stands for input edge i; output has
/// an edge (i -> j) exactly when head(edge i) == tail(edge j). Output edges
/// are ordered lexicographically by (source ordinal, target ordinal).
inline ConvertResult line_graph(const DiGraph& g) {
  if (g.edge_count() == 0) {
    raise(ErrorCode::EmptyGraph, "line graph needs at least one edge");
  }
  if (g.has_self_loop()) {
    raise(ErrorCode::SelfLoop, "line graph rejects self-loops");
  }
  ConvertResult result;
  std::size_t m = g.edge_count();
  for (std::size_t e = 0; e < m; ++e) {
    result.graph.add_vertex("q" + std::to_string(e));
    const Edge& edge = g.edge(e);
    result.provenance.push_back(
        Provenance{Provenance::Kind::FromEdge, e, edge.tail, edge.head});
  }
  for (std::size_t e = 0; e < m; ++e) {
    VertexId mid = g.edge(e).head;
    for (std::size_t f : g.out_edges(mid)) {
      result.graph.add_edge(static_cast<VertexId>(e), static_cast<VertexId>(f));
    }
  }
  return result;
}

/// One straight-converting step: the line graph of g plus a fresh initial
/// terminal feeding the vertex of g's unique initial edge and a fresh final
/// terminal fed by the vertex of g's unique final edge, so n_out = m_in + 2
/// and the operation can be iterated.
///
/// Preconditions: g at least quasicanonical, exactly one initial and one
/// final vertex, no self-loops.
inline ConvertResult convert_step(const DiGraph& g) {
  if (g.edge_count() == 0) {
    raise(ErrorCode::EmptyGraph, "converting needs at least one edge");
  }
  if (g.has_self_loop()) {
    raise(ErrorCode::SelfLoop, "converting rejects self-loops");
  }
  MatrixForm mf = classify_matrix(g);
  if (!at_least_quasicanonical(mf)) {
    std::string reasons;
    for (Requirement r : mf.violations) {
      if (!reasons.empty()) reasons += ", ";
      reasons += to_string(r);
    }
    raise(ErrorCode::NotQuasicanonical,
          "adjacency matrix violates: " + reasons);
  }
  std::vector<VertexId> initials;
  std::vector<VertexId> finals;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.indeg(v) == 0) initials.push_back(v);
    if (g.outdeg(v) == 0) finals.push_back(v);
  }
  if (initials.size() != 1 || finals.size() != 1) {
    raise(ErrorCode::NoUniqueTerminals,
          "need exactly one initial and one final vertex, found " +
              std::to_string(initials.size()) + " / " +
              std::to_string(finals.size()));
  }
  // Quasicanonical form pins the terminal degrees to 1, so these are unique.
  std::size_t initial_edge = g.out_edges(initials[0])[0];
  std::size_t final_edge = g.in_edges(finals[0])[0];

  std::size_t k = detail::next_sentinel_index(g);
  std::size_t m = g.edge_count();

  ConvertResult result;
  VertexId omega = result.graph.add_vertex("#w" + std::to_string(k));
  result.provenance.push_back(
      Provenance{Provenance::Kind::NewInitial, 0, 0, initials[0]});
  for (std::size_t e = 0; e < m; ++e) {
    result.graph.add_vertex("q" + std::to_string(e));
    const Edge& edge = g.edge(e);
    result.provenance.push_back(
        Provenance{Provenance::Kind::FromEdge, e, edge.tail, edge.head});
  }
  VertexId phi = result.graph.add_vertex("#f" + std::to_string(k));
  result.provenance.push_back(
      Provenance{Provenance::Kind::NewFinal, 0, finals[0], 0});

  auto line_vertex = [](std::size_t e) { return static_cast<VertexId>(e + 1); };
  result.graph.add_edge(omega, line_vertex(initial_edge));
  for (std::size_t e = 0; e < m; ++e) {
    VertexId mid = g.edge(e).head;
    for (std::size_t f : g.out_edges(mid)) {
      result.graph.add_edge(line_vertex(e), line_vertex(f));
    }
    if (e == final_edge) result.graph.add_edge(line_vertex(e), phi);
  }
  return result;
}

struct TrajectoryStep {
  DiGraph graph;
  std::size_t n = 0;
  std::size_t m = 0;
  long long nu = 0;
  ProvenanceMap provenance;  // empty at step 0
  MatrixForm matrix_form;
};

/// Per-step records of iterated converting. Exact invariants, tested:
///   n_{j+1} = m_j + 2 and  dn_{j+1} = dn_j + dnu_j.
struct ConvertTrajectory {
  std::vector<TrajectoryStep> steps;

  const TrajectoryStep& step(std::size_t j) const { return steps.at(j); }
  std::size_t step_count() const { return steps.size(); }
};

inline ConvertTrajectory iterate_convert(
    const DiGraph& g, std::size_t steps,
    std::size_t vertex_budget = kDefaultVertexBudget) {
  ConvertTrajectory traj;
  traj.steps.push_back(TrajectoryStep{g, g.vertex_count(), g.edge_count(),
                                      cyclomatic_formula(g), ProvenanceMap{},
                                      classify_matrix(g)});
  for (std::size_t j = 1; j <= steps; ++j) {
    const DiGraph& prev = traj.steps.back().graph;
    if (prev.edge_count() + 2 > vertex_budget) {
      raise(ErrorCode::StepBudgetExceeded,
            "step " + std::to_string(j) + " would need " +
                std::to_string(prev.edge_count() + 2) +
                " vertices (budget " + std::to_string(vertex_budget) + ")");
    }
    ConvertResult next;
    try {
      next = convert_step(prev);
    } catch (const GraphError& err) {
      raise(err.code(), "step " + std::to_string(j) + ": " + err.what());
    }
    TrajectoryStep record;
    record.n = next.graph.vertex_count();
    record.m = next.graph.edge_count();
    record.nu = cyclomatic_formula(next.graph);
    record.matrix_form = classify_matrix(next.graph);
    record.provenance = std::move(next.provenance);
    record.graph = std::move(next.graph);
    traj.steps.push_back(std::move(record));
  }
  return traj;
}

/// Ordered vertex tuple over the step-0 graph, with `#w<k>` / `#f<k>`
/// sentinel tokens for appended terminals. A step-j vertex decodes to
/// exactly j+1 tokens; sentinels only ever pad the ends.
using TupleLabel = std::vector<std::string>;

namespace detail {

inline TupleLabel merge_overlap(const TupleLabel& a, const TupleLabel& b) {
  std::size_t max_k = std::min(a.size(), b.size());
  std::size_t overlap = 0;
  for (std::size_t k = max_k; k > 0; --k) {
    bool match = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (a[a.size() - k + i] != b[i]) {
        match = false;
        break;
      }
    }
    if (match) {
      overlap = k;
      break;
    }
  }
  TupleLabel merged = a;
  merged.insert(merged.end(), b.begin() + overlap, b.end());
  return merged;
}

}  // namespace detail

/// Tuple labels of every vertex of trajectory step `step`.
inline std::vector<TupleLabel> labels_at_step(const ConvertTrajectory& traj,
                                              std::size_t step) {
  if (step >= traj.step_count()) {
    raise(ErrorCode::UnknownVertex,
          "trajectory has no step " + std::to_string(step));
  }
  std::vector<TupleLabel> current;
  const DiGraph& base = traj.steps[0].graph;
  current.reserve(base.vertex_count());
  for (VertexId v = 0; v < base.vertex_count(); ++v) {
    current.push_back(TupleLabel{base.label(v)});
  }
  for (std::size_t j = 1; j <= step; ++j) {
    const TrajectoryStep& record = traj.steps[j];
    const DiGraph& graph = record.graph;
    std::vector<TupleLabel> next(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
      const Provenance& p = record.provenance[v];
      switch (p.kind) {
        case Provenance::Kind::FromEdge:
          next[v] = detail::merge_overlap(current[p.tail], current[p.head]);
          break;
        case Provenance::Kind::NewInitial: {
          TupleLabel t{graph.label(v)};
          t.insert(t.end(), current[p.head].begin(), current[p.head].end());
          next[v] = std::move(t);
          break;
        }
        case Provenance::Kind::NewFinal: {
          TupleLabel t = current[p.tail];
          t.push_back(graph.label(v));
          next[v] = std::move(t);
          break;
        }
      }
    }
    current = std::move(next);
  }
  return current;
}

inline TupleLabel decode_label(const ConvertTrajectory& traj, std::size_t step,
                               VertexId v) {
  std::vector<TupleLabel> all = labels_at_step(traj, step);
  if (v >= all.size()) {
    raise(ErrorCode::UnknownVertex,
          "step " + std::to_string(step) + " has no vertex id " +
              std::to_string(v));
  }
  return all[v];
}

inline bool has_sentinel(const TupleLabel& t) {
  for (const std::string& token : t) {
    if (detail::is_sentinel_label(token)) return true;
  }
  return false;
}

/// Predicted vertex counts from the recurrence n_{j+1} = n_j + nu_j + 1.
/// Output is parallel to nu_sequence: entry 0 is n0, entry j the count after
/// j steps. With constant nu this is the arithmetic progression with step
/// nu + 1.
inline std::vector<std::size_t> predict_counts(
    std::size_t n0, std::size_t m0, const std::vector<long long>& nu_sequence) {
  long long seed = static_cast<long long>(m0) - static_cast<long long>(n0) + 1;
  if (nu_sequence.empty() || nu_sequence.front() != seed) {
    raise(ErrorCode::InconsistentSeed,
          "nu_sequence[0] must equal m0 - n0 + 1 = " + std::to_string(seed));
  }
  std::vector<std::size_t> counts;
  counts.reserve(nu_sequence.size());
  long long n = static_cast<long long>(n0);
  counts.push_back(n0);
  for (std::size_t j = 1; j < nu_sequence.size(); ++j) {
    n += nu_sequence[j - 1] + 1;
    if (n < 0) {
      raise(ErrorCode::InconsistentSeed, "count recurrence went negative");
    }
    counts.push_back(static_cast<std::size_t>(n));
  }
  return counts;
}

}  // namespace holonomy
