#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "holonomy/digraph.hpp"

namespace holonomy {

/// Walk = edge-ordinal sequence; `start` carries the single vertex of a
/// zero-length walk. The paper-style "path" admits repeated vertices and
/// edges, so the artifact calls it a walk throughout.
struct Walk {
  VertexId start = 0;
  std::vector<std::size_t> edges;

  std::size_t length() const { return edges.size(); }
};

/// Vertex sequence v_0 ... v_L of a walk, validating the chain.
inline std::vector<VertexId> walk_vertices(const DiGraph& g, const Walk& w) {
  std::vector<VertexId> seq;
  seq.reserve(w.edges.size() + 1);
  if (!g.has_vertex(w.start)) {
    raise(ErrorCode::UnknownVertex, "walk start out of range");
  }
  seq.push_back(w.start);
  for (std::size_t e : w.edges) {
    if (e >= g.edge_count()) {
      raise(ErrorCode::BrokenChain, "edge ordinal " + std::to_string(e) + " out of range");
    }
    if (g.edge(e).tail != seq.back()) {
      raise(ErrorCode::BrokenChain,
            "edge " + std::to_string(e) + " does not continue the walk at '" +
                g.label(seq.back()) + "'");
    }
    seq.push_back(g.edge(e).head);
  }
  return seq;
}

/// Build a walk from a vertex sequence, picking the lowest-ordinal edge for
/// each consecutive pair.
inline Walk walk_from_vertices(const DiGraph& g, const std::vector<VertexId>& vertices) {
  if (vertices.empty()) raise(ErrorCode::BrokenChain, "empty vertex sequence");
  Walk w;
  w.start = vertices[0];
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    std::size_t found = g.edge_count();
    for (std::size_t e : g.out_edges(vertices[i - 1])) {
      if (g.edge(e).head == vertices[i]) {
        found = e;
        break;
      }
    }
    if (found == g.edge_count()) {
      raise(ErrorCode::BrokenChain,
            "no edge '" + g.label(vertices[i - 1]) + "' -> '" +
                g.label(vertices[i]) + "'");
    }
    w.edges.push_back(found);
  }
  return w;
}

inline Walk walk_from_labels(const DiGraph& g, const std::vector<std::string>& labels) {
  std::vector<VertexId> vertices;
  vertices.reserve(labels.size());
  for (const std::string& l : labels) vertices.push_back(g.vertex(l));
  return walk_from_vertices(g, vertices);
}

struct ProfileEntry {
  std::size_t position = 0;
  VertexKind kind = VertexKind::Elementary;
  std::size_t indeg = 0;
  std::size_t outdeg = 0;
};

/// Per-position degree profile; a vertex visited twice gets two independent
/// positions. prefix_sums[i] = sum over positions <= i of (indeg - outdeg).
struct WalkProfile {
  std::vector<ProfileEntry> entries;
  std::vector<long long> prefix_sums;
};

inline WalkProfile walk_profile(const DiGraph& g, const Walk& w) {
  std::vector<VertexId> seq = walk_vertices(g, w);
  WalkProfile profile;
  long long running = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    DegreeSignature d = degree_signature(g, seq[i]);
    profile.entries.push_back(ProfileEntry{i, kind_of(d), d.indeg, d.outdeg});
    running += static_cast<long long>(d.indeg) - static_cast<long long>(d.outdeg);
    profile.prefix_sums.push_back(running);
  }
  return profile;
}

/// Interval codes. Critical is the shrinking kind: it loses one edge per
/// converting step and spawns a complicated vertex at length zero. Safe is
/// the growing kind. Everything else is neutral for the cyclomatic number.
enum class IntervalCode { Critical, Safe, Neutral };

inline const char* to_string(IntervalCode c) {
  switch (c) {
    case IntervalCode::Critical: return "critical";
    case IntervalCode::Safe: return "safe";
    case IntervalCode::Neutral: return "neutral";
  }
  return "?";
}

inline IntervalCode interval_code(VertexKind start, VertexKind end) {
  if (is_fan_in(start) && is_fan_out(end)) return IntervalCode::Critical;
  if (is_fan_out(start) && is_fan_in(end)) return IntervalCode::Safe;
  return IntervalCode::Neutral;
}

/// A walk segment between two non-elementary vertices with all-elementary
/// interior. Positions refer to the walk it was found on (for graph-level
/// intervals: 0 and length along the witness walk). `edges` is the witness
/// edge sequence; length 0 marks the degenerate critical interval that is a
/// single complicated vertex.
struct Interval {
  std::size_t start_position = 0;
  std::size_t end_position = 0;
  VertexId start_vertex = 0;
  VertexId end_vertex = 0;
  VertexKind start_kind = VertexKind::Elementary;
  VertexKind end_kind = VertexKind::Elementary;
  std::size_t length = 0;
  IntervalCode code = IntervalCode::Neutral;
  std::vector<std::size_t> edges;
};

inline std::vector<Interval> intervals_of_walk(const DiGraph& g, const Walk& w) {
  std::vector<VertexId> seq = walk_vertices(g, w);
  std::vector<Interval> result;
  std::size_t previous = seq.size();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    VertexKind kind = vertex_kind(g, seq[i]);
    if (kind == VertexKind::Elementary) continue;
    if (previous != seq.size()) {
      Interval interval;
      interval.start_position = previous;
      interval.end_position = i;
      interval.start_vertex = seq[previous];
      interval.end_vertex = seq[i];
      interval.start_kind = vertex_kind(g, seq[previous]);
      interval.end_kind = kind;
      interval.length = i - previous;
      interval.code = interval_code(interval.start_kind, interval.end_kind);
      interval.edges.assign(w.edges.begin() + previous, w.edges.begin() + i);
      result.push_back(std::move(interval));
    }
    if (kind == VertexKind::Complicated) {
      Interval zero;
      zero.start_position = zero.end_position = i;
      zero.start_vertex = zero.end_vertex = seq[i];
      zero.start_kind = zero.end_kind = kind;
      zero.length = 0;
      zero.code = IntervalCode::Critical;
      result.push_back(std::move(zero));
    }
    previous = i;
  }
  std::stable_sort(result.begin(), result.end(),
                   [](const Interval& a, const Interval& b) {
                     if (a.start_position != b.start_position)
                       return a.start_position < b.start_position;
                     return a.end_position < b.end_position;
                   });
  return result;
}

enum class WalkClass { Holonomic, Heteronomous };

inline const char* to_string(WalkClass c) {
  return c == WalkClass::Holonomic ? "holonomic" : "heteronomous";
}

/// Heteronomous iff the walk carries a critical interval — equivalently some
/// fan-in position at or before some fan-out position.
inline WalkClass classify_walk(const DiGraph& g, const Walk& w) {
  for (const Interval& interval : intervals_of_walk(g, w)) {
    if (interval.code == IntervalCode::Critical) return WalkClass::Heteronomous;
  }
  return WalkClass::Holonomic;
}

namespace detail {

inline void sort_intervals(const DiGraph& g, std::vector<Interval>& intervals) {
  std::stable_sort(intervals.begin(), intervals.end(),
                   [&](const Interval& a, const Interval& b) {
                     if (a.length != b.length) return a.length < b.length;
                     if (g.label(a.start_vertex) != g.label(b.start_vertex))
                       return g.label(a.start_vertex) < g.label(b.start_vertex);
                     if (g.label(a.end_vertex) != g.label(b.end_vertex))
                       return g.label(a.end_vertex) < g.label(b.end_vertex);
                     return a.edges < b.edges;
                   });
}

}  // namespace detail

/// Every maximal elementary-interior interval of the graph: one per witness
/// walk from a non-elementary vertex through elementary vertices to the next
/// non-elementary vertex, plus a zero-length critical interval per
/// complicated vertex. Elementary in-degrees make each witness unique per
/// starting edge, so this is a single bounded reachability pass.
inline std::vector<Interval> find_graph_intervals(const DiGraph& g) {
  std::vector<Interval> result;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    VertexKind kind = vertex_kind(g, v);
    if (kind == VertexKind::Elementary) continue;
    if (kind == VertexKind::Complicated) {
      Interval zero;
      zero.start_vertex = zero.end_vertex = v;
      zero.start_kind = zero.end_kind = kind;
      zero.length = 0;
      zero.code = IntervalCode::Critical;
      result.push_back(std::move(zero));
    }
    for (std::size_t first : g.out_edges(v)) {
      std::vector<std::size_t> chain{first};
      VertexId cursor = g.edge(first).head;
      while (vertex_kind(g, cursor) == VertexKind::Elementary) {
        std::size_t next = g.out_edges(cursor)[0];
        chain.push_back(next);
        cursor = g.edge(next).head;
      }
      Interval interval;
      interval.start_position = 0;
      interval.end_position = chain.size();
      interval.start_vertex = v;
      interval.end_vertex = cursor;
      interval.start_kind = kind;
      interval.end_kind = vertex_kind(g, cursor);
      interval.length = chain.size();
      interval.code = interval_code(interval.start_kind, interval.end_kind);
      interval.edges = std::move(chain);
      result.push_back(std::move(interval));
    }
  }
  detail::sort_intervals(g, result);
  return result;
}

/// Critical intervals only, ordered by (length, start label, end label).
inline std::vector<Interval> find_critical_intervals(const DiGraph& g) {
  std::vector<Interval> all = find_graph_intervals(g);
  std::vector<Interval> result;
  for (Interval& interval : all) {
    if (interval.code == IntervalCode::Critical) result.push_back(std::move(interval));
  }
  return result;
}

}  // namespace holonomy
