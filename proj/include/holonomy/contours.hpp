#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "holonomy/digraph.hpp"
#include "holonomy/intervals.hpp"

namespace holonomy {

/// Tarjan strongly connected components, iterative. Components are listed
/// with members in ascending vertex order; component order is deterministic.
inline std::vector<std::vector<VertexId>> strongly_connected_components(
    const DiGraph& g) {
  std::size_t n = g.vertex_count();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> components;
  std::size_t next_index = 0;

  struct Frame {
    VertexId v;
    std::size_t edge_pos;
  };
  std::vector<Frame> frames;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back(Frame{root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& frame = frames.back();
      const std::vector<std::size_t>& out = g.out_edges(frame.v);
      bool descended = false;
      while (frame.edge_pos < out.size()) {
        VertexId w = g.edge(out[frame.edge_pos]).head;
        ++frame.edge_pos;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back(Frame{w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[frame.v] = std::min(low[frame.v], index[w]);
      }
      if (descended) continue;
      VertexId v = frame.v;
      frames.pop_back();
      if (!frames.empty()) {
        low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
      if (low[v] == index[v]) {
        std::vector<VertexId> component;
        while (true) {
          VertexId w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
          if (w == v) break;
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

namespace detail {

inline bool scc_is_nontrivial(const DiGraph& g, const std::vector<VertexId>& scc) {
  if (scc.size() >= 2) return true;
  for (std::size_t e : g.out_edges(scc[0])) {
    if (g.edge(e).head == scc[0]) return true;  // self-loop
  }
  return false;
}

/// Whether the subgraph induced on `allowed` vertices contains any cycle.
inline bool induced_has_cycle(const DiGraph& g, const std::vector<char>& allowed) {
  // Kahn peeling on the induced subgraph; leftovers mean a cycle.
  std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n, 0);
  std::size_t active = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!allowed[v]) continue;
    ++active;
    for (std::size_t e : g.out_edges(v)) {
      VertexId w = g.edge(e).head;
      if (w == v) return true;
      if (allowed[w]) ++indeg[w];
    }
  }
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (allowed[v] && indeg[v] == 0) queue.push_back(v);
  }
  std::size_t removed = 0;
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    ++removed;
    for (std::size_t e : g.out_edges(v)) {
      VertexId w = g.edge(e).head;
      if (allowed[w] && w != v && --indeg[w] == 0) queue.push_back(w);
    }
  }
  return removed != active;
}

}  // namespace detail

/// Certifies the existence of a live contour (a cycle with both an entry edge
/// and an exit edge) without enumerating circuits. A cycle inside a strongly
/// connected component S is live iff it does not span S, or S itself has an
/// incoming and an outgoing attachment edge.
inline bool has_live_contour(const DiGraph& g) {
  std::vector<std::vector<VertexId>> components = strongly_connected_components(g);
  std::vector<std::size_t> component_of(g.vertex_count(), 0);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (VertexId v : components[c]) component_of[v] = c;
  }
  for (std::size_t c = 0; c < components.size(); ++c) {
    const std::vector<VertexId>& scc = components[c];
    if (!detail::scc_is_nontrivial(g, scc)) continue;
    bool external_in = false;
    bool external_out = false;
    for (const Edge& e : g.edges()) {
      if (component_of[e.tail] == c && component_of[e.head] != c) external_out = true;
      if (component_of[e.head] == c && component_of[e.tail] != c) external_in = true;
    }
    if (external_in && external_out) return true;
    if (scc.size() >= 2) {
      // A cycle avoiding some vertex of S is entered and left from within S.
      std::vector<char> allowed(g.vertex_count(), 0);
      for (VertexId v : scc) allowed[v] = 1;
      for (VertexId w : scc) {
        allowed[w] = 0;
        bool cycle = detail::induced_has_cycle(g, allowed);
        allowed[w] = 1;
        if (cycle) return true;
      }
    }
  }
  return false;
}

/// True when the graph has any cycle at all (any nontrivial component).
inline bool has_any_contour(const DiGraph& g) {
  for (const std::vector<VertexId>& scc : strongly_connected_components(g)) {
    if (detail::scc_is_nontrivial(g, scc)) return true;
  }
  return false;
}

enum class ContourKind { Live, Deadlock, Fictitious, Isolated };

inline const char* to_string(ContourKind k) {
  switch (k) {
    case ContourKind::Live: return "live";
    case ContourKind::Deadlock: return "deadlock";
    case ContourKind::Fictitious: return "fictitious";
    case ContourKind::Isolated: return "isolated";
  }
  return "?";
}

/// One elementary contour: a simple directed cycle (closed walk, first vertex
/// = last), its attachment profile and the resulting kind. Deadlock = entry
/// without exit (the contour-trap), fictitious = exit without entry.
struct ContourInfo {
  Walk cycle;
  bool has_entry = false;
  bool has_exit = false;
  ContourKind kind = ContourKind::Isolated;
};

struct ContourSet {
  std::vector<ContourInfo> contours;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultCircuitCap = 10'000;

namespace detail {

inline ContourInfo make_contour(const DiGraph& g, VertexId start,
                                const std::vector<std::size_t>& path_edges) {
  ContourInfo info;
  info.cycle.start = start;
  info.cycle.edges = path_edges;
  std::set<VertexId> members;
  for (std::size_t e : path_edges) members.insert(g.edge(e).tail);
  for (VertexId v : members) {
    for (std::size_t e : g.in_edges(v)) {
      if (members.count(g.edge(e).tail) == 0) info.has_entry = true;
    }
    for (std::size_t e : g.out_edges(v)) {
      if (members.count(g.edge(e).head) == 0) info.has_exit = true;
    }
  }
  if (info.has_entry && info.has_exit) {
    info.kind = ContourKind::Live;
  } else if (info.has_entry) {
    info.kind = ContourKind::Deadlock;
  } else if (info.has_exit) {
    info.kind = ContourKind::Fictitious;
  } else {
    info.kind = ContourKind::Isolated;
  }
  return info;
}

}  // namespace detail

/// All elementary circuits, Johnson-style: for each start vertex s in
/// ascending order, blocked search inside the strongly connected part of the
/// subgraph on vertices >= s. Each circuit is reported once, rotated to start
/// at its smallest vertex; parallel edges yield distinct circuits. The count
/// cap reports partial results with the truncated flag.
inline ContourSet find_contours(const DiGraph& g,
                                std::size_t max_count = kDefaultCircuitCap) {
  ContourSet result;
  std::size_t n = g.vertex_count();
  if (n == 0) return result;

  for (VertexId s = 0; s < n; ++s) {
    if (result.truncated) break;
    // Strongly connected component of s among vertices >= s.
    std::vector<char> allowed(n, 0);
    {
      DiGraph restricted;  // light view: reuse SCC over a filtered copy
      std::vector<VertexId> map_back;
      std::vector<VertexId> map_to(n, 0);
      for (VertexId v = s; v < n; ++v) {
        map_to[v] = static_cast<VertexId>(map_back.size());
        map_back.push_back(v);
        restricted.add_vertex(g.label(v));
      }
      for (const Edge& e : g.edges()) {
        if (e.tail >= s && e.head >= s) {
          restricted.add_edge(map_to[e.tail], map_to[e.head]);
        }
      }
      for (const std::vector<VertexId>& scc :
           strongly_connected_components(restricted)) {
        if (std::find(scc.begin(), scc.end(), map_to[s]) == scc.end()) continue;
        for (VertexId v : scc) allowed[map_back[v]] = 1;
        break;
      }
    }
    if (!allowed[s]) continue;

    // Blocked DFS from s over `allowed`, emitting circuits that return to s.
    std::vector<char> blocked(n, 0);
    std::vector<std::vector<VertexId>> block_list(n);
    std::vector<std::size_t> path_edges;
    struct Frame {
      VertexId v;
      std::size_t edge_pos;
      bool found;
    };
    std::vector<Frame> frames;
    auto unblock = [&](VertexId v) {
      std::vector<VertexId> work{v};
      while (!work.empty()) {
        VertexId u = work.back();
        work.pop_back();
        if (!blocked[u]) continue;
        blocked[u] = 0;
        for (VertexId w : block_list[u]) {
          if (blocked[w]) work.push_back(w);
        }
        block_list[u].clear();
      }
    };

    blocked[s] = 1;
    frames.push_back(Frame{s, 0, false});
    while (!frames.empty() && !result.truncated) {
      Frame& frame = frames.back();
      const std::vector<std::size_t>& out = g.out_edges(frame.v);
      bool descended = false;
      while (frame.edge_pos < out.size()) {
        std::size_t e = out[frame.edge_pos];
        ++frame.edge_pos;
        VertexId w = g.edge(e).head;
        if (!allowed[w]) continue;
        if (w == s) {
          path_edges.push_back(e);
          result.contours.push_back(detail::make_contour(g, s, path_edges));
          path_edges.pop_back();
          frame.found = true;
          if (result.contours.size() >= max_count) {
            result.truncated = true;
            break;
          }
        } else if (!blocked[w]) {
          path_edges.push_back(e);
          blocked[w] = 1;
          frames.push_back(Frame{w, 0, false});
          descended = true;
          break;
        }
      }
      if (descended || result.truncated) continue;
      Frame finished = frames.back();
      frames.pop_back();
      if (finished.found) {
        unblock(finished.v);
      } else {
        for (std::size_t e : g.out_edges(finished.v)) {
          VertexId w = g.edge(e).head;
          if (!allowed[w]) continue;
          std::vector<VertexId>& bl = block_list[w];
          if (std::find(bl.begin(), bl.end(), finished.v) == bl.end()) {
            bl.push_back(finished.v);
          }
        }
      }
      if (!frames.empty()) {
        frames.back().found = frames.back().found || finished.found;
        path_edges.pop_back();
      }
    }
  }
  return result;
}

}  // namespace holonomy
