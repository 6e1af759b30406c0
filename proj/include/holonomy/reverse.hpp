#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "holonomy/converting.hpp"
#include "holonomy/digraph.hpp"

namespace holonomy {

/// Reverse converting: reconstruct the vertex graph h whose line graph is g.
///
/// Operational test: any two vertices of g must have out-neighbor sets either
/// identical or disjoint (likewise in-neighbor sets), and each nonempty
/// out-class must pair consistently with the in-sets of its successors.
/// Vertices of h are the resulting classes; all vertices of g with no
/// in-neighbors hang off one common source class and all with no
/// out-neighbors feed one common sink class. Terminal sentinels of a
/// converted graph are kept as ordinary degree-1 vertices.
///
/// Determinism contract: edge i of the result corresponds to vertex i of g.
inline DiGraph reverse_convert(const DiGraph& g) {
  if (!is_weakly_connected(g)) {
    raise(ErrorCode::NotConnected, "reverse converting needs a connected graph");
  }
  if (g.edge_count() < 2) {
    raise(ErrorCode::EmptyGraph, "reverse converting needs at least 2 edges");
  }
  if (g.has_self_loop()) {
    raise(ErrorCode::NotALineDigraph, "a self-loop has no vertex-graph origin here");
  }

  std::size_t n = g.vertex_count();
  auto sorted_neighbors = [&](const std::vector<std::size_t>& edge_list,
                              bool heads) {
    std::vector<VertexId> result;
    result.reserve(edge_list.size());
    for (std::size_t e : edge_list) {
      result.push_back(heads ? g.edge(e).head : g.edge(e).tail);
    }
    std::sort(result.begin(), result.end());
    return result;
  };

  std::vector<std::vector<VertexId>> out_set(n);
  std::vector<std::vector<VertexId>> in_set(n);
  for (VertexId v = 0; v < n; ++v) {
    out_set[v] = sorted_neighbors(g.out_edges(v), true);
    if (std::adjacent_find(out_set[v].begin(), out_set[v].end()) !=
        out_set[v].end()) {
      raise(ErrorCode::NotALineDigraph,
            "parallel edges out of '" + g.label(v) + "'");
    }
    in_set[v] = sorted_neighbors(g.in_edges(v), false);
  }

  // Out-neighbor sets must be equal or disjoint: all in-neighbors of any
  // vertex share one out-set. The witness pair overlaps without coinciding.
  for (VertexId w = 0; w < n; ++w) {
    const std::vector<VertexId>& ins = in_set[w];
    for (std::size_t i = 1; i < ins.size(); ++i) {
      if (out_set[ins[i]] != out_set[ins[0]]) {
        raise(ErrorCode::NotALineDigraph,
              "out-neighbor sets of '" + g.label(ins[0]) + "' and '" +
                  g.label(ins[i]) + "' overlap without coinciding");
      }
    }
    const std::vector<VertexId>& outs = out_set[w];
    for (std::size_t i = 1; i < outs.size(); ++i) {
      if (in_set[outs[i]] != in_set[outs[0]]) {
        raise(ErrorCode::NotALineDigraph,
              "in-neighbor sets of '" + g.label(outs[0]) + "' and '" +
                  g.label(outs[i]) + "' overlap without coinciding");
      }
    }
  }

  // Head class of vertex v = its out-class; empty out-sets all map to one
  // sink class. Classes are numbered by smallest member.
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> head_class(n, kUnassigned);
  std::map<std::vector<VertexId>, std::size_t> class_of_out_set;
  std::vector<std::vector<VertexId>> class_members;
  for (VertexId v = 0; v < n; ++v) {
    auto [it, inserted] =
        class_of_out_set.emplace(out_set[v], class_members.size());
    if (inserted) class_members.emplace_back();
    head_class[v] = it->second;
    class_members[it->second].push_back(v);
  }

  // Pairing consistency: for every v with successors, the in-set of each
  // successor must be exactly v's whole out-class.
  for (VertexId v = 0; v < n; ++v) {
    if (out_set[v].empty()) continue;
    const std::vector<VertexId>& members = class_members[head_class[v]];
    for (VertexId f : out_set[v]) {
      if (in_set[f] != members) {
        raise(ErrorCode::NotALineDigraph,
              "in-set of '" + g.label(f) + "' does not match the out-class of '" +
                  g.label(v) + "'");
      }
    }
  }

  bool need_source = false;
  for (VertexId v = 0; v < n; ++v) {
    if (in_set[v].empty()) need_source = true;
  }

  DiGraph h;
  std::vector<VertexId> class_vertex(class_members.size());
  VertexId source = 0;
  std::size_t next_name = 0;
  if (need_source) source = h.add_vertex("c" + std::to_string(next_name++));
  for (std::size_t c = 0; c < class_members.size(); ++c) {
    class_vertex[c] = h.add_vertex("c" + std::to_string(next_name++));
  }

  for (VertexId v = 0; v < n; ++v) {
    VertexId tail = in_set[v].empty() ? source : class_vertex[head_class[in_set[v][0]]];
    VertexId head = class_vertex[head_class[v]];
    h.add_edge(tail, head);
  }
  return h;
}

/// Largest number of consecutive reverse conversions (up to cap) that succeed
/// starting from g. Zero is a valid answer.
inline std::size_t reverse_depth(const DiGraph& g, std::size_t cap) {
  DiGraph current = g;
  std::size_t depth = 0;
  while (depth < cap) {
    try {
      current = reverse_convert(current);
    } catch (const GraphError&) {
      break;
    }
    ++depth;
  }
  return depth;
}

}  // namespace holonomy
