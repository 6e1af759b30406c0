#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "holonomy/digraph.hpp"

namespace fixtures {

/// Label-respecting isomorphism check for the reverse round-trip, using the
/// determinism contract: edge i of h corresponds to vertex i of line(g),
/// which corresponds to edge i of g. No general isomorphism search.
inline bool edge_correspondence_isomorphic(const holonomy::DiGraph& g,
                                           const holonomy::DiGraph& h) {
  using holonomy::VertexId;
  if (g.edge_count() != h.edge_count()) return false;
  if (g.vertex_count() != h.vertex_count()) return false;
  std::map<VertexId, VertexId> forward;
  std::map<VertexId, VertexId> backward;
  auto bind = [&](VertexId a, VertexId b) {
    auto f = forward.find(a);
    if (f != forward.end()) return f->second == b;
    auto r = backward.find(b);
    if (r != backward.end()) return r->second == a;
    forward.emplace(a, b);
    backward.emplace(b, a);
    return true;
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!bind(g.edge(e).tail, h.edge(e).tail)) return false;
    if (!bind(g.edge(e).head, h.edge(e).head)) return false;
  }
  return true;
}

}  // namespace fixtures
