#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "holonomy/errors.hpp"

namespace holonomy {

using VertexId = std::uint32_t;

struct Edge {
  VertexId tail;
  VertexId head;
};

inline bool operator==(const Edge& a, const Edge& b) {
  return a.tail == b.tail && a.head == b.head;
}

/// Directed multigraph with stable vertex labels and ordinal edge identity.
/// Vertices keep insertion order; edges keep insertion order and are
/// addressed by their ordinal. Values are immutable once built up; all
/// analyses below treat the graph as read-only.
class DiGraph {
 public:
  DiGraph() = default;

  VertexId add_vertex(std::string label) {
    if (index_.count(label) != 0) {
      throw std::invalid_argument("duplicate vertex label: " + label);
    }
    VertexId id = static_cast<VertexId>(labels_.size());
    index_.emplace(label, id);
    labels_.push_back(std::move(label));
    out_.emplace_back();
    in_.emplace_back();
    return id;
  }

  VertexId ensure_vertex(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    return add_vertex(label);
  }

  std::size_t add_edge(VertexId tail, VertexId head) {
    check_vertex(tail);
    check_vertex(head);
    std::size_t ordinal = edges_.size();
    edges_.push_back(Edge{tail, head});
    out_[tail].push_back(ordinal);
    in_[head].push_back(ordinal);
    return ordinal;
  }

  std::size_t add_edge(const std::string& tail, const std::string& head) {
    VertexId t = ensure_vertex(tail);
    VertexId h = ensure_vertex(head);
    return add_edge(t, h);
  }

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& label(VertexId v) const {
    check_vertex(v);
    return labels_[v];
  }

  std::optional<VertexId> find_vertex(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VertexId vertex(const std::string& label) const {
    auto v = find_vertex(label);
    if (!v) raise(ErrorCode::UnknownVertex, "no vertex labeled '" + label + "'");
    return *v;
  }

  const Edge& edge(std::size_t ordinal) const { return edges_.at(ordinal); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Edge ordinals leaving / entering a vertex, in insertion order.
  const std::vector<std::size_t>& out_edges(VertexId v) const {
    check_vertex(v);
    return out_[v];
  }
  const std::vector<std::size_t>& in_edges(VertexId v) const {
    check_vertex(v);
    return in_[v];
  }

  std::size_t outdeg(VertexId v) const { return out_edges(v).size(); }
  std::size_t indeg(VertexId v) const { return in_edges(v).size(); }

  bool has_vertex(VertexId v) const { return v < labels_.size(); }

  bool has_self_loop() const {
    for (const Edge& e : edges_) {
      if (e.tail == e.head) return true;
    }
    return false;
  }

  bool has_parallel_edges() const {
    std::unordered_map<std::uint64_t, int> seen;
    for (const Edge& e : edges_) {
      std::uint64_t key =
          (static_cast<std::uint64_t>(e.tail) << 32) | e.head;
      if (++seen[key] > 1) return true;
    }
    return false;
  }

 private:
  void check_vertex(VertexId v) const {
    if (v >= labels_.size()) {
      raise(ErrorCode::UnknownVertex,
            "vertex id " + std::to_string(v) + " out of range");
    }
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

struct DegreeSignature {
  std::size_t indeg = 0;
  std::size_t outdeg = 0;
};

inline DegreeSignature degree_signature(const DiGraph& g, VertexId v) {
  return DegreeSignature{g.indeg(v), g.outdeg(v)};
}

/// Degree-signature taxonomy. Terminal kinds take precedence; the six kinds
/// partition every signature with indeg + outdeg >= 1.
enum class VertexKind {
  Initial,      // indeg == 0
  Final,        // outdeg == 0
  Elementary,   // (1, 1)
  Converging,   // (>=2, 1)
  Diverging,    // (1, >=2)
  Complicated,  // (>=2, >=2)
};

inline const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Initial: return "initial";
    case VertexKind::Final: return "final";
    case VertexKind::Elementary: return "elementary";
    case VertexKind::Converging: return "converging";
    case VertexKind::Diverging: return "diverging";
    case VertexKind::Complicated: return "complicated";
  }
  return "?";
}

inline VertexKind kind_of(DegreeSignature d) {
  if (d.indeg == 0) return VertexKind::Initial;
  if (d.outdeg == 0) return VertexKind::Final;
  if (d.indeg == 1 && d.outdeg == 1) return VertexKind::Elementary;
  if (d.indeg >= 2 && d.outdeg == 1) return VertexKind::Converging;
  if (d.indeg == 1 && d.outdeg >= 2) return VertexKind::Diverging;
  return VertexKind::Complicated;
}

inline VertexKind vertex_kind(const DiGraph& g, VertexId v) {
  return kind_of(degree_signature(g, v));
}

/// Fan-in side of the interval rules: converging or complicated.
inline bool is_fan_in(VertexKind k) {
  return k == VertexKind::Converging || k == VertexKind::Complicated;
}

/// Fan-out side: diverging or complicated.
inline bool is_fan_out(VertexKind k) {
  return k == VertexKind::Diverging || k == VertexKind::Complicated;
}

inline std::size_t weak_component_count(const DiGraph& g) {
  std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::size_t components = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (std::size_t e : g.out_edges(v)) {
        VertexId w = g.edge(e).head;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
      for (std::size_t e : g.in_edges(v)) {
        VertexId w = g.edge(e).tail;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

inline bool is_weakly_connected(const DiGraph& g) {
  return weak_component_count(g) == 1;
}

/// nu = m - n + 1 for a weakly connected graph.
inline long long cyclomatic_number(const DiGraph& g) {
  if (!is_weakly_connected(g)) {
    raise(ErrorCode::NotConnected,
          "cyclomatic number is defined for weakly connected graphs only");
  }
  return static_cast<long long>(g.edge_count()) -
         static_cast<long long>(g.vertex_count()) + 1;
}

/// Same formula without the connectivity gate; used for trajectory records
/// where the counts-based recurrences hold regardless.
inline long long cyclomatic_formula(const DiGraph& g) {
  return static_cast<long long>(g.edge_count()) -
         static_cast<long long>(g.vertex_count()) + 1;
}

}  // namespace holonomy
