#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "holonomy/converting.hpp"
#include "holonomy/digraph.hpp"

namespace holonomy {

inline constexpr std::size_t kDefaultEnumerationBudget = 1'000'000;

/// Walks of one stated length as label tuples, lexicographically ordered and
/// deduplicated (parallel edges collapse to one vertex tuple). `truncated`
/// marks budget-bounded, reproducibly prefix-stable output.
struct WalkSet {
  std::size_t length = 0;
  std::vector<std::vector<std::string>> walks;
  bool truncated = false;
};

namespace detail {

/// Out-neighbor labels, sorted and deduplicated, resolved back to ids.
inline std::vector<VertexId> lex_neighbors(const DiGraph& g, VertexId v) {
  std::vector<VertexId> ids;
  for (std::size_t e : g.out_edges(v)) ids.push_back(g.edge(e).head);
  std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) {
    return g.label(a) < g.label(b);
  });
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

inline std::vector<VertexId> lex_vertices(const DiGraph& g) {
  std::vector<VertexId> ids(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) ids[v] = v;
  std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) {
    return g.label(a) < g.label(b);
  });
  return ids;
}

}  // namespace detail

/// Depth-first enumeration of all walks with `length` edges, in lexicographic
/// label order. The budget bounds emitted walks plus explored partial walks.
inline WalkSet enumerate_walks_dfs(const DiGraph& g, std::size_t length,
                                   std::size_t budget = kDefaultEnumerationBudget) {
  WalkSet result;
  result.length = length;
  std::size_t spent = 0;
  std::vector<std::string> tuple;
  // Explicit stack of (vertex, depth) pairs; pushed in reverse lex order so
  // the walk emission order is lexicographic.
  struct Item {
    VertexId v;
    std::size_t depth;
  };
  std::vector<Item> stack;
  std::vector<VertexId> starts = detail::lex_vertices(g);
  for (auto it = starts.rbegin(); it != starts.rend(); ++it) {
    stack.push_back(Item{*it, 0});
  }
  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    if (++spent > budget) {
      result.truncated = true;
      return result;
    }
    tuple.resize(item.depth);
    tuple.push_back(g.label(item.v));
    if (item.depth == length) {
      result.walks.push_back(tuple);
      continue;
    }
    std::vector<VertexId> next = detail::lex_neighbors(g, item.v);
    for (auto it = next.rbegin(); it != next.rend(); ++it) {
      stack.push_back(Item{*it, item.depth + 1});
    }
  }
  return result;
}

/// The converting route of the same enumeration: iterate converting `length`
/// times and keep every sentinel-free decoded tuple. Equal to the DFS route
/// within budget; kept as the table-style cross-check, the DFS route is the
/// production path.
inline WalkSet enumerate_walks_via_converting(
    const DiGraph& g, std::size_t length,
    std::size_t vertex_budget = kDefaultVertexBudget) {
  WalkSet result;
  result.length = length;
  ConvertTrajectory traj;
  try {
    traj = iterate_convert(g, length, vertex_budget);
  } catch (const GraphError& err) {
    if (err.code() == ErrorCode::StepBudgetExceeded) {
      result.truncated = true;
      return result;
    }
    throw;
  }
  for (TupleLabel& tuple : labels_at_step(traj, length)) {
    if (!has_sentinel(tuple)) result.walks.push_back(std::move(tuple));
  }
  std::sort(result.walks.begin(), result.walks.end());
  result.walks.erase(std::unique(result.walks.begin(), result.walks.end()),
                     result.walks.end());
  return result;
}

namespace detail {

/// Canonical rotation of a closed tuple (without the repeated endpoint):
/// the lexicographically least rotation, endpoint re-appended.
inline std::vector<std::string> canonical_rotation(
    const std::vector<std::string>& closed) {
  std::vector<std::string> body(closed.begin(), closed.end() - 1);
  std::vector<std::string> best = body;
  std::vector<std::string> rotated = body;
  for (std::size_t r = 1; r < body.size(); ++r) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    if (rotated < best) best = rotated;
  }
  best.push_back(best.front());
  return best;
}

}  // namespace detail

/// Closed walks of length 1..max_length, one tuple per cyclic rotation class.
inline WalkSet enumerate_contours(const DiGraph& g, std::size_t max_length,
                                  std::size_t budget = kDefaultEnumerationBudget) {
  WalkSet result;
  result.length = max_length;
  std::set<std::vector<std::string>> classes;
  std::size_t spent = 0;
  std::vector<VertexId> path;
  // From each start s (the least label of its rotation class), walk only
  // through vertices with labels >= label(s).
  for (VertexId s : detail::lex_vertices(g)) {
    const std::string& base = g.label(s);
    struct Item {
      VertexId v;
      std::size_t depth;
    };
    std::vector<Item> stack{{s, 0}};
    while (!stack.empty()) {
      Item item = stack.back();
      stack.pop_back();
      if (++spent > budget) {
        result.truncated = true;
        break;
      }
      path.resize(item.depth);
      path.push_back(item.v);
      if (item.depth > 0 && item.v == s) {
        std::vector<std::string> closed;
        closed.reserve(path.size());
        for (VertexId v : path) closed.push_back(g.label(v));
        classes.insert(detail::canonical_rotation(closed));
        // A closed walk may keep going around, so fall through.
      }
      if (item.depth == max_length) continue;
      std::vector<VertexId> next = detail::lex_neighbors(g, item.v);
      for (auto it = next.rbegin(); it != next.rend(); ++it) {
        if (g.label(*it) < base) continue;
        stack.push_back(Item{*it, item.depth + 1});
      }
    }
    if (result.truncated) break;
  }
  result.walks.assign(classes.begin(), classes.end());
  return result;
}

/// Converting route for closed walks of one exact length: decoded tuples
/// whose first and last vertices coincide, rotation-canonicalized.
inline WalkSet enumerate_contours_via_converting(
    const DiGraph& g, std::size_t length,
    std::size_t vertex_budget = kDefaultVertexBudget) {
  WalkSet walks = enumerate_walks_via_converting(g, length, vertex_budget);
  WalkSet result;
  result.length = length;
  result.truncated = walks.truncated;
  std::set<std::vector<std::string>> classes;
  for (const std::vector<std::string>& tuple : walks.walks) {
    if (tuple.size() >= 2 && tuple.front() == tuple.back()) {
      classes.insert(detail::canonical_rotation(tuple));
    }
  }
  result.walks.assign(classes.begin(), classes.end());
  return result;
}

/// All Hamiltonian circuits: contours of length exactly n visiting every
/// vertex once, rotation-canonical (anchored at the least-labeled vertex).
inline WalkSet hamiltonian_circuits(const DiGraph& g,
                                    std::size_t budget = kDefaultEnumerationBudget) {
  WalkSet result;
  result.length = g.vertex_count();
  if (g.vertex_count() == 0) return result;
  std::vector<VertexId> order = detail::lex_vertices(g);
  VertexId anchor = order.front();
  std::vector<char> used(g.vertex_count(), 0);
  std::size_t spent = 0;

  struct Item {
    VertexId v;
    std::size_t depth;
  };
  std::vector<Item> stack{{anchor, 0}};
  std::vector<VertexId> path;
  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    if (++spent > budget) {
      result.truncated = true;
      return result;
    }
    while (path.size() > item.depth) {
      used[path.back()] = 0;
      path.pop_back();
    }
    path.push_back(item.v);
    used[item.v] = 1;
    if (path.size() == g.vertex_count()) {
      // Close the circuit if an edge back to the anchor exists.
      for (VertexId w : detail::lex_neighbors(g, item.v)) {
        if (w == anchor) {
          std::vector<std::string> tuple;
          tuple.reserve(path.size() + 1);
          for (VertexId v : path) tuple.push_back(g.label(v));
          tuple.push_back(g.label(anchor));
          result.walks.push_back(std::move(tuple));
          break;
        }
      }
      continue;
    }
    std::vector<VertexId> next = detail::lex_neighbors(g, item.v);
    for (auto it = next.rbegin(); it != next.rend(); ++it) {
      if (!used[*it]) stack.push_back(Item{*it, item.depth + 1});
    }
  }
  std::sort(result.walks.begin(), result.walks.end());
  return result;
}

}  // namespace holonomy
