#pragma once

#include <vector>

#include "holonomy/digraph.hpp"

namespace holonomy {

/// Requirement codes for the operator-matrix form of a graph's adjacency
/// matrix. The first five are the quasicanonical requirements, the last two
/// the additional canonical ones. Row/column occupancy is measured in edge
/// multiplicity (row sum = outdeg, column sum = indeg), which coincides with
/// the 0/1 reading on simple graphs and keeps `canonical iff no complicated
/// vertex` true on multigraphs.
enum class Requirement {
  NonzeroDiagonal,          // a self-loop occupies the main diagonal
  MultipleEmptyColumns,     // more than one vertex with indeg 0
  EmptyColumnRowNotSingle,  // an initial vertex whose outdeg != 1
  MultipleEmptyRows,        // more than one vertex with outdeg 0
  EmptyRowColumnNotSingle,  // a final vertex whose indeg != 1
  FanOutInputNotSingle,     // outdeg >= 2 but indeg != 1
  FanInOutputNotSingle,     // indeg >= 2 but outdeg != 1
};

inline const char* to_string(Requirement r) {
  switch (r) {
    case Requirement::NonzeroDiagonal: return "nonzero-diagonal";
    case Requirement::MultipleEmptyColumns: return "multiple-empty-columns";
    case Requirement::EmptyColumnRowNotSingle:
      return "empty-column-row-not-single";
    case Requirement::MultipleEmptyRows: return "multiple-empty-rows";
    case Requirement::EmptyRowColumnNotSingle:
      return "empty-row-column-not-single";
    case Requirement::FanOutInputNotSingle: return "fan-out-input-not-single";
    case Requirement::FanInOutputNotSingle: return "fan-in-output-not-single";
  }
  return "?";
}

enum class Form { Invalid, Quasicanonical, Canonical };

inline const char* to_string(Form f) {
  switch (f) {
    case Form::Invalid: return "invalid";
    case Form::Quasicanonical: return "quasicanonical";
    case Form::Canonical: return "canonical";
  }
  return "?";
}

struct MatrixForm {
  Form form = Form::Invalid;
  std::vector<Requirement> violations;  // every violated requirement
};

inline MatrixForm classify_matrix(const DiGraph& g) {
  MatrixForm result;
  bool quasi_ok = true;
  bool canon_ok = true;
  auto violate = [&](Requirement r, bool quasi_level) {
    result.violations.push_back(r);
    if (quasi_level) {
      quasi_ok = false;
    } else {
      canon_ok = false;
    }
  };

  if (g.has_self_loop()) violate(Requirement::NonzeroDiagonal, true);

  std::size_t empty_columns = 0;
  std::size_t empty_rows = 0;
  bool initial_row_bad = false;
  bool final_column_bad = false;
  bool fan_out_bad = false;
  bool fan_in_bad = false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t in = g.indeg(v);
    std::size_t out = g.outdeg(v);
    if (in == 0) {
      ++empty_columns;
      if (out != 1) initial_row_bad = true;
    }
    if (out == 0) {
      ++empty_rows;
      if (in != 1) final_column_bad = true;
    }
    if (out >= 2 && in != 1) fan_out_bad = true;
    if (in >= 2 && out != 1) fan_in_bad = true;
  }

  if (empty_columns > 1) violate(Requirement::MultipleEmptyColumns, true);
  if (initial_row_bad) violate(Requirement::EmptyColumnRowNotSingle, true);
  if (empty_rows > 1) violate(Requirement::MultipleEmptyRows, true);
  if (final_column_bad) violate(Requirement::EmptyRowColumnNotSingle, true);
  if (fan_out_bad) violate(Requirement::FanOutInputNotSingle, false);
  if (fan_in_bad) violate(Requirement::FanInOutputNotSingle, false);

  result.form = !quasi_ok ? Form::Invalid
                          : (canon_ok ? Form::Canonical : Form::Quasicanonical);
  return result;
}

/// True iff no vertex is complicated. Agrees with
/// classify_matrix(g).form == Canonical on every quasicanonical graph.
inline bool is_canonical_graph(const DiGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (vertex_kind(g, v) == VertexKind::Complicated) return false;
  }
  return true;
}

inline bool at_least_quasicanonical(const MatrixForm& mf) {
  return mf.form == Form::Quasicanonical || mf.form == Form::Canonical;
}

}  // namespace holonomy
