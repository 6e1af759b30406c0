#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "holonomy/classify.hpp"
#include "holonomy/converting.hpp"
#include "holonomy/digraph.hpp"

#include <json.hpp>

namespace holonomy {

inline constexpr std::string_view kToolName = "holonomy";
inline constexpr std::string_view kToolVersion = "0.1.0";

namespace detail {

inline bool valid_user_token(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.') {
      return false;
    }
  }
  return true;
}

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.emplace_back(text.substr(pos));
      break;
    }
    lines.emplace_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  for (std::string& line : lines) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
  }
  return lines;
}

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

}  // namespace detail

/// Edge-list document: one `tail head` pair per line, `#`-prefixed comment
/// lines and blank lines ignored. Duplicate lines create parallel edges.
/// Tokens never begin with `#` (that namespace is reserved for terminal
/// sentinels, which only the CSV format can carry).
inline DiGraph parse_edge_list(std::string_view text) {
  DiGraph g;
  std::vector<std::string> lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::vector<std::string> tokens = detail::split_tokens(line);
    if (tokens.size() != 2) {
      raise(ErrorCode::ParseError,
            "line " + std::to_string(i + 1) + ": expected 'tail head', got " +
                std::to_string(tokens.size()) + " token(s)");
    }
    for (const std::string& token : tokens) {
      if (token[0] == '#') {
        raise(ErrorCode::ReservedToken,
              "line " + std::to_string(i + 1) + ": label '" + token +
                  "' uses the reserved '#' prefix");
      }
      if (!detail::valid_user_token(token)) {
        raise(ErrorCode::ParseError,
              "line " + std::to_string(i + 1) + ": malformed token '" + token + "'");
      }
    }
    g.add_edge(tokens[0], tokens[1]);
  }
  return g;
}

inline std::string serialize_edge_list(const DiGraph& g) {
  std::vector<char> touched(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    touched[e.tail] = 1;
    touched[e.head] = 1;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!touched[v]) {
      raise(ErrorCode::ParseError,
            "isolated vertex '" + g.label(v) + "' has no edge-list form; use csv");
    }
    if (!g.label(v).empty() && g.label(v)[0] == '#') {
      raise(ErrorCode::ReservedToken,
            "graph carries terminal sentinel '" + g.label(v) +
                "'; write csv or strip terminals first");
    }
  }
  std::string out;
  for (const Edge& e : g.edges()) {
    out += g.label(e.tail);
    out += ' ';
    out += g.label(e.head);
    out += '\n';
  }
  return out;
}

/// Adjacency-matrix CSV: first row and column carry vertex labels, cells are
/// edge multiplicities. The lossless format for converted graphs (terminal
/// sentinel labels allowed).
inline DiGraph parse_matrix_csv(std::string_view text, bool allow_self_loops = false) {
  std::vector<std::string> lines = detail::split_lines(text);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) return DiGraph{};

  auto split_csv = [](const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
      std::size_t a = cell.find_first_not_of(" \t");
      std::size_t b = cell.find_last_not_of(" \t");
      cells.push_back(a == std::string::npos ? "" : cell.substr(a, b - a + 1));
    }
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
  };

  std::vector<std::string> header = split_csv(lines[0]);
  if (header.size() < 2 || !header[0].empty()) {
    raise(ErrorCode::ParseError, "line 1: header must start with an empty cell");
  }
  std::size_t n = header.size() - 1;
  if (lines.size() != n + 1) {
    raise(ErrorCode::ParseError,
          "matrix must be square: " + std::to_string(n) + " labels but " +
              std::to_string(lines.size() - 1) + " rows");
  }
  DiGraph g;
  for (std::size_t j = 0; j < n; ++j) {
    const std::string& label = header[j + 1];
    bool sentinel = !label.empty() && label[0] == '#';
    if (!sentinel && !detail::valid_user_token(label)) {
      raise(ErrorCode::ParseError, "line 1: malformed label '" + label + "'");
    }
    if (g.find_vertex(label)) {
      raise(ErrorCode::ParseError, "line 1: duplicate label '" + label + "'");
    }
    g.add_vertex(label);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> cells = split_csv(lines[i + 1]);
    std::string where = "line " + std::to_string(i + 2) + ": ";
    if (cells.size() != n + 1) {
      raise(ErrorCode::ParseError,
            where + "expected " + std::to_string(n + 1) + " cells, got " +
                std::to_string(cells.size()));
    }
    if (cells[0] != header[i + 1]) {
      raise(ErrorCode::ParseError,
            where + "row label '" + cells[0] + "' does not match column label '" +
                header[i + 1] + "'");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::string& cell = cells[j + 1];
      std::size_t count = 0;
      if (cell.empty() || cell.find_first_not_of("0123456789") != std::string::npos) {
        raise(ErrorCode::ParseError, where + "cell '" + cell + "' is not a count");
      }
      count = std::stoul(cell);
      if (count == 0) continue;
      if (i == j && !allow_self_loops) {
        raise(ErrorCode::ParseError,
              where + "nonzero diagonal (self-loop) needs --allow-self-loops");
      }
      for (std::size_t k = 0; k < count; ++k) {
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
  }
  return g;
}

inline std::string serialize_matrix_csv(const DiGraph& g) {
  std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> counts(n, std::vector<std::size_t>(n, 0));
  for (const Edge& e : g.edges()) ++counts[e.tail][e.head];
  std::string out;
  for (VertexId v = 0; v < n; ++v) {
    out += ',';
    out += g.label(v);
  }
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out += g.label(static_cast<VertexId>(i));
    for (std::size_t j = 0; j < n; ++j) {
      out += ',';
      out += std::to_string(counts[i][j]);
    }
    out += '\n';
  }
  return out;
}

namespace detail {

inline bool dot_keyword(const std::string& token) {
  std::string lower;
  for (char c : token) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return lower == "graph" || lower == "digraph" || lower == "subgraph" ||
         lower == "node" || lower == "edge" || lower == "strict";
}

inline std::string dot_id(const std::string& token) {
  bool plain = !token.empty() && !dot_keyword(token) &&
               (std::isalpha(static_cast<unsigned char>(token[0])) || token[0] == '_');
  if (plain) {
    for (char c : token) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        plain = false;
        break;
      }
    }
  }
  if (plain) return token;
  std::string quoted = "\"";
  for (char c : token) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace detail

/// Deterministic DOT text; tuple labels, when given, become node labels
/// joined by a middle dot.
inline std::string export_dot(
    const DiGraph& g,
    const std::unordered_map<VertexId, TupleLabel>* labels = nullptr) {
  std::string out = "digraph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out += "  ";
    out += detail::dot_id(g.label(v));
    if (labels != nullptr) {
      auto it = labels->find(v);
      if (it != labels->end()) {
        std::string joined;
        for (const std::string& token : it->second) {
          if (!joined.empty()) joined += "·";
          joined += token;
        }
        out += " [label=\"" + joined + "\"]";
      }
    }
    out += ";\n";
  }
  for (const Edge& e : g.edges()) {
    out += "  ";
    out += detail::dot_id(g.label(e.tail));
    out += " -> ";
    out += detail::dot_id(g.label(e.head));
    out += ";\n";
  }
  out += "}\n";
  return out;
}

inline std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

/// Frozen report schema; additive evolution only.
inline nlohmann::ordered_json report_json(const DiGraph& g,
                                          const ClassReport& report,
                                          const ConvertTrajectory* trajectory,
                                          std::string_view input_bytes) {
  nlohmann::ordered_json doc;
  MatrixForm mf = classify_matrix(g);
  doc["graph"] = {
      {"n", g.vertex_count()},
      {"m", g.edge_count()},
      {"nu", cyclomatic_formula(g)},
      {"matrix_form", to_string(mf.form)},
  };
  nlohmann::ordered_json cls;
  cls["class"] = to_string(report.cls);
  if (report.j_max) {
    cls["j_max"] = *report.j_max;
  } else {
    cls["j_max"] = nullptr;
  }
  if (report.stabilization_step) {
    cls["stabilization_step"] = *report.stabilization_step;
  } else {
    cls["stabilization_step"] = nullptr;
  }
  cls["outside_paper_scope"] = report.outside_paper_scope;
  nlohmann::ordered_json contours = nlohmann::ordered_json::array();
  for (const ContourInfo& c : report.contours.contours) {
    nlohmann::ordered_json item;
    nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
    for (VertexId v : walk_vertices(g, c.cycle)) vertices.push_back(g.label(v));
    item["vertices"] = vertices;
    item["kind"] = to_string(c.kind);
    item["has_entry"] = c.has_entry;
    item["has_exit"] = c.has_exit;
    contours.push_back(item);
  }
  cls["contours"] = contours;
  cls["contours_truncated"] = report.contours.truncated;
  nlohmann::ordered_json intervals = nlohmann::ordered_json::array();
  for (const Interval& interval : report.critical_intervals) {
    intervals.push_back({{"start", g.label(interval.start_vertex)},
                         {"end", g.label(interval.end_vertex)},
                         {"length", interval.length}});
  }
  cls["critical_intervals"] = intervals;
  doc["class_report"] = cls;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  if (trajectory != nullptr) {
    for (std::size_t j = 0; j < trajectory->step_count(); ++j) {
      const TrajectoryStep& s = trajectory->step(j);
      steps.push_back({{"step", j},
                       {"n", s.n},
                       {"m", s.m},
                       {"nu", s.nu},
                       {"canonical", s.matrix_form.form == Form::Canonical}});
    }
  }
  doc["trajectory"] = steps;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  doc["input_digest"] = "fnv1a64:" + fnv1a64_hex(input_bytes);
  return doc;
}

}  // namespace holonomy
