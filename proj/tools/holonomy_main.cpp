// Command-line front end: validate / convert / reverse / classify /
// trajectory / walks over edge-list or adjacency-csv graph files.
//
// Exit codes: 0 success, 1 domain errors, 2 usage and parse errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "holonomy/classify.hpp"
#include "holonomy/converting.hpp"
#include "holonomy/enumeration.hpp"
#include "holonomy/io.hpp"
#include "holonomy/reverse.hpp"

namespace {

using namespace holonomy;

struct InputOptions {
  std::string path;
  std::string format;  // "", "edges", "csv"
  bool allow_self_loops = false;
};

struct LoadedGraph {
  DiGraph graph;
  std::string bytes;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw UsageError("cannot read input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string sniff_format(const InputOptions& opt) {
  if (!opt.format.empty()) return opt.format;
  auto ends_with = [&](const char* suffix) {
    std::string s(suffix);
    return opt.path.size() >= s.size() &&
           opt.path.compare(opt.path.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with(".edges")) return "edges";
  if (ends_with(".csv")) return "csv";
  throw UsageError("cannot infer format of '" + opt.path +
                   "'; pass --format edges|csv");
}

LoadedGraph load_graph(const InputOptions& opt) {
  LoadedGraph loaded;
  loaded.bytes = read_file(opt.path);
  std::string format = sniff_format(opt);
  if (format == "edges") {
    loaded.graph = parse_edge_list(loaded.bytes);
  } else {
    loaded.graph = parse_matrix_csv(loaded.bytes, opt.allow_self_loops);
  }
  return loaded;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) throw UsageError("cannot write output file: " + path);
  out << content;
}

void write_graph(const std::string& path, const DiGraph& g) {
  std::string lower = path;
  if (lower.size() >= 6 && lower.compare(lower.size() - 6, 6, ".edges") == 0) {
    write_file(path, serialize_edge_list(g));
  } else {
    write_file(path, serialize_matrix_csv(g));
  }
}

std::size_t env_budget(std::size_t fallback) {
  const char* value = std::getenv("HOLONOMY_BUDGET");
  if (value == nullptr || *value == '\0') return fallback;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(value, &end, 10);
  if (end == nullptr || *end != '\0' || parsed == 0) {
    throw UsageError("HOLONOMY_BUDGET must be a positive integer");
  }
  return static_cast<std::size_t>(parsed);
}

DiGraph strip_terminals(const DiGraph& g) {
  DiGraph stripped;
  std::vector<std::optional<VertexId>> map(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::string& l = g.label(v);
    if (!l.empty() && l[0] == '#') continue;
    map[v] = stripped.add_vertex(l);
  }
  for (const Edge& e : g.edges()) {
    if (map[e.tail] && map[e.head]) stripped.add_edge(*map[e.tail], *map[e.head]);
  }
  return stripped;
}

void print_summary(const DiGraph& g) {
  MatrixForm mf = classify_matrix(g);
  std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count()
            << " nu=" << cyclomatic_formula(g) << " form=" << to_string(mf.form)
            << "\n";
}

int cmd_validate(const InputOptions& input) {
  LoadedGraph loaded = load_graph(input);
  MatrixForm mf = classify_matrix(loaded.graph);
  std::cout << "form=" << to_string(mf.form) << "\n";
  std::string violations;
  for (Requirement r : mf.violations) {
    if (!violations.empty()) violations += ",";
    violations += to_string(r);
  }
  std::cout << "violations=" << (violations.empty() ? "none" : violations) << "\n";
  std::cout << "multigraph=" << (loaded.graph.has_parallel_edges() ? "true" : "false")
            << "\n";
  return at_least_quasicanonical(mf) ? 0 : 1;
}

int cmd_convert(const InputOptions& input, std::size_t steps, bool strip,
                const std::string& out_path, const std::string& dot_path,
                std::size_t budget) {
  LoadedGraph loaded = load_graph(input);
  ConvertTrajectory traj = iterate_convert(loaded.graph, steps, budget);
  const DiGraph& final_graph = traj.steps.back().graph;
  DiGraph output = strip ? strip_terminals(final_graph) : final_graph;
  std::cout << "steps=" << steps << " ";
  print_summary(output);
  if (!out_path.empty()) write_graph(out_path, output);
  if (!dot_path.empty()) {
    if (strip || steps == 0) {
      write_file(dot_path, export_dot(output));
    } else {
      std::unordered_map<VertexId, TupleLabel> labels;
      std::vector<TupleLabel> decoded = labels_at_step(traj, steps);
      for (VertexId v = 0; v < final_graph.vertex_count(); ++v) {
        labels.emplace(v, decoded[v]);
      }
      write_file(dot_path, export_dot(final_graph, &labels));
    }
  }
  return 0;
}

int cmd_reverse(const InputOptions& input, std::size_t times,
                const std::string& out_path, const std::string& dot_path) {
  LoadedGraph loaded = load_graph(input);
  DiGraph current = loaded.graph;
  for (std::size_t i = 0; i < times; ++i) current = reverse_convert(current);
  std::cout << "times=" << times << " ";
  print_summary(current);
  if (!out_path.empty()) write_graph(out_path, current);
  if (!dot_path.empty()) write_file(dot_path, export_dot(current));
  return 0;
}

int cmd_classify(const InputOptions& input, const std::string& json_path) {
  LoadedGraph loaded = load_graph(input);
  ClassReport report = classify_graph(loaded.graph);
  std::cout << "class=" << to_string(report.cls) << " j_max=";
  if (report.j_max) {
    std::cout << *report.j_max;
  } else {
    std::cout << "inf";
  }
  std::cout << "\n";
  std::cout << "critical_intervals=" << report.critical_intervals.size() << "\n";
  std::cout << "contours=" << report.contours.contours.size()
            << (report.contours.truncated ? " (truncated)" : "") << "\n";
  std::cout << "outside_paper_scope="
            << (report.outside_paper_scope ? "true" : "false") << "\n";
  if (report.stabilization_step) {
    std::cout << "stabilization_step=" << *report.stabilization_step
              << " stabilized_nu=" << *report.stabilized_nu << "\n";
  }
  if (!json_path.empty()) {
    nlohmann::ordered_json doc =
        report_json(loaded.graph, report, nullptr, loaded.bytes);
    write_file(json_path, doc.dump(2) + "\n");
  }
  return 0;
}

int cmd_trajectory(const InputOptions& input, std::size_t steps, std::size_t budget) {
  LoadedGraph loaded = load_graph(input);
  ConvertTrajectory traj = iterate_convert(loaded.graph, steps, budget);
  std::cout << "step n m nu canonical\n";
  for (std::size_t j = 0; j < traj.step_count(); ++j) {
    const TrajectoryStep& s = traj.step(j);
    std::cout << j << " " << s.n << " " << s.m << " " << s.nu << " "
              << (s.matrix_form.form == Form::Canonical ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_walks(const InputOptions& input, std::size_t length, bool closed,
              bool hamiltonian, const std::string& oracle, std::size_t budget) {
  LoadedGraph loaded = load_graph(input);
  WalkSet set;
  if (hamiltonian) {
    set = hamiltonian_circuits(loaded.graph, budget);
  } else if (closed) {
    set = enumerate_contours(loaded.graph, length, budget);
  } else if (oracle == "convert") {
    set = enumerate_walks_via_converting(loaded.graph, length, budget);
  } else {
    set = enumerate_walks_dfs(loaded.graph, length, budget);
  }
  for (const std::vector<std::string>& walk : set.walks) {
    std::string line;
    for (const std::string& token : walk) {
      if (!line.empty()) line += ' ';
      line += token;
    }
    std::cout << line << "\n";
  }
  if (set.truncated) std::cerr << "warning: output truncated by budget\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed-graph converting, classification and enumeration"};
  app.require_subcommand(1);

  auto add_input = [](CLI::App* cmd, InputOptions& input) {
    cmd->add_option("--input", input.path, "graph file (.edges or .csv)")
        ->required();
    cmd->add_option("--format", input.format, "input format override")
        ->check(CLI::IsMember({"edges", "csv"}));
    cmd->add_flag("--allow-self-loops", input.allow_self_loops,
                  "accept nonzero csv diagonals");
  };

  InputOptions validate_input;
  CLI::App* validate = app.add_subcommand("validate", "check the operator-matrix form");
  add_input(validate, validate_input);

  InputOptions convert_input;
  std::size_t convert_steps = 1;
  bool convert_strip = false;
  std::string convert_out;
  std::string convert_dot;
  std::size_t convert_budget = 0;
  CLI::App* convert = app.add_subcommand("convert", "iterate straight converting");
  add_input(convert, convert_input);
  convert->add_option("--steps", convert_steps, "number of converting steps")
      ->required();
  convert->add_flag("--strip-terminals", convert_strip,
                    "drop sentinel terminals from the output");
  convert->add_option("--out", convert_out, "write the final graph here");
  convert->add_option("--dot", convert_dot, "write DOT with tuple labels here");
  convert->add_option("--budget", convert_budget, "vertex budget override");

  InputOptions reverse_input;
  std::size_t reverse_times = 1;
  std::string reverse_out;
  std::string reverse_dot;
  CLI::App* reverse = app.add_subcommand("reverse", "apply reverse converting");
  add_input(reverse, reverse_input);
  reverse->add_option("--times", reverse_times, "how many reversals");
  reverse->add_option("--out", reverse_out, "write the result here");
  reverse->add_option("--dot", reverse_dot, "write DOT here");

  InputOptions classify_input;
  std::string classify_json;
  CLI::App* classify = app.add_subcommand("classify", "holonomy classification");
  add_input(classify, classify_input);
  classify->add_option("--json", classify_json, "write the full report here");

  InputOptions trajectory_input;
  std::size_t trajectory_steps = 0;
  std::size_t trajectory_budget = 0;
  CLI::App* trajectory = app.add_subcommand("trajectory", "print the converting table");
  add_input(trajectory, trajectory_input);
  trajectory->add_option("--steps", trajectory_steps, "number of converting steps")
      ->required();
  trajectory->add_option("--budget", trajectory_budget, "vertex budget override");

  InputOptions walks_input;
  std::size_t walks_length = 0;
  bool walks_closed = false;
  bool walks_hamiltonian = false;
  std::string walks_oracle = "dfs";
  std::size_t walks_budget = 0;
  CLI::App* walks = app.add_subcommand("walks", "enumerate walks and contours");
  add_input(walks, walks_input);
  CLI::Option* length_option =
      walks->add_option("--length", walks_length, "walk length in edges");
  walks->add_flag("--closed", walks_closed, "closed walks up to --length");
  walks->add_flag("--hamiltonian", walks_hamiltonian, "hamiltonian circuits only");
  walks->add_option("--oracle", walks_oracle, "enumeration route for plain walks")
      ->check(CLI::IsMember({"dfs", "convert"}));
  walks->add_option("--budget", walks_budget, "search budget override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_input);
    if (convert->parsed()) {
      std::size_t budget =
          convert_budget > 0 ? convert_budget : env_budget(kDefaultVertexBudget);
      return cmd_convert(convert_input, convert_steps, convert_strip, convert_out,
                         convert_dot, budget);
    }
    if (reverse->parsed()) {
      return cmd_reverse(reverse_input, reverse_times, reverse_out, reverse_dot);
    }
    if (classify->parsed()) return cmd_classify(classify_input, classify_json);
    if (trajectory->parsed()) {
      std::size_t budget = trajectory_budget > 0 ? trajectory_budget
                                                 : env_budget(kDefaultVertexBudget);
      return cmd_trajectory(trajectory_input, trajectory_steps, budget);
    }
    if (walks->parsed()) {
      if (!walks_hamiltonian && length_option->count() == 0) {
        throw UsageError("walks needs --length unless --hamiltonian is given");
      }
      if ((walks_closed || walks_hamiltonian) && walks_oracle != "dfs") {
        throw UsageError("--oracle applies to plain walks only");
      }
      std::size_t fallback = walks_oracle == "convert" ? kDefaultVertexBudget
                                                       : kDefaultEnumerationBudget;
      std::size_t budget = walks_budget > 0 ? walks_budget : env_budget(fallback);
      return cmd_walks(walks_input, walks_length, walks_closed, walks_hamiltonian,
                       walks_oracle, budget);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ReservedToken
               ? 2
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
