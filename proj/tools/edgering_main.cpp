// edgering: decide Serre's condition (R1) for edge rings of graphs and
// cross-check the decision with exact lattice arithmetic.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edgering/errors.hpp"
#include "edgering/facets.hpp"
#include "edgering/graph.hpp"
#include "edgering/graph_io.hpp"
#include "edgering/oracle.hpp"
#include "edgering/report.hpp"
#include "edgering/serre.hpp"
#include "edgering/sweep.hpp"

namespace {

using namespace edgering;

enum ExitCode : int { kOk = 0, kInputError = 2, kUnsupported = 3, kInternal = 4 };

struct Input {
  std::string label;
  Graph graph;
};

struct InputOptions {
  std::string path;
  std::string format = "auto";
  bool json = false;
  bool early_exit = false;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Throws ParseError or std::runtime_error (unreadable file).
std::vector<Input> load(const InputOptions& opt) {
  std::ifstream file(opt.path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + opt.path);
  std::string format = opt.format;
  if (format == "auto") format = ends_with(opt.path, ".g6") || ends_with(opt.path, ".graph6") ? "graph6" : "edge-list";
  std::vector<Input> out;
  if (format == "graph6") {
    std::vector<Graph> graphs = parse_graph6(file);
    for (std::size_t k = 0; k < graphs.size(); ++k) out.push_back({opt.path + "#" + std::to_string(k + 1), graphs[k]});
  } else {
    out.push_back({opt.path, parse_edge_list(file)});
  }
  return out;
}

void emit(const Report& r, const InputOptions& opt, double millis) {
  if (opt.json) {
    std::cout << to_json(r).dump() << '\n';
  } else {
    std::cout << render_text(r) << '\n';
    std::cerr << r.input << ": elapsed " << millis << " ms\n";
  }
}

template <typename PerGraph>
int for_each_input(const InputOptions& opt, PerGraph&& per_graph) {
  std::vector<Input> inputs;
  try {
    inputs = load(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << opt.path << ": " << e.what() << '\n';
    return kInputError;
  }
  int code = kOk;
  for (const Input& in : inputs) {
    const auto start = std::chrono::steady_clock::now();
    try {
      Report r = per_graph(in);
      const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
      emit(r, opt, took.count());
      if (r.agreement && !*r.agreement) code = std::max<int>(code, kInternal);
    } catch (const UnsupportedInput& e) {
      std::cerr << "error: " << in.label << ": " << e.what() << '\n';
      code = std::max<int>(code, kUnsupported);
    } catch (const std::exception& e) {
      std::cerr << "internal error: " << in.label << ": " << e.what() << '\n';
      code = std::max<int>(code, kInternal);
    }
  }
  return code;
}

int cmd_classify(const InputOptions& opt) {
  return for_each_input(opt, [&](const Input& in) { return make_report(in.label, in.graph, classify(in.graph, opt.early_exit)); });
}

int cmd_facets(const InputOptions& opt) {
  return for_each_input(opt, [&](const Input& in) {
    require_connected_nonbipartite(in.graph);
    Report r = make_report(in.label, in.graph, classify(in.graph));
    r.facets.emplace();
    for (const FacetDescriptor& f : facets(in.graph)) r.facets->push_back({f, support_form(in.graph, f), std::nullopt, std::nullopt});
    return r;
  });
}

int cmd_oracle(const InputOptions& opt) {
  return for_each_input(opt, [&](const Input& in) {
    require_connected_nonbipartite(in.graph);
    Report r = make_report(in.label, in.graph, classify(in.graph));
    r.facets.emplace();
    R1Result oracle;
    for (const FacetCheck& c : oracle_facet_checks(in.graph)) {
      if (!c.condition_one) {
        throw InternalInconsistency("facet " + c.facet.to_string() + " has no generator at normalized height 1");
      }
      r.facets->push_back({c.facet, c.form, c.condition_one, c.condition_two});
      if (!c.passed()) {
        oracle.satisfied = false;
        oracle.violations.push_back(c.facet);
      }
    }
    r.oracle_r1 = oracle.satisfied;
    r.agreement = oracle == satisfies_r1(in.graph);
    return r;
  });
}

int cmd_sweep(int max_vertices, const std::string& source, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepSummary s;
  try {
    if (!source.empty()) {
      std::ifstream file(source, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + source);
      s = sweep_graphs(parse_graph6(file), options);
    } else {
      s = sweep_labelled(max_vertices, options);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << source << ": " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  std::cout << "graphs: " << s.graphs << '\n'
            << "skipped (disconnected or bipartite): " << s.skipped << '\n'
            << "checked: " << s.checked << '\n'
            << "normal: " << s.normal << '\n'
            << "r1: " << s.r1 << '\n'
            << "facets: " << s.facets << '\n'
            << "disagreements: " << s.disagreements << '\n';
  if (s.first_failure_graph6) {
    std::cout << "first failure: " << *s.first_failure_graph6 << '\n';
    for (const std::string& m : s.first_failure_messages) std::cout << "  " << m << '\n';
  }
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  std::cerr << "elapsed " << took.count() << " s\n";
  return s.disagreements == 0 ? kOk : kInternal;
}

int cmd_generate(const std::string& name, const std::vector<int>& params, const std::string& out_path) {
  const auto family = family_from_name(name);
  if (!family) {
    std::cerr << "error: unknown family '" << name << "'\n";
    return kInputError;
  }
  Graph g;
  try {
    g = generate_family(*family, params);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  const std::string text = serialize_edge_list(g);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!(file << text)) {
    std::cerr << "error: cannot write " << out_path << '\n';
    return kInputError;
  }
  return kOk;
}

void add_input_options(CLI::App* cmd, InputOptions& opt) {
  cmd->add_option("path", opt.path, "graph file (edge list or graph6)")->required();
  cmd->add_option("--format", opt.format, "input format")->check(CLI::IsMember({"auto", "edge-list", "graph6"}));
  cmd->add_flag("--json", opt.json, "emit one JSON object per graph");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serre's condition (R1) for edge rings of finite graphs"};
  app.require_subcommand(1);

  InputOptions classify_opt, facets_opt, oracle_opt;
  auto* classify_cmd = app.add_subcommand("classify", "normality and (R1) report");
  add_input_options(classify_cmd, classify_opt);
  classify_cmd->add_flag("--early-exit", classify_opt.early_exit, "report only the first (R1) violation");

  auto* facets_cmd = app.add_subcommand("facets", "facets of the edge polytope with support forms");
  add_input_options(facets_cmd, facets_opt);

  auto* oracle_cmd = app.add_subcommand("oracle", "lattice conditions per facet, compared with the combinatorial test");
  add_input_options(oracle_cmd, oracle_opt);

  int max_vertices = 6;
  std::string source;
  SweepOptions sweep_opt;
  auto* sweep_cmd = app.add_subcommand("sweep", "cross-check every invariant over many graphs");
  auto* max_opt = sweep_cmd->add_option("--max-vertices", max_vertices, "all labelled graphs up to this order (<= 7)");
  sweep_cmd->add_option("--source", source, "graph6 corpus instead of labelled enumeration")->excludes(max_opt);
  sweep_cmd->add_option("--jobs", sweep_opt.jobs, "worker threads (0 = all cores)");
  sweep_cmd->add_flag("--early-exit", sweep_opt.early_exit, "stop at the first failing graph");

  std::string family, out_path;
  int k = -1, n = -1, a = -1, b = -1;
  auto* generate_cmd = app.add_subcommand("generate", "write a family member as an edge list");
  generate_cmd->add_option("family", family, "bridge | cycle | complete | complete_bipartite")->required();
  auto* k_opt = generate_cmd->add_option("--k", k, "bridge vertices");
  auto* n_opt = generate_cmd->add_option("--n", n, "cycle length / complete graph order");
  auto* a_opt = generate_cmd->add_option("--a", a, "first side of K_{a,b}");
  auto* b_opt = generate_cmd->add_option("--b", b, "second side of K_{a,b}");
  generate_cmd->add_option("-o,--output", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (*classify_cmd) return cmd_classify(classify_opt);
  if (*facets_cmd) return cmd_facets(facets_opt);
  if (*oracle_cmd) return cmd_oracle(oracle_opt);
  if (*sweep_cmd) return cmd_sweep(max_vertices, source, sweep_opt);
  if (*generate_cmd) {
    std::vector<int> params;
    if (family == "bridge" && *k_opt) params = {k};
    if ((family == "cycle" || family == "complete") && *n_opt) params = {n};
    if (family == "complete_bipartite" && *a_opt && *b_opt) params = {a, b};
    return cmd_generate(family, params, out_path);
  }
  return kInputError;
}
