#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "liec/io.hpp"
#include "liec/liec.hpp"

using namespace liec;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Usage("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

bool pretty = false;

int emit(const json& j, int code = 0) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << '\n';
  return code;
}

int refuse(const std::string& reason) { return emit({{"ok", false}, {"reason", reason}}, 1); }

std::string reason_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::InTPrime:
    case ErrorCode::NotColorable: return "in T-prime";
    case ErrorCode::DisconnectedInput: return "disconnected input";
    case ErrorCode::WrongClass:
    case ErrorCode::NotUnicyclic: return "no construction for this graph class";
    default: return e.what();
  }
}

Graph read_graph(const std::string& path) { return parse_edge_list(slurp(path)); }

EdgeColoring construct_any(const Graph& g, bool components, ConstructionTrace& trace) {
  if (!components || g.size() == 0) {
    auto r = construct(g);
    trace.steps.insert(trace.steps.end(), r.trace.steps.begin(), r.trace.steps.end());
    return r.coloring;
  }
  EdgeColoring out;
  for (const auto& part : connected_components(g)) {
    if (part.graph.size() == 0) continue;
    auto r = construct(part.graph);
    trace.steps.insert(trace.steps.end(), r.trace.steps.begin(), r.trace.steps.end());
    for (const auto& [e, c] : lift(part, r.coloring)) out.set(e, c);
  }
  return out;
}

json selftest() {
  int graphs = 0, mismatches = 0;
  for (const auto& g : enumerate_connected_graphs(6)) {
    ++graphs;
    const bool a = is_colorable(g), b = exhaustive_colorable(g);
    const bool c = chromatic_index_irregular(g).chi.has_value();
    if (a != b || b != c) ++mismatches;
  }
  return {{"ok", mismatches == 0}, {"graphs", graphs}, {"mismatches", mismatches}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally irregular edge colorings"};
  app.require_subcommand(1);
  app.add_flag("--pretty", pretty, "Indent JSON output");

  SolverOptions opts;
  bool timing = false, trace_flag = false, components = false;
  std::string graph_path, coloring_path, kind_name;
  GenSpec spec;

  auto* solve = app.add_subcommand("solve", "Exact locally irregular chromatic index");
  solve->add_option("graph", graph_path, "Edge-list file or -")->required();
  solve->add_option("--kmax", opts.kmax, "Largest palette probed")->check(CLI::Range(1, 8));
  solve->add_option("--budget", opts.edge_budget, "Edge limit for the search");
  solve->add_option("--threads", opts.threads, "Worker threads")->check(CLI::PositiveNumber);
  solve->add_flag("--timing", timing, "Include elapsed time");

  auto* verify = app.add_subcommand("verify", "Check a coloring");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("coloring", coloring_path, "Coloring JSON file or -")->required();

  auto* construct_cmd = app.add_subcommand("construct", "Build a 3-coloring");
  construct_cmd->add_option("graph", graph_path)->required();
  construct_cmd->add_flag("--trace", trace_flag, "Include the case trace");
  construct_cmd->add_flag("--components", components, "Color each component separately");

  auto* recognize = app.add_subcommand("recognize", "Family membership");
  recognize->add_option("graph", graph_path)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Structural class");
  classify_cmd->add_option("graph", graph_path)->required();

  auto* gen = app.add_subcommand("generate", "Write an edge list");
  gen->add_option("--kind", kind_name, "path, cycle, star, spidey, bowtie, tfamily, random-tree, random-unicyclic, random-cactus")->required();
  gen->add_option("--length", spec.length);
  gen->add_option("--legs", spec.legs);
  gen->add_option("--long-legs", spec.long_legs);
  gen->add_option("--seed", spec.seed);
  gen->add_option("--size", spec.size);
  gen->add_option("--steps", spec.steps);
  gen->add_option("--cycles", spec.cycles);
  gen->add_option("--max-edges", spec.max_edges);

  auto* self = app.add_subcommand("selftest", "Oracle equivalence on small graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve) {
      const Graph g = read_graph(graph_path);
      const auto report = chromatic_index_irregular(g, opts);
      return emit(to_json(g, report, timing), report.chi ? 0 : 1);
    }
    if (*verify) {
      const Graph g = read_graph(graph_path);
      const auto c = coloring_from_json(g, json::parse(slurp(coloring_path)));
      const auto check = verify_liec(g, c);
      if (check.ok()) return emit({{"ok", true}, {"colors", c.colors_used()}});
      return emit({{"ok", false}, {"violations", edges_json(g, check.violations)}}, 1);
    }
    if (*construct_cmd) {
      const Graph g = read_graph(graph_path);
      ConstructionTrace trace;
      EdgeColoring c;
      try {
        c = construct_any(g, components, trace);
      } catch (const Error& e) {
        return refuse(reason_of(e));
      }
      json out{{"ok", true}, {"colors", c.colors_used()}, {"coloring", to_json(g, c)}};
      if (trace_flag) out["trace"] = to_json(trace);
      return emit(out);
    }
    if (*recognize) {
      const Graph g = read_graph(graph_path);
      const bool t = is_T_member(g).has_value();
      const bool tp = is_T_prime_member(g);
      return emit({{"T", t}, {"T_PRIME", tp}, {"COLORABLE", !tp}});
    }
    if (*classify_cmd) {
      const Graph g = read_graph(graph_path);
      try {
        return emit(to_json(classify(g)));
      } catch (const Error& e) {
        return refuse(reason_of(e));
      }
    }
    if (*gen) {
      spec.kind = parse_gen_kind(kind_name);
      std::cout << to_edge_list(generate(spec));
      return 0;
    }
    if (*self) {
      const auto j = selftest();
      return emit(j, j["ok"].get<bool>() ? 0 : 1);
    }
  } catch (const Usage& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::MalformedLine:
      case ErrorCode::LoopEdge:
      case ErrorCode::DuplicateEdge:
      case ErrorCode::InvalidSpec:
      case ErrorCode::UnknownVertex:
      case ErrorCode::PartialColoring:
        std::cerr << e.what() << '\n';
        return 2;
      default: return refuse(reason_of(e));
    }
  }
  return 2;
}
