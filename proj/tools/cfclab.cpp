#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "cfclab/alpha.hpp"
#include "cfclab/coloring.hpp"
#include "cfclab/construct.hpp"
#include "cfclab/error.hpp"
#include "cfclab/families.hpp"
#include "cfclab/graph_io.hpp"
#include "cfclab/harness.hpp"
#include "cfclab/solver.hpp"
#include "json.hpp"

namespace {

using namespace cfclab;

// '-' means stdin / stdout throughout.

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) fail(ErrKind::BadFormat, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrKind::BadFormat, "cannot open " + path + " for writing");
  out << content;
}

bool looks_graph6(const std::string& path, const std::string& content) {
  if (path.size() > 3 && path.substr(path.size() - 3) == ".g6") return true;
  // an edge list always starts with digits / whitespace / comments
  for (char ch : content) {
    if (ch == '#') return false;
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return !(std::isdigit(static_cast<unsigned char>(ch)));
  }
  return false;
}

Graph load_graph(const std::string& path) {
  std::string content = slurp(path);
  if (looks_graph6(path, content)) {
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) return read_graph6(line);
    fail(ErrKind::BadFormat, "no graph6 line in " + path);
  }
  std::istringstream in(content);
  return read_edge_list(in);
}

std::pair<Graph, EdgeColoring> load_colored(const std::string& path) {
  std::string content = slurp(path);
  std::istringstream in(content);
  return read_colored_edge_list(in);
}

std::uint64_t seed_fallback(std::uint64_t seed, bool seed_given) {
  if (seed_given) return seed;
  if (const char* env = std::getenv("CFC_LAB_SEED")) return std::strtoull(env, nullptr, 10);
  return seed;
}

std::string graph_text(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

int run_alpha(const std::string& input, const std::string& format) {
  Graph g = load_graph(input);
  AlphaResult res = independence_number(g);
  if (format == "json") {
    nlohmann::json j{{"alpha", res.value}, {"witness", res.witness}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "alpha: " << res.value << "\n";
    std::cout << "witness:";
    for (int v : res.witness) std::cout << " " << v;
    std::cout << "\n";
  }
  return 0;
}

int run_cfc_exact(const std::string& input, int cap, bool cap_given, int limit,
                  const std::string& witness_path, const std::string& stats_path,
                  const std::string& format) {
  Graph g = load_graph(input);
  CfcResult res = cfc_exact(g, cap_given ? std::optional<int>(cap) : std::nullopt, limit);
  nlohmann::json stats{{"value", res.value},
                       {"nodes", res.stats.nodes},
                       {"colorings_examined", res.stats.colorings_examined},
                       {"prunes", res.stats.prunes},
                       {"budgets_exhausted", res.stats.budgets_exhausted},
                       {"wall_ms", res.stats.wall_ms}};
  if (format == "json") {
    nlohmann::json j{{"cfc", res.value}, {"stats", stats}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << res.value << "\n";
  }
  if (!witness_path.empty()) {
    std::ostringstream out;
    write_colored_edge_list(g, res.witness, out);
    emit(witness_path, out.str());
  }
  if (!stats_path.empty()) emit(stats_path, stats.dump(2) + "\n");
  return 0;
}

int run_cfc_bounds(const std::string& input, const std::string& format) {
  Graph g = load_graph(input);
  int lower = cfc_lower_bound(g);
  AlphaResult a = independence_number(g);
  bool tree = is_tree(g);
  bool cut = !cut_edges(g).empty();
  int h = cut ? h_value(g) : 0;
  nlohmann::json j{{"lower_bound", lower}, {"upper_bound_alpha", a.value},
                   {"upper_bound_order", g.n() - 1}};
  if (cut) j["upper_bound_h_plus_1"] = h + 1;
  if (tree) {
    j["tree_maxdeg"] = max_degree(g);
    j["tree_diameter"] = diameter(g);
  }
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "lower_bound: " << lower << "\n";
    std::cout << "upper bounds: alpha=" << a.value << " n-1=" << g.n() - 1;
    if (cut) std::cout << " h+1=" << h + 1;
    std::cout << "\n";
  }
  return 0;
}

int run_verify(const std::string& input, const std::string& cert_path) {
  auto [g, coloring] = load_colored(input);
  Certificate cert = is_conflict_free_connected(g, coloring);
  if (!cert_path.empty()) emit(cert_path, certificate_to_json(cert) + "\n");
  if (cert.passed) {
    std::cout << "conflict-free connected: yes\n";
    std::cout << "pairs certified: " << cert.pairs.size() << "\n";
    return 0;
  }
  std::cout << "conflict-free connected: no\n";
  std::cout << "failing pair: " << cert.failing_pair->first << " " << cert.failing_pair->second
            << "\n";
  return 1;
}

int run_construct(const std::string& method, const std::string& input, int k, int edges,
                  const std::string& out_path, const std::string& trace_path) {
  Graph graph;
  EdgeColoring coloring;
  ConstructionTrace trace;
  if (method == "theorem1" || method == "theorem2") {
    if (input.empty()) fail(ErrKind::BadParameters, "method needs a graph file");
    graph = load_graph(input);
    Construction con =
        method == "theorem1" ? color_via_theorem1(graph) : color_tree_via_theorem2(graph);
    coloring = std::move(con.coloring);
    trace = std::move(con.trace);
  } else if (method == "hk" || method == "qk" || method == "star") {
    if (k <= 0) fail(ErrKind::BadParameters, "method needs --k");
    ColoredGraph colored = method == "hk" ? color_H(k) : method == "qk" ? color_Q(k) : color_star(k);
    graph = std::move(colored.graph);
    coloring = std::move(colored.coloring);
    trace.root = {method + " table", coloring.palette_size, 0, {}};
  } else if (method == "path") {
    if (edges <= 0) fail(ErrKind::BadParameters, "method needs --edges");
    ColoredGraph colored = color_path_ruler(edges);
    graph = std::move(colored.graph);
    coloring = std::move(colored.coloring);
    trace.root = {"ruler sequence", coloring.palette_size, 0, {}};
  } else {
    fail(ErrKind::BadParameters, "unknown method " + method);
  }
  std::ostringstream out;
  write_colored_edge_list(graph, coloring, out);
  emit(out_path, out.str());
  if (!trace_path.empty()) emit(trace_path, trace_to_json(trace) + "\n");
  return 0;
}

int run_gen(const std::string& family_name, int n, bool n_given, int k, int l, int edges,
            std::uint64_t seed, const std::string& out_path, bool g6) {
  auto family = parse_family(family_name);
  if (!family) fail(ErrKind::BadParameters, "unknown family " + family_name);
  FamilySpec spec;
  spec.family = *family;
  spec.k = k;
  spec.l = l;
  spec.seed = seed;
  switch (*family) {
    case Family::complete:
    case Family::star:
    case Family::random_tree:
      spec.n = n;
      break;
    case Family::path:
      spec.n = edges > 0 ? edges : n;
      break;
    case Family::H:
    case Family::Q:
    case Family::remark1:
    case Family::remark2:
      break;
    case Family::G_lk:
      spec.n = n_given ? n : l + 3;  // smallest comfortable default
      break;
  }
  Graph g = gen(spec);
  emit(out_path, g6 ? write_graph6(g) + "\n" : graph_text(g));
  return 0;
}

int run_enum(const std::string& what, int n, const std::string& out_dir,
             const std::string& order_name, bool g6) {
  EnumOrder order = order_name == "reverse" ? EnumOrder::reverse : EnumOrder::forward;
  std::vector<Graph> all =
      what == "trees" ? enumerate_trees(n, order) : enumerate_connected_graphs(n, order);
  if (out_dir == "-") {
    for (const Graph& g : all) std::cout << (g6 ? write_graph6(g) + "\n" : graph_text(g));
    if (!g6) std::cerr << all.size() << " graphs\n";
    return 0;
  }
  for (size_t i = 0; i < all.size(); ++i) {
    std::ostringstream name;
    name << out_dir << "/" << (what == "trees" ? "t" : "g") << n << "_";
    name.width(4);
    name.fill('0');
    name << i << (g6 ? ".g6" : ".el");
    emit(name.str(), g6 ? write_graph6(all[i]) + "\n" : graph_text(all[i]));
  }
  std::cerr << "wrote " << all.size() << " graphs to " << out_dir << "\n";
  return 0;
}

int run_harness(const std::string& check_name, int max_n_graphs, int max_n_trees,
                std::uint64_t seed, int threads, const std::string& out_path,
                const std::string& format) {
  HarnessBounds bounds{max_n_graphs, max_n_trees};
  Report report;
  if (!check_name.empty()) {
    auto id = parse_check_id(check_name);
    if (!id) fail(ErrKind::BadParameters, "unknown check " + check_name);
    report = run_check(CheckSpec{*id, bounds, seed}, threads);
  } else {
    report = run_all(bounds, seed, threads);
  }
  std::string rendered = format == "csv"    ? report_to_csv(report)
                         : format == "text" ? report_to_text(report)
                                            : report_to_json(report);
  emit(out_path, rendered);
  if (out_path != "-") std::cerr << (report.all_passed ? "all checks passed\n" : "failures present\n");
  return report.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conflict-free connection coloring toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  app.add_option("--threads", threads, "worker threads for the harness");

  std::string format = "text";
  auto* format_opt = app.add_option("--format", format, "output format: text|json|csv")
                         ->check(CLI::IsMember({"text", "json", "csv"}));

  // alpha
  auto* alpha_cmd = app.add_subcommand("alpha", "maximum independent set");
  std::string alpha_input;
  alpha_cmd->add_option("graphfile", alpha_input, "edge-list file or '-'")->required();

  // cfc
  auto* cfc_cmd = app.add_subcommand("cfc", "conflict-free connection number");
  cfc_cmd->require_subcommand(1);
  auto* exact_cmd = cfc_cmd->add_subcommand("exact", "exact value via search");
  std::string exact_input, exact_witness, exact_stats;
  int exact_cap = 0, exact_limit = 20;
  exact_cmd->add_option("graphfile", exact_input)->required();
  auto* cap_opt = exact_cmd->add_option("--cap", exact_cap, "budget cap");
  exact_cmd->add_option("--emit-witness", exact_witness, "write witness coloring (.cel)");
  exact_cmd->add_option("--stats", exact_stats, "write search stats JSON");
  exact_cmd->add_option("--limit", exact_limit, "edge-count limit override (default 20)");

  auto* bounds_cmd = cfc_cmd->add_subcommand("bounds", "lower/upper bounds only");
  std::string bounds_input;
  bounds_cmd->add_option("graphfile", bounds_input)->required();

  auto* construct_cmd = cfc_cmd->add_subcommand("construct", "constructive colorings");
  std::string con_method, con_input, con_out = "-", con_trace;
  int con_k = 0, con_edges = 0;
  construct_cmd->add_option("--method", con_method, "theorem1|theorem2|hk|qk|star|path")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "hk", "qk", "star", "path"}));
  construct_cmd->add_option("graphfile", con_input, "input graph (theorem1/theorem2)");
  construct_cmd->add_option("--k", con_k, "parameter k (hk/qk/star)");
  construct_cmd->add_option("--edges", con_edges, "edge count (path)");
  construct_cmd->add_option("-o,--output", con_out, "colored edge list output");
  construct_cmd->add_option("--trace", con_trace, "construction trace JSON output");

  // verify-coloring
  auto* verify_cmd = app.add_subcommand("verify-coloring", "check a colored edge list");
  std::string verify_input, verify_cert;
  verify_cmd->add_option("celfile", verify_input)->required();
  verify_cmd->add_option("--certificate", verify_cert, "write certificate JSON");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a named family instance");
  std::string gen_family, gen_out = "-";
  int gen_n = 0, gen_k = 0, gen_l = 0, gen_edges = 0;
  std::uint64_t gen_seed = 1;
  bool gen_g6 = false;
  gen_cmd->add_option("family", gen_family, "complete|star|path|H|Q|G_lk|remark1|remark2|random_tree")
      ->required();
  auto* gen_n_opt = gen_cmd->add_option("--n", gen_n, "vertex count");
  gen_cmd->add_option("--k", gen_k, "parameter k");
  gen_cmd->add_option("--l", gen_l, "parameter l (G_lk)");
  gen_cmd->add_option("--edges", gen_edges, "edge count (path)");
  auto* gen_seed_opt = gen_cmd->add_option("--seed", gen_seed, "seed (random_tree)");
  gen_cmd->add_option("-o,--output", gen_out, "output file or '-'");
  gen_cmd->add_flag("--g6", gen_g6, "write graph6 instead of edge list");

  // enum
  auto* enum_cmd = app.add_subcommand("enum", "enumerate non-isomorphic instances");
  std::string enum_what, enum_out = "-", enum_order = "forward";
  int enum_n = 0;
  bool enum_g6 = false;
  enum_cmd->add_option("what", enum_what, "trees|graphs")
      ->required()
      ->check(CLI::IsMember({"trees", "graphs"}));
  enum_cmd->add_option("n", enum_n, "vertex count")->required();
  enum_cmd->add_option("-o,--output", enum_out, "output directory or '-'");
  enum_cmd->add_option("--order", enum_order, "forward|reverse")
      ->check(CLI::IsMember({"forward", "reverse"}));
  enum_cmd->add_flag("--g6", enum_g6, "write graph6 lines");

  // harness
  auto* harness_cmd = app.add_subcommand("harness", "verification battery");
  auto* harness_run = harness_cmd->add_subcommand("run", "run checks");
  std::string harness_check, harness_out = "-";
  int harness_graphs = 6, harness_trees = 10;
  std::uint64_t harness_seed = 1;
  harness_run->add_option("--check", harness_check, "single check id");
  harness_run->add_option("--max-n-graphs", harness_graphs, "graph corpus bound (<= 7)");
  harness_run->add_option("--max-n-trees", harness_trees, "tree corpus bound (<= 12)");
  auto* harness_seed_opt = harness_run->add_option("--seed", harness_seed, "seed");
  harness_run->add_option("-o,--output", harness_out, "report destination");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*alpha_cmd) return run_alpha(alpha_input, format);
    if (*exact_cmd)
      return run_cfc_exact(exact_input, exact_cap, cap_opt->count() > 0, exact_limit,
                           exact_witness, exact_stats, format);
    if (*bounds_cmd) return run_cfc_bounds(bounds_input, format);
    if (*construct_cmd)
      return run_construct(con_method, con_input, con_k, con_edges, con_out, con_trace);
    if (*verify_cmd) return run_verify(verify_input, verify_cert);
    if (*gen_cmd)
      return run_gen(gen_family, gen_n, gen_n_opt->count() > 0, gen_k, gen_l, gen_edges,
                     seed_fallback(gen_seed, gen_seed_opt->count() > 0), gen_out, gen_g6);
    if (*enum_cmd) return run_enum(enum_what, enum_n, enum_out, enum_order, enum_g6);
    if (*harness_run) {
      // reports written to files default to json, terminal output to text
      std::string report_format = format_opt->count() > 0 ? format
                                  : harness_out == "-"    ? "text"
                                                          : "json";
      return run_harness(harness_check, harness_graphs, harness_trees,
                         seed_fallback(harness_seed, harness_seed_opt->count() > 0), threads,
                         harness_out, report_format);
    }
  } catch (const cfclab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
