// radgirth command-line tool.
//
// Exit codes: 0 success, 1 a bound or witness check failed, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "radgirth/bounds.hpp"
#include "radgirth/constructions.hpp"
#include "radgirth/families.hpp"
#include "radgirth/geometry.hpp"
#include "radgirth/graph_io.hpp"
#include "radgirth/report_json.hpp"
#include "radgirth/search.hpp"
#include "radgirth/witness.hpp"

namespace {

using namespace radgirth;
using nlohmann::json;
namespace rj = radgirth::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  bool pretty = false;

  // construct
  std::string kind;
  std::uint32_t r = 0, delta = 0, c = 0, n = 0, q = 0, m = 0;
  std::string base;
  std::string format = "graph6";
  bool verify = false;

  // shared graph input
  std::string graph;

  // bound
  std::int64_t bound_n = 0, bound_delta = 0;
  std::uint32_t g = 4;

  // witness
  std::string set;
  std::uint32_t k = 0;
  std::uint32_t cycles_r = 0;
  std::uint64_t budget = 1'000'000;

  // search
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  bool long_run = false;
  bool no_classes = false;
  std::size_t n_max = 8;
  std::vector<std::size_t> deltas{2, 3};
  std::string input = "-";
};

void print_pretty(const json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      std::cout << pad << key << ":\n";
      print_pretty(value, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      std::cout << pad << key << ":\n";
      for (const json& row : value) {
        std::cout << pad << " ";
        for (const auto& [k, v] : row.items()) std::cout << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
        std::cout << '\n';
      }
    } else {
      std::cout << pad << std::left << std::setw(22) << key << (value.is_string() ? value.get<std::string>() : value.dump())
                << '\n';
    }
  }
}

void emit(const json& j, bool pretty) {
  if (pretty)
    print_pretty(j);
  else
    std::cout << j.dump() << '\n';
}

std::vector<Vertex> parse_set(const std::string& text) {
  std::vector<Vertex> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
      throw InputError("malformed vertex set '" + text + "': expected comma-separated vertex indices");
    out.push_back(static_cast<Vertex>(std::stoul(item)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Graph build(const Options& o) {
  if (o.kind == "box") return box_graph(o.r, o.delta, o.c);
  if (o.kind == "bipartite2") return bipartite_radius2(o.n, o.delta);
  if (o.kind == "radius3") return radius3_graph(o.n, o.delta);
  if (o.kind == "pg-plane") return projective_plane_incidence_graph(o.q);
  if (o.kind == "gq") return symplectic_quadrangle_incidence_graph(o.q);
  if (o.kind == "glue") {
    if (o.base.empty()) throw InputError("glue needs --base");
    return glue_cycle(read_graph_file(o.base), o.m);
  }
  if (o.kind == "cycle") return cycle_graph(o.n);
  if (o.kind == "petersen") return petersen_graph();
  if (o.kind == "heawood") return heawood_graph();
  if (o.kind == "tutte-coxeter") return tutte_coxeter_graph();
  throw InputError("unknown construction '" + o.kind + "'");
}

int run_construct(const Options& o) {
  const Graph g = build(o);
  if (o.format == "graph6") {
    std::cout << to_graph6(g) << '\n';
  } else if (o.format == "edgelist") {
    std::cout << to_edge_list(g);
  } else if (o.format == "dot") {
    std::cout << to_dot(g);
  } else {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    std::cout << json{{"order", g.order()}, {"edges", edges}, {"graph6", to_graph6(g)}}.dump() << '\n';
  }
  if (o.verify) std::cout << rj::metrics(metric_summary(g)).dump() << '\n';
  return kOk;
}

int run_analyze(const Options& o) {
  const Graph g = read_graph_file(o.graph);
  const MetricSummary ms = metric_summary(g);
  json out = rj::metrics(ms);
  json violations = json::array();
  for (const UpperBoundViolation& v : upper_bound_violations(g, ms))
    violations.push_back({{"even_girth", v.even_girth}, {"bound", rj::number(v.bound)}, {"radius", v.radius}});
  out["upper_bound_violations"] = violations;
  emit(out, o.pretty);
  return violations.empty() ? kOk : kCheckFailed;
}

int run_bound(const Options& o) {
  emit(rj::bounds(o.bound_n, o.bound_delta, o.g), o.pretty);
  return kOk;
}

int report_exit(const BoundReport& r) { return r.pass && r.checks_hold() ? kOk : kCheckFailed; }

int run_witness_check(const Options& o, const std::string& which) {
  const Graph g = read_graph_file(o.graph);
  const std::vector<Vertex> set = parse_set(o.set);
  try {
    BoundReport r;
    if (which == "general") {
      if (o.k == 0) throw InputError("general check needs --k");
      r = check_witness_general(g, set, o.k);
    } else if (which == "tf") {
      r = check_witness_triangle_free(g, set);
    } else {
      if (o.cycles_r == 0) throw InputError("cycles check needs --r");
      r = check_witness_two_cycles(g, set, o.cycles_r);
    }
    emit(rj::bound_report(r), o.pretty);
    return report_exit(r);
  } catch (const WitnessError& e) {
    json out = {{"kind", which}, {"pass", false}, {"error", e.what()}};
    if (e.pair()) out["pair"] = {e.pair()->first, e.pair()->second};
    emit(out, o.pretty);
    return kCheckFailed;
  }
}

int run_witness_find(const Options& o) {
  const Graph g = read_graph_file(o.graph);
  if (o.k == 0) throw InputError("witness find needs --k");
  WitnessSearchStats stats;
  const WitnessSet w = find_witness(g, o.k, o.budget, &stats);
  const BoundReport r = check_witness_general(g, w.vertices, o.k);
  json out = rj::bound_report(r);
  out["proven_optimal"] = stats.proven_optimal;
  out["nodes"] = stats.nodes;
  emit(out, o.pretty);
  return report_exit(r);
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.jobs = o.jobs;
  s.long_run = o.long_run;
  s.count_classes = !o.no_classes;
  s.progress = [](std::size_t done, std::size_t total) {
    if (done == total || done % 64 == 0) std::cerr << "progress " << done << "/" << total << '\n';
  };
  return s;
}

int run_enumerate(const Options& o) {
  const SearchResult r = enumerate_extremal(o.n, o.delta, o.g, search_options(o));
  json out = rj::search_result(r);
  bool ok = true;
  if (r.extremal_witness) ok = upper_bound_violations(*r.extremal_witness).empty();
  out["upper_bound_ok"] = ok;
  emit(out, o.pretty);
  return ok ? kOk : kCheckFailed;
}

int run_verify_small(const Options& o) {
  const ComparisonTable t = verify_theorem_main_small(o.n_max, o.deltas, search_options(o));
  emit(rj::comparison_table(t), o.pretty);
  return t.all_equal() ? kOk : kCheckFailed;
}

int run_stream(const Options& o) {
  StreamReport rep;
  if (o.input == "-") {
    rep = stream_verify(std::cin, o.delta, o.g);
  } else {
    std::ifstream in(o.input);
    if (!in) throw InputError("cannot open " + o.input);
    rep = stream_verify(in, o.delta, o.g);
  }
  for (const std::string& w : rep.warnings) std::cerr << "warning: " << w << '\n';
  emit(rj::stream_report(rep), o.pretty);
  return rep.violators.empty() ? kOk : kCheckFailed;
}

int run_extract(const Options& o) {
  const Graph g = read_graph_file(o.graph);
  if (o.k == 0) throw InputError("extract needs --k");
  const ExtractionResult e = extract_dense_subgraph(g, o.k);
  emit(rj::extraction(e), o.pretty);
  return e.meets_vertex_bound && e.meets_edge_bound && e.meets_covering_bound ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Radius, minimum degree and girth: constructions, bounds and verification"};
  app.require_subcommand(1);
  app.add_flag("--pretty", o.pretty, "Human-readable output instead of JSON");

  auto* construct = app.add_subcommand("construct", "Build a graph");
  construct
      ->add_option("kind", o.kind, "box|bipartite2|radius3|pg-plane|gq|glue|cycle|petersen|heawood|tutte-coxeter")
      ->required();
  construct->add_option("--r", o.r, "Radius of a box graph");
  construct->add_option("--delta", o.delta, "Minimum degree");
  construct->add_option("--c", o.c, "Surplus vertices of a box graph");
  construct->add_option("--n", o.n, "Order");
  construct->add_option("--q", o.q, "Field order");
  construct->add_option("--base", o.base, "Base graph file for glue (- for stdin)");
  construct->add_option("--m", o.m, "Number of glued copies");
  construct->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"graph6", "edgelist", "dot", "json"}));
  construct->add_flag("--verify", o.verify, "Also print a metric summary as JSON");

  auto* analyze = app.add_subcommand("analyze", "Metric summary and upper-bound check of a graph");
  analyze->add_option("--graph", o.graph, "Graph file (- for stdin)")->required();

  auto* bound = app.add_subcommand("bound", "All applicable radius bounds");
  bound->add_option("--n", o.bound_n)->required();
  bound->add_option("--delta", o.bound_delta)->required();
  bound->add_option("--g", o.g)->required();

  auto* witness = app.add_subcommand("witness", "Check or find witness sets");
  witness->require_subcommand(1);
  auto* check = witness->add_subcommand("check", "Validate a witness set");
  std::string check_kind;
  check->add_option("kind", check_kind, "general|tf|cycles")->required()->check(CLI::IsMember({"general", "tf", "cycles"}));
  check->add_option("--graph", o.graph)->required();
  check->add_option("--set", o.set, "Comma-separated vertices")->required();
  check->add_option("--k", o.k, "Sphere radius for the general check");
  check->add_option("--r", o.cycles_r, "Cycle parameter for the cycles check");
  auto* find = witness->add_subcommand("find", "Search for a large witness set");
  find->add_option("--graph", o.graph)->required();
  find->add_option("--k", o.k)->required();
  find->add_option("--budget", o.budget, "Branch and bound node budget");

  auto* search = app.add_subcommand("search", "Exhaustive search over small graphs");
  search->require_subcommand(1);
  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--long-run", o.long_run, "Allow n = 9");
  };
  auto* enumerate = search->add_subcommand("enumerate", "Maximum radius over all qualifying graphs");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--delta", o.delta)->required();
  enumerate->add_option("--g", o.g);
  enumerate->add_flag("--no-classes", o.no_classes, "Skip isomorphism class counting");
  add_search_flags(enumerate);
  auto* verify_small = search->add_subcommand("verify-small", "Compare enumeration with the exact formula");
  verify_small->add_option("--n-max", o.n_max);
  verify_small->add_option("--delta", o.deltas, "Degrees to check")->delimiter(',');
  add_search_flags(verify_small);
  auto* stream = search->add_subcommand("stream", "Read graph6 lines and report per-order maxima");
  stream->add_option("--delta", o.delta)->required();
  stream->add_option("--g", o.g);
  stream->add_option("--input", o.input, "graph6 file, one graph per line (- for stdin)");

  auto* extract = app.add_subcommand("extract", "Dense subgraph extraction around a geodesic");
  extract->add_option("--graph", o.graph)->required();
  extract->add_option("--k", o.k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) return run_construct(o);
    if (*analyze) return run_analyze(o);
    if (*bound) return run_bound(o);
    if (*check) return run_witness_check(o, check_kind);
    if (*find) return run_witness_find(o);
    if (*enumerate) return run_enumerate(o);
    if (*verify_small) return run_verify_small(o);
    if (*stream) return run_stream(o);
    if (*extract) return run_extract(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
