#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "bootperc/bounds.hpp"
#include "bootperc/corpus.hpp"
#include "bootperc/degeneracy.hpp"
#include "bootperc/edge_list.hpp"
#include "bootperc/errors.hpp"
#include "bootperc/extremal.hpp"
#include "bootperc/generators.hpp"
#include "bootperc/minperc.hpp"
#include "bootperc/percolation.hpp"
#include "bootperc/potential.hpp"
#include "bootperc/sampling.hpp"

namespace bootperc::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Usage errors detected after CLI11 has accepted the flags.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string graph_path;
  std::uint64_t seed = 0;
  int json_indent = -1;
};

struct A0Options {
  CLI::Option* list_opt = nullptr;
  CLI::Option* file_opt = nullptr;
  CLI::Option* bernoulli_opt = nullptr;
  CLI::Option* size_opt = nullptr;
  std::string list;
  std::string file;
  double bernoulli = 0.0;
  std::size_t size = 0;
};

void add_a0_options(CLI::App* sub, A0Options& a0) {
  a0.list_opt = sub->add_option("--a0", a0.list,
                                "Initially infected vertices, comma separated");
  a0.file_opt = sub->add_option("--a0-file", a0.file,
                                "File with one vertex index per line");
  a0.bernoulli_opt = sub->add_option(
      "--a0-bernoulli", a0.bernoulli,
      "Infect each vertex independently with this probability (uses --seed)");
  a0.size_opt = sub->add_option(
      "--a0-size", a0.size, "Uniform random set of this size (uses --seed)");
  a0.list_opt->excludes(a0.file_opt)->excludes(a0.bernoulli_opt)->excludes(a0.size_opt);
  a0.file_opt->excludes(a0.bernoulli_opt)->excludes(a0.size_opt);
  a0.bernoulli_opt->excludes(a0.size_opt);
}

VertexId parse_vertex(std::string_view token, const std::string& where) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} ||
      ptr != token.data() + token.size() ||
      value > std::numeric_limits<VertexId>::max()) {
    throw UsageError(where + ": bad vertex index '" + std::string(token) + "'");
  }
  return static_cast<VertexId>(value);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

VertexSet resolve_a0(const Graph& g, const A0Options& a0,
                     const GlobalOptions& global) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> members;
  if (a0.list_opt->count() > 0) {
    std::stringstream ss(a0.list);
    std::string token;
    while (std::getline(ss, token, ',')) {
      token = trim(token);
      if (!token.empty()) members.push_back(parse_vertex(token, "--a0"));
    }
  } else if (a0.file_opt->count() > 0) {
    std::ifstream in(a0.file);
    if (!in) throw UsageError("cannot open '" + a0.file + "'");
    std::string line;
    while (std::getline(in, line)) {
      line = trim(line);
      if (line.empty() || line.front() == '#') continue;
      members.push_back(parse_vertex(line, a0.file));
    }
  } else if (a0.bernoulli_opt->count() > 0) {
    return sample_a0(g, Bernoulli{a0.bernoulli}, global.seed);
  } else if (a0.size_opt->count() > 0) {
    return sample_a0(g, FixedSize{a0.size}, global.seed);
  } else {
    throw UsageError(
        "one of --a0, --a0-file, --a0-bernoulli, --a0-size is required");
  }
  return VertexSet(n, members);
}

Graph load_graph(const GlobalOptions& global) {
  if (global.graph_path.empty()) throw UsageError("--graph FILE is required");
  return read_edge_list_file(global.graph_path);
}

Json rational_json(const Rational& q) {
  return Json{{"num", q.numerator()}, {"den", q.denominator()}};
}

Json set_json(const VertexSet& s) { return Json(s.members()); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text << '\n';
}

// ---- subcommands -----------------------------------------------------------

int cmd_degeneracy(const GlobalOptions& global, Json& result) {
  const Graph g = load_graph(global);
  const DegeneracyOrdering ord = compute_ordering(g);
  result["d"] = ord.d;
  result["order"] = ord.order;
  return kExitOk;
}

struct RunArgs {
  A0Options a0;
  std::size_t r = 0;
};

int cmd_simulate(const GlobalOptions& global, const RunArgs& args,
                 Json& result) {
  const Graph g = load_graph(global);
  const VertexSet a0 = resolve_a0(g, args.a0, global);
  const PercolationTrace trace = run(g, a0, args.r);
  result["r"] = trace.r;
  result["a0"] = set_json(trace.a0);
  result["rounds"] = trace.rounds;
  result["tau"] = trace.tau;
  result["af_size"] = trace.a_f.size();
  return kExitOk;
}

int cmd_potential(const GlobalOptions& global, const RunArgs& args,
                  Json& result) {
  const Graph g = load_graph(global);
  const VertexSet a0 = resolve_a0(g, args.a0, global);
  const DegeneracyOrdering ord = compute_ordering(g);
  const PercolationTrace trace = run(g, a0, args.r);
  const PotentialTrace pt = compute_potential_trace(g, ord, trace);
  result["psi"] = pt.psi;
  const auto min_drop = pt.min_drop();
  result["min_drop"] = min_drop ? Json(*min_drop) : Json(nullptr);
  if (pt.r > pt.d_used) {
    const bool holds = verify_claim(pt);
    result["claim_holds"] = holds;
    result["d"] = pt.d_used;
    result["r"] = pt.r;
    return holds ? kExitOk : kExitCheckFailed;
  }
  result["claim_holds"] = nullptr;
  result["d"] = pt.d_used;
  result["r"] = pt.r;
  return kExitOk;
}

struct ExtremalArgs {
  ExtremalParams params;
  std::string out_path;
};

int cmd_extremal(const ExtremalArgs& args, Json& result) {
  const ExtremalInstance inst = build_extremal(args.params);
  const std::string text = to_edge_list(inst.graph);
  if (!args.out_path.empty()) write_text_file(args.out_path, text);
  result["d"] = args.params.d;
  result["r"] = args.params.r;
  result["k"] = args.params.k;
  result["n"] = inst.graph.num_vertices();
  result["m"] = inst.graph.num_edges();
  result["a0"] = set_json(inst.a0);
  result["edge_list"] = text;
  return kExitOk;
}

struct CheckBoundsArgs {
  RunArgs run;
  CLI::Option* d_opt = nullptr;
  std::size_t d = 0;
};

int cmd_check_bounds(const GlobalOptions& global, const CheckBoundsArgs& args,
                     Json& result) {
  const Graph g = load_graph(global);
  const VertexSet a0 = resolve_a0(g, args.run.a0, global);
  std::optional<std::size_t> d_override;
  if (args.d_opt->count() > 0) d_override = args.d;
  const BoundReport report = check_theorem(g, a0, args.run.r, d_override);
  result["d"] = report.d;
  result["r"] = report.r;
  result["a0_size"] = report.a0_size;
  result["af_size"] = report.af_size;
  result["tau"] = report.tau;
  result["theorem"] = std::string(to_string(report.theorem));
  result["runtime_corollary"] = std::string(to_string(report.runtime));
  if (report.bound) {
    result["bound_numerator"] = report.bound->numerator();
    result["bound_denominator"] = report.bound->denominator();
  } else {
    result["bound_numerator"] = nullptr;
    result["bound_denominator"] = nullptr;
  }
  const bool violated = report.theorem == Verdict::violated ||
                        report.runtime == Verdict::violated;
  return violated ? kExitCheckFailed : kExitOk;
}

struct MinPercArgs {
  std::size_t r = 0;
  std::size_t budget = kDefaultFreeVertexBudget;
  std::size_t samples = 0;
  bool enumerate = false;
};

int cmd_minperc(const GlobalOptions& global, const MinPercArgs& args,
                Json& result) {
  const Graph g = load_graph(global);
  const MinPercReport report = smallest_percolating_set(
      g, args.r,
      {.budget = args.budget, .samples = args.samples, .seed = global.seed});
  result["r"] = report.r;
  result["smallest_size"] = report.smallest_size;
  result["witness"] = set_json(report.witness);
  result["l"] = report.l;
  result["forced"] = report.forced;
  Json sampled = Json::array();
  for (const VertexSet& s : report.minimal_sets_sampled) {
    sampled.push_back(Json{{"set", s.members()}, {"size", s.size()}});
  }
  result["minimal_sets_sampled"] = std::move(sampled);
  result["riedl_lower"] =
      report.riedl_lower ? rational_json(*report.riedl_lower) : Json(nullptr);
  result["riedl_upper"] =
      report.riedl_upper ? rational_json(*report.riedl_upper) : Json(nullptr);

  int code = kExitOk;
  if (args.enumerate) {
    Json all = Json::array();
    for (const VertexSet& s :
         enumerate_minimal_percolating_sets(g, args.r, args.budget)) {
      all.push_back(set_json(s));
    }
    result["minimal_sets"] = std::move(all);
    if (g.is_tree()) {
      const bool holds = check_riedl_tree_bounds(g, args.r, args.budget);
      result["riedl_bounds_hold"] = holds;
      if (!holds) code = kExitCheckFailed;
    }
  }
  return code;
}

struct GenArgs {
  std::string kind;
  std::size_t n = 0;
  double p = 0.0;
  std::string out_path;
};

int cmd_gen(const GlobalOptions& global, const GenArgs& args, Json& result) {
  const auto kind = parse_graph_kind(args.kind);
  if (!kind) throw UsageError("unknown graph kind '" + args.kind + "'");
  const Graph g = generate(*kind, {args.n, args.p}, global.seed);
  const std::string text = to_edge_list(g);
  if (!args.out_path.empty()) write_text_file(args.out_path, text);
  result["kind"] = args.kind;
  result["n"] = g.num_vertices();
  result["m"] = g.num_edges();
  result["seed"] = global.seed;
  result["edge_list"] = text;
  return kExitOk;
}

struct CorpusArgs {
  std::size_t minperc_budget = 16;
  unsigned threads = 0;
  std::size_t max_failures = 20;
};

int cmd_corpus_check(const GlobalOptions& global, const CorpusArgs& args,
                     Json& result) {
  CorpusCheckOptions options;
  options.minperc_budget = args.minperc_budget;
  options.threads = args.threads != 0
                        ? args.threads
                        : std::max(1U, std::thread::hardware_concurrency());
  const auto corpus = build_theorem_corpus(global.seed);
  const CorpusSummary s = run_corpus_check(corpus, global.seed, options);
  result["seed"] = global.seed;
  result["graphs"] = s.graphs;
  result["runs"] = s.runs;
  result["theorem_violations"] = s.theorem_violations;
  result["claim_violations"] = s.claim_violations;
  result["psi0_violations"] = s.psi0_violations;
  result["runtime_violations"] = s.runtime_violations;
  result["forest_checked"] = s.forest_checked;
  result["forest_violations"] = s.forest_violations;
  result["corollary1_checked"] = s.corollary1_checked;
  result["corollary1_violations"] = s.corollary1_violations;
  Json failures = Json::array();
  for (std::size_t i = 0; i < s.failures.size() && i < args.max_failures; ++i) {
    const auto& f = s.failures[i];
    failures.push_back(Json{{"graph_index", f.graph_index},
                            {"graph", f.graph},
                            {"check", f.check},
                            {"detail", f.detail}});
  }
  result["failures"] = std::move(failures);
  result["ok"] = s.ok();
  return s.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"r-neighbour bootstrap percolation on degenerate graphs",
               "bootperc"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--graph", global.graph_path, "Graph in edge-list format");
  app.add_option("--seed", global.seed, "Seed for every random choice");
  app.add_option("--json-indent", global.json_indent,
                 "Indent JSON output (-1 = compact)");

  auto* degeneracy = app.add_subcommand(
      "degeneracy", "Degeneracy and a smallest-last ordering witnessing it");

  RunArgs simulate_args;
  auto* simulate =
      app.add_subcommand("simulate", "Run the bootstrap process and trace it");
  simulate->add_option("--r", simulate_args.r, "Threshold")->required();
  add_a0_options(simulate, simulate_args.a0);

  RunArgs potential_args;
  auto* potential = app.add_subcommand(
      "potential", "Potential along the infection order and its decrements");
  potential->add_option("--r", potential_args.r, "Threshold")->required();
  add_a0_options(potential, potential_args.a0);

  ExtremalArgs extremal_args;
  auto* extremal = app.add_subcommand(
      "extremal", "Build the sharpness construction for (d, r, k)");
  extremal->add_option("--d", extremal_args.params.d)->required();
  extremal->add_option("--r", extremal_args.params.r)->required();
  extremal->add_option("--k", extremal_args.params.k)->required();
  extremal->add_option("--out", extremal_args.out_path,
                       "Also write the edge list to this file");

  CheckBoundsArgs bounds_args;
  auto* check_bounds = app.add_subcommand(
      "check-bounds", "Check the final-size and running-time bounds on a run");
  check_bounds->add_option("--r", bounds_args.run.r, "Threshold")->required();
  bounds_args.d_opt = check_bounds->add_option(
      "--d", bounds_args.d, "Use this d instead of the degeneracy (>= it)");
  add_a0_options(check_bounds, bounds_args.run.a0);

  MinPercArgs minperc_args;
  auto* minperc = app.add_subcommand(
      "minperc", "Smallest and inclusion-minimal percolating sets");
  minperc->add_option("--r", minperc_args.r, "Threshold")->required();
  minperc->add_option("--budget", minperc_args.budget,
                      "Maximum number of non-forced vertices");
  minperc->add_option("--samples", minperc_args.samples,
                      "Randomized minimal sets to sample (uses --seed)");
  minperc->add_flag("--enumerate", minperc_args.enumerate,
                    "List every inclusion-minimal percolating set");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("kind", gen_args.kind,
                  "complete | path | cycle | star | gnp | random_tree")
      ->required();
  gen->add_option("--n", gen_args.n, "Number of vertices")->required();
  gen->add_option("--p", gen_args.p, "Edge probability (gnp)");
  gen->add_option("--out", gen_args.out_path,
                  "Also write the edge list to this file");

  CorpusArgs corpus_args;
  auto* corpus = app.add_subcommand(
      "corpus-check", "Check every bound on the randomized corpus");
  corpus->add_option("--minperc-budget", corpus_args.minperc_budget,
                     "Free-vertex budget for the percolating-set search");
  corpus->add_option("--threads", corpus_args.threads,
                     "Worker threads (0 = hardware concurrency)");
  corpus->add_option("--max-failures", corpus_args.max_failures,
                     "Failures listed in the output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Json result;
  int code = kExitOk;
  try {
    if (degeneracy->parsed()) {
      code = cmd_degeneracy(global, result);
    } else if (simulate->parsed()) {
      code = cmd_simulate(global, simulate_args, result);
    } else if (potential->parsed()) {
      code = cmd_potential(global, potential_args, result);
    } else if (extremal->parsed()) {
      code = cmd_extremal(extremal_args, result);
    } else if (check_bounds->parsed()) {
      code = cmd_check_bounds(global, bounds_args, result);
    } else if (minperc->parsed()) {
      code = cmd_minperc(global, minperc_args, result);
    } else if (gen->parsed()) {
      code = cmd_gen(global, gen_args, result);
    } else if (corpus->parsed()) {
      code = cmd_corpus_check(global, corpus_args, result);
    }
  } catch (const CertificationFailure& e) {
    err << "certification failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (" << e.forced().size()
        << " forced vertices)\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  out << result.dump(global.json_indent) << '\n';
  return code;
}

}  // namespace bootperc::cli
