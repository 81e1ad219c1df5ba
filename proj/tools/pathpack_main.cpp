// pathpack: rooted, length-bounded, node-disjoint path packing.
//
// Subcommands: generate, solve, bench, validate, export-pcd.
// Exit codes: 0 ok, 1 input error, 2 internal invariant breach.

#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "pathpack/bench.hpp"
#include "pathpack/decode.hpp"
#include "pathpack/exact.hpp"
#include "pathpack/graph.hpp"
#include "pathpack/greedy.hpp"
#include "pathpack/ip_model.hpp"

namespace pp = pathpack;

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw pp::InputError("cannot open '" + path + "' for reading");
  return f;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw pp::InputError("cannot open '" + path + "' for writing");
  return f;
}

struct InstanceArgs {
  std::string edges_path;
  std::string roots_path;
  double root_fraction = 0.0;
  std::uint64_t root_seed = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--edges", edges_path, "edge list file ('src dst' lines)")
        ->required();
    auto* rootsfile = cmd->add_option("--roots", roots_path,
                                      "root list file (one id per line)");
    auto* fraction = cmd->add_option("--root-fraction", root_fraction,
                                     "sample this fraction of nodes as roots");
    cmd->add_option("--root-seed", root_seed, "seed for root sampling");
    fraction->excludes(rootsfile);
  }

  pp::LoadedGraph load() const {
    auto stream = open_in(edges_path);
    if (!roots_path.empty()) {
      auto rs = open_in(roots_path);
      return pp::load_edge_list(stream,
                                pp::RootSpec::list(pp::read_root_list(rs)));
    }
    if (root_fraction <= 0.0) {
      throw pp::InputError("provide --roots or --root-fraction");
    }
    return pp::load_edge_list(stream,
                              pp::RootSpec::sample(root_fraction, root_seed));
  }
};

// Solution files carry the instance's original node labels.
void write_labeled_paths(const pp::PathCollection& P, const pp::RootedDigraph& g,
                         std::ostream& out) {
  for (const pp::Path& p : P.paths) {
    for (std::size_t t = 0; t < p.nodes.size(); ++t) {
      if (t) out << ' ';
      out << g.source_id(p.nodes[t]);
    }
    out << '\n';
  }
}

pp::PathCollection read_labeled_paths(std::istream& in, const pp::RootedDigraph& g) {
  std::unordered_map<std::int64_t, pp::NodeId> to_dense;
  for (pp::NodeId i = 0; i < g.node_count(); ++i) to_dense[g.source_id(i)] = i;
  pp::PathCollection raw = pp::read_paths(in);
  for (pp::Path& p : raw.paths) {
    for (pp::NodeId& v : p.nodes) {
      auto it = to_dense.find(v);
      if (it == to_dense.end()) {
        throw pp::InputError("solution references unknown node " + std::to_string(v));
      }
      v = it->second;
    }
  }
  return raw;
}

int run(int argc, char** argv) {
  CLI::App app{"rooted, length-bounded, node-disjoint path packing"};
  app.require_subcommand(1);

  // ---- generate ----
  auto* gen = app.add_subcommand("generate", "write a random instance");
  int gen_n = 1000;
  double gen_fraction = 0.2, gen_c = 3.0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--n", gen_n, "node count before isolation dropping")->required();
  gen->add_option("--root-fraction", gen_fraction, "fraction of nodes made roots")
      ->required();
  gen->add_option("--c", gen_c, "edge probability c/n")->required();
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_option("--out", gen_out, "output prefix (.edges/.roots appended)")
      ->required();

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "solve one instance");
  InstanceArgs solve_inst;
  solve_inst.attach(solve);
  std::string solve_alg = "bp";
  std::string solve_out;
  std::string solve_timing = "wall";
  std::string solve_engine = "fast";
  std::string dump_path;
  bool allow_large = false;
  pp::SolveParams sp;
  double time_limit = -1.0;
  solve->add_option("--algorithm", solve_alg, "bp, greedy, or exact")
      ->check(CLI::IsMember({"bp", "greedy", "exact"}));
  solve->add_option("--k", sp.K, "maximum path length in nodes");
  solve->add_option("--beta", sp.beta, "idle-node cost parameter");
  solve->add_option("--iterations", sp.max_iters, "sweep budget");
  solve->add_option("--bp-orders", sp.bp_orders, "decode orders per sweep");
  solve->add_option("--greedy-orders", sp.greedy_orders, "greedy root orders");
  solve->add_option("--seed", sp.seed, "rng seed");
  solve->add_option("--time-limit", time_limit, "wall-clock bound in seconds");
  solve->add_option("--out", solve_out, "output prefix (.solution/.report)")
      ->required();
  solve->add_option("--timing", solve_timing, "wall | none (report 0 times)")
      ->check(CLI::IsMember({"wall", "none"}));
  solve->add_option("--engine", solve_engine, "bp engine: fast | dense")
      ->check(CLI::IsMember({"fast", "dense"}))
      ->group("");
  solve->add_flag("--allow-large", allow_large, "lift small-instance guards")
      ->group("");
  solve->add_option("--dump-messages", dump_path, "write a message snapshot")
      ->group("");

  // ---- bench ----
  auto* bench = app.add_subcommand("bench", "run a sample grid and write CSV");
  pp::ExperimentSpec spec;
  std::string bench_algs = "greedy,bp";
  std::string bench_out;
  std::string bench_timing = "wall";
  int jobs = 1;
  double bench_time_limit = -1.0;
  bench->add_option("--n", spec.n, "node count per sample")->required();
  bench->add_option("--root-fraction", spec.root_fraction, "root fraction")
      ->required();
  bench->add_option("--c", spec.c, "edge probability c/n")->required();
  bench->add_option("--samples", spec.samples, "number of samples");
  bench->add_option("--algorithms", bench_algs, "comma list of bp,greedy,exact");
  bench->add_option("--k", spec.solver.K, "maximum path length in nodes");
  bench->add_option("--beta", spec.solver.beta, "idle-node cost parameter");
  bench->add_option("--iterations", spec.solver.max_iters, "sweep budget");
  bench->add_option("--bp-orders", spec.solver.bp_orders, "decode orders per sweep");
  bench->add_option("--greedy-orders", spec.solver.greedy_orders,
                    "greedy root orders");
  bench->add_option("--seed", spec.seed, "master seed");
  bench->add_option("--time-limit", bench_time_limit, "per-solve bound in seconds");
  bench->add_option("--jobs", jobs, "worker threads over samples");
  bench->add_option("--out", bench_out, "CSV output path")->required();
  bench->add_option("--timing", bench_timing, "wall | none (report 0 times)")
      ->check(CLI::IsMember({"wall", "none"}));

  // ---- validate ----
  auto* val = app.add_subcommand("validate", "check a solution file");
  InstanceArgs val_inst;
  val_inst.attach(val);
  std::string val_solution;
  int val_k = 5;
  val->add_option("--solution", val_solution, "solution file")->required();
  val->add_option("--k", val_k, "maximum path length in nodes");

  // ---- export-pcd ----
  auto* exp = app.add_subcommand("export-pcd",
                                 "write the parent-child-depth LP model");
  InstanceArgs exp_inst;
  exp_inst.attach(exp);
  int exp_k = 5;
  std::string exp_out;
  exp->add_option("--k", exp_k, "maximum path length in nodes");
  exp->add_option("--out", exp_out, "LP file path")->required();

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    pp::RootedDigraph g =
        pp::generate_random_graph(pp::NodeId(gen_n), gen_fraction, gen_c, gen_seed);
    {
      auto f = open_out(gen_out + ".edges");
      pp::write_edge_list(g, f);
    }
    {
      auto f = open_out(gen_out + ".roots");
      pp::write_root_list(g, f);
    }
    std::cout << "wrote " << gen_out << ".edges / .roots: " << g.node_count()
              << " nodes, " << g.edge_count() << " edges, " << g.root_count()
              << " roots\n";
    return 0;
  }

  if (solve->parsed()) {
    if (time_limit >= 0.0) sp.time_limit_s = time_limit;
    pp::LoadedGraph inst = solve_inst.load();
    const pp::RootedDigraph& g = inst.graph;
    pp::SolveResult res;
    if (solve_alg == "bp") {
      res = (solve_engine == "dense") ? pp::solve_bp_dense(g, sp, allow_large)
                                      : pp::solve_bp(g, sp);
      if (!dump_path.empty() && solve_engine != "dense") {
        pp::CompactBp bp(g, sp.K);
        for (int t = 0; t < res.report.iterations; ++t) bp.sweep(sp.beta);
        auto f = open_out(dump_path);
        bp.dump(f);
      }
    } else if (solve_alg == "greedy") {
      res = pp::solve_greedy(g, sp);
    } else {
      res = pp::solve_exact(g, sp.K, pp::ExactGuard{14, allow_large});
    }
    if (auto bad = pp::find_violation(g, sp.K, res.paths)) {
      throw pp::InvariantError("solver produced an infeasible collection: " +
                               bad->message);
    }
    {
      auto f = open_out(solve_out + ".solution");
      write_labeled_paths(res.paths, g, f);
    }
    {
      auto f = open_out(solve_out + ".report");
      res.report.write(f, solve_timing != "none");
    }
    std::cout << res.report.algorithm << ": value " << res.report.value << " ("
              << res.paths.paths.size() << " paths, " << res.report.iterations
              << " iterations" << (res.report.converged ? ", converged" : "")
              << (res.report.truncated ? ", time limit" : "") << ")\n";
    return 0;
  }

  if (bench->parsed()) {
    if (bench_time_limit >= 0.0) spec.solver.time_limit_s = bench_time_limit;
    spec.algorithms.clear();
    std::stringstream names(bench_algs);
    std::string tok;
    while (std::getline(names, tok, ',')) {
      if (!tok.empty()) spec.algorithms.push_back(pp::algorithm_from_name(tok));
    }
    auto rows = pp::run_bench(spec, jobs);
    {
      auto f = open_out(bench_out);
      pp::write_bench_csv(f, spec, rows, bench_timing != "none");
    }
    for (const auto& s : pp::summarize(spec, rows)) {
      std::cout << pp::algorithm_name(s.algorithm) << ": mean value "
                << s.mean_value << " over " << s.rows << " rows, mean time "
                << s.mean_time_s << " s\n";
    }
    return 0;
  }

  if (val->parsed()) {
    pp::LoadedGraph inst = val_inst.load();
    auto f = open_in(val_solution);
    pp::PathCollection P = read_labeled_paths(f, inst.graph);
    if (auto bad = pp::find_violation(inst.graph, val_k, P)) {
      std::cout << "violation: " << bad->message << '\n';
      return 1;
    }
    std::cout << "ok: " << P.paths.size() << " paths covering " << P.value()
              << " nodes\n";
    return 0;
  }

  if (exp->parsed()) {
    pp::LoadedGraph inst = exp_inst.load();
    auto f = open_out(exp_out);
    f << pp::pcd_lp_text(inst.graph, exp_k);
    std::cout << "wrote " << exp_out << " ("
              << pp::pcd_variable_count(inst.graph) << " variables)\n";
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pp::InvariantError& e) {
    std::cerr << "invariant breach: " << e.what() << '\n';
    return 2;
  } catch (const pp::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
