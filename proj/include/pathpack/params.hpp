#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pathpack/errors.hpp"

namespace pathpack {

// Solver knobs shared by the CLI, the benchmark harness, and the library
// entry points. Defaults follow the experiment protocol this project ships
// with: beta = 0.01, at most 50 sweeps, 5 decode orders per sweep, 200
// greedy orders.
struct SolveParams {
  int K = 5;                 // maximum path length, in nodes
  double beta = 0.01;        // idle-node cost parameter
  int max_iters = 50;        // sweep budget
  int bp_orders = 5;         // decode root orders per sweep
  int greedy_orders = 200;   // root orders for the greedy baseline
  std::uint64_t seed = 1;
  std::optional<double> time_limit_s;

  void validate() const {
    if (K < 2) throw InputError("K must be at least 2 (a path has two nodes)");
    if (!(beta > 0.0)) throw InputError("beta must be positive");
    if (max_iters < 1) throw InputError("iteration budget must be at least 1");
    if (bp_orders < 1) throw InputError("bp-orders must be at least 1");
    if (greedy_orders < 1) throw InputError("greedy-orders must be at least 1");
    if (time_limit_s && *time_limit_s < 0.0) {
      throw InputError("time limit must be nonnegative");
    }
  }
};

// Machine-readable run record. For bp, `iterations` counts sweeps and
// `best_by_iteration` the running best value after each sweep; for greedy,
// `iterations` counts root orders.
struct RunReport {
  std::string algorithm;
  int value = 0;
  double wall_seconds = 0.0;
  int iterations = 0;
  bool converged = false;
  bool truncated = false;
  std::uint64_t seed = 0;
  std::vector<int> best_by_iteration;

  void write(std::ostream& out, bool include_time = true) const;
};

RunReport read_report(std::istream& in);

}  // namespace pathpack
