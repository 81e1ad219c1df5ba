#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pathpack/params.hpp"

namespace pathpack {

enum class Algorithm { Bp, Greedy, Exact };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);  // throws InputError

// One benchmark run: `samples` random instances of the stated shape, each
// solved by every requested algorithm. Sample s draws its graph from seed
// derive_seed(seed, s); algorithm a on that sample runs with seed
// derive_seed(sample_seed, 1 + a). Exact is allowed only under its node
// guard.
struct ExperimentSpec {
  int n = 1000;
  double root_fraction = 0.2;
  double c = 3.0;
  int samples = 1;
  std::vector<Algorithm> algorithms = {Algorithm::Greedy, Algorithm::Bp};
  std::uint64_t seed = 1;
  SolveParams solver;
  int exact_guard = 14;

  void validate() const;
};

struct ResultRecord {
  int sample = 0;
  Algorithm algorithm = Algorithm::Bp;
  std::uint64_t seed = 0;
  int value = 0;
  double time_s = 0.0;
  int iterations = 0;
  bool converged = false;
  bool ok = true;
  std::string error;
};

// Rows ordered by (sample, algorithm list position); failures are recorded
// per row and the run continues. `jobs` > 1 distributes samples over
// threads; outputs are identical either way.
std::vector<ResultRecord> run_bench(const ExperimentSpec& spec, int jobs = 1);

struct AlgorithmSummary {
  Algorithm algorithm;
  int rows = 0;
  double mean_value = 0.0;
  double mean_time_s = 0.0;
};
std::vector<AlgorithmSummary> summarize(const ExperimentSpec& spec,
                                        const std::vector<ResultRecord>& rows);

// CSV schema v1: header comment, column row
// sample,algorithm,seed,value,time_s,iterations,converged,status
// then one row per record and a trailing comment block with per-algorithm
// means (mean_value/mean_time_s are exact arithmetic means of the rows).
// With include_times = false every time field is written as 0.000000,
// making reruns with the same seed byte-identical.
void write_bench_csv(std::ostream& out, const ExperimentSpec& spec,
                     const std::vector<ResultRecord>& rows, bool include_times);

}  // namespace pathpack
