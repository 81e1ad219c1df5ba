#include "pathpack/bench.hpp"

#include <atomic>
#include <cstdio>
#include <ostream>
#include <thread>

#include "pathpack/decode.hpp"
#include "pathpack/exact.hpp"
#include "pathpack/graph.hpp"
#include "pathpack/greedy.hpp"

namespace pathpack {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Bp: return "bp";
    case Algorithm::Greedy: return "greedy";
    case Algorithm::Exact: return "exact";
  }
  return "?";
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "bp") return Algorithm::Bp;
  if (name == "greedy") return Algorithm::Greedy;
  if (name == "exact") return Algorithm::Exact;
  throw InputError("unknown algorithm '" + name + "' (expected bp, greedy, or exact)");
}

void ExperimentSpec::validate() const {
  solver.validate();
  if (samples < 1) throw InputError("samples must be at least 1");
  if (n < 2) throw InputError("n must be at least 2");
  if (algorithms.empty()) throw InputError("no algorithms requested");
  for (Algorithm a : algorithms) {
    if (a == Algorithm::Exact && n > exact_guard) {
      throw InputError("exact requested for n > " + std::to_string(exact_guard) +
                       " (exact is permitted only under the size guard)");
    }
  }
}

namespace {

ResultRecord run_one(const ExperimentSpec& spec, const RootedDigraph& g,
                     int sample, std::size_t alg_pos, std::uint64_t sample_seed) {
  ResultRecord rec;
  rec.sample = sample;
  rec.algorithm = spec.algorithms[alg_pos];
  rec.seed = derive_seed(sample_seed, 1 + alg_pos);
  try {
    SolveParams p = spec.solver;
    p.seed = rec.seed;
    SolveResult res;
    switch (rec.algorithm) {
      case Algorithm::Bp:
        res = solve_bp(g, p);
        break;
      case Algorithm::Greedy:
        res = solve_greedy(g, p);
        break;
      case Algorithm::Exact:
        res = solve_exact(g, p.K, ExactGuard{NodeId(spec.exact_guard), false});
        break;
    }
    if (auto bad = find_violation(g, p.K, res.paths)) {
      throw InvariantError("solver produced an infeasible collection: " + bad->message);
    }
    rec.value = res.report.value;
    rec.time_s = res.report.wall_seconds;
    rec.iterations = res.report.iterations;
    rec.converged = res.report.converged;
  } catch (const std::exception& e) {
    rec.ok = false;
    rec.error = e.what();
  }
  return rec;
}

}  // namespace

std::vector<ResultRecord> run_bench(const ExperimentSpec& spec, int jobs) {
  spec.validate();
  if (jobs < 1) throw InputError("jobs must be at least 1");
  const std::size_t per_sample = spec.algorithms.size();
  std::vector<ResultRecord> rows(std::size_t(spec.samples) * per_sample);

  auto run_sample = [&](int s) {
    const std::uint64_t sample_seed = derive_seed(spec.seed, std::uint64_t(s));
    try {
      RootedDigraph g = generate_random_graph(NodeId(spec.n), spec.root_fraction,
                                              spec.c, sample_seed);
      for (std::size_t a = 0; a < per_sample; ++a) {
        rows[std::size_t(s) * per_sample + a] =
            run_one(spec, g, s, a, sample_seed);
      }
    } catch (const std::exception& e) {
      for (std::size_t a = 0; a < per_sample; ++a) {
        ResultRecord& rec = rows[std::size_t(s) * per_sample + a];
        rec.sample = s;
        rec.algorithm = spec.algorithms[a];
        rec.seed = derive_seed(sample_seed, 1 + a);
        rec.ok = false;
        rec.error = e.what();
      }
    }
  };

  if (jobs == 1 || spec.samples == 1) {
    for (int s = 0; s < spec.samples; ++s) run_sample(s);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int s = next.fetch_add(1); s < spec.samples; s = next.fetch_add(1)) {
        run_sample(s);
      }
    };
    std::vector<std::thread> pool;
    const int count = std::min(jobs, spec.samples);
    pool.reserve(std::size_t(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::vector<AlgorithmSummary> summarize(const ExperimentSpec& spec,
                                        const std::vector<ResultRecord>& rows) {
  std::vector<AlgorithmSummary> out;
  for (Algorithm a : spec.algorithms) {
    AlgorithmSummary s;
    s.algorithm = a;
    double value_sum = 0.0, time_sum = 0.0;
    for (const ResultRecord& r : rows) {
      if (r.algorithm != a || !r.ok) continue;
      ++s.rows;
      value_sum += double(r.value);
      time_sum += r.time_s;
    }
    if (s.rows > 0) {
      s.mean_value = value_sum / double(s.rows);
      s.mean_time_s = time_sum / double(s.rows);
    }
    out.push_back(s);
  }
  return out;
}

void write_bench_csv(std::ostream& out, const ExperimentSpec& spec,
                     const std::vector<ResultRecord>& rows, bool include_times) {
  char buf[64];
  out << "# pathpack bench csv v1\n";
  out << "sample,algorithm,seed,value,time_s,iterations,converged,status\n";
  for (const ResultRecord& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.6f", include_times ? r.time_s : 0.0);
    out << r.sample << ',' << algorithm_name(r.algorithm) << ',' << r.seed << ','
        << r.value << ',' << buf << ',' << r.iterations << ','
        << (r.converged ? "true" : "false") << ',' << (r.ok ? "ok" : "error")
        << '\n';
  }
  for (const AlgorithmSummary& s : summarize(spec, rows)) {
    std::snprintf(buf, sizeof(buf), "%.6f",
                  include_times ? s.mean_time_s : 0.0);
    char vbuf[64];
    std::snprintf(vbuf, sizeof(vbuf), "%.6f", s.mean_value);
    out << "# summary algorithm=" << algorithm_name(s.algorithm)
        << " rows=" << s.rows << " mean_value=" << vbuf << " mean_time_s=" << buf
        << '\n';
  }
}

}  // namespace pathpack
