#include "pathpack/exact.hpp"

#include <chrono>

namespace pathpack {

namespace {

struct BranchAndBound {
  const RootedDigraph& g;
  int K;
  std::span<const NodeId> roots;
  std::vector<char> available;
  int available_count = 0;
  PathCollection current;
  int current_value = 0;
  PathCollection best;
  int best_value = 0;

  void search(std::size_t idx) {
    if (idx == roots.size()) {
      if (current_value > best_value) {
        best_value = current_value;
        best = current;
      }
      return;
    }
    const int optimistic =
        current_value + available_count + int(roots.size() - idx);
    if (optimistic <= best_value) return;  // bound: cannot strictly improve

    std::vector<NodeId> path{roots[idx]};
    extend(idx, path);
    search(idx + 1);  // skip this root
  }

  // Tries every proper path extending `path` (longer candidates before their
  // prefixes), committing each to the collection and recursing to the next
  // root. Nodes on `path` beyond the root are marked unavailable by the
  // caller's loop frames.
  void extend(std::size_t idx, std::vector<NodeId>& path) {
    if (int(path.size()) < K) {
      for (NodeId w : g.out_neighbors(path.back())) {
        if (!available[std::size_t(w)]) continue;
        available[std::size_t(w)] = 0;
        --available_count;
        path.push_back(w);
        extend(idx, path);
        path.pop_back();
        available[std::size_t(w)] = 1;
        ++available_count;
      }
    }
    if (path.size() >= 2) {
      current.paths.push_back(Path{path});
      current_value += int(path.size());
      search(idx + 1);
      current_value -= int(path.size());
      current.paths.pop_back();
    }
  }
};

}  // namespace

SolveResult solve_exact(const RootedDigraph& g, int K, ExactGuard guard) {
  if (K < 2) throw InputError("K must be at least 2");
  if (!guard.override_guard && g.node_count() > guard.max_nodes) {
    throw InputError(
        "exact solver guarded to n <= " + std::to_string(int(guard.max_nodes)) +
        " nodes (got " + std::to_string(int(g.node_count())) +
        "); pass the override to search anyway");
  }
  const auto t0 = std::chrono::steady_clock::now();
  BranchAndBound bb{g, K, g.roots(), {}, 0, {}, 0, {}, 0};
  bb.available.assign(std::size_t(g.node_count()), 0);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (!g.is_root(i)) {
      bb.available[std::size_t(i)] = 1;
      ++bb.available_count;
    }
  }
  bb.search(0);

  SolveResult res;
  res.paths = std::move(bb.best);
  res.report.algorithm = "exact";
  res.report.value = res.paths.value();
  res.report.iterations = 1;
  res.report.converged = true;
  res.report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace pathpack
