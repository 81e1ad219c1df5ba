#include "pathpack/greedy.hpp"

#include <chrono>

namespace pathpack {

namespace {

struct LongestPathSearch {
  const RootedDigraph& g;
  int K;
  std::vector<char>& available;
  std::vector<NodeId> current;
  std::vector<NodeId> best;

  void run(NodeId node) {
    if (int(current.size()) > int(best.size())) best = current;
    if (int(best.size()) == K) return;  // nothing longer exists
    if (int(current.size()) == K) return;
    for (NodeId w : g.out_neighbors(node)) {
      if (!available[std::size_t(w)]) continue;
      available[std::size_t(w)] = 0;
      current.push_back(w);
      run(w);
      current.pop_back();
      available[std::size_t(w)] = 1;
      if (int(best.size()) == K) return;
    }
  }
};

}  // namespace

PathCollection greedy_once(const RootedDigraph& g, int K,
                           std::span<const NodeId> root_order) {
  std::vector<char> available(std::size_t(g.node_count()), 0);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (!g.is_root(i)) available[std::size_t(i)] = 1;
  }
  PathCollection out;
  LongestPathSearch search{g, K, available, {}, {}};
  for (NodeId u : root_order) {
    PATHPACK_REQUIRE(g.is_root(u), "greedy order contains a non-root");
    search.current = {u};
    search.best.clear();
    search.run(u);
    if (search.best.size() < 2) continue;  // a lone root is not a path
    for (std::size_t t = 1; t < search.best.size(); ++t) {
      available[std::size_t(search.best[t])] = 0;
    }
    out.paths.push_back(Path{search.best});
  }
  return out;
}

SolveResult solve_greedy(const RootedDigraph& g, const SolveParams& p) {
  p.validate();
  const auto t0 = std::chrono::steady_clock::now();
  SolveResult res;
  res.report.algorithm = "greedy";
  res.report.seed = p.seed;
  res.report.converged = true;
  if (g.node_count() == 0) {
    res.report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
  }
  Rng rng(derive_seed(p.seed, 0));
  std::vector<NodeId> order(g.roots().begin(), g.roots().end());
  int best_value = -1;
  for (int t = 0; t < p.greedy_orders; ++t) {
    rng.shuffle(order);
    PathCollection cand = greedy_once(g, p.K, order);
    if (cand.value() > best_value) {
      best_value = cand.value();
      res.paths = std::move(cand);
    }
    res.report.iterations = t + 1;
  }
  res.report.value = res.paths.value();
  res.report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace pathpack
