#include "pathpack/decode.hpp"

#include <chrono>
#include <cmath>

namespace pathpack {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

PathCollection decode_once(const CompactBp& bp, double beta,
                           std::span<const NodeId> root_order) {
  const RootedDigraph& g = bp.graph();
  const int K = bp.max_depth();
  PATHPACK_REQUIRE(bp.iteration() >= 1, "decode needs at least one sweep");

  std::vector<char> available(std::size_t(g.node_count()), 0);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (!g.is_root(i)) available[std::size_t(i)] = 1;
  }

  PathCollection out;
  for (NodeId u : root_order) {
    PATHPACK_REQUIRE(g.is_root(u), "decode order contains a non-root");
    const double sum_h_u = bp.neutral_in_sum(u);
    const double stop = sum_h_u + beta;  // u opts out
    double best_cand = kInf;
    NodeId first = kNoNode;
    for (NodeId j : g.nonroot_neighbors(u)) {
      if (!available[std::size_t(j)]) continue;
      const double offer = bp.child_offer(j, u, 2);
      PATHPACK_REQUIRE(std::isfinite(offer), "start offer went non-finite");
      const double v = sum_h_u + offer - bp.neutral(j, u);
      if (v < best_cand) {
        best_cand = v;
        first = j;
      }
    }
    if (first == kNoNode || best_cand > stop) continue;  // P_u stays empty

    Path path;
    path.nodes = {u, first};
    available[std::size_t(first)] = 0;
    NodeId parent = u;
    NodeId node = first;
    int depth = 2;
    while (depth < K) {
      const double sum_h = bp.neutral_in_sum(node);
      const double stay =
          sum_h + bp.parent_offer(parent, node, depth - 1) - bp.neutral(parent, node);
      PATHPACK_REQUIRE(std::isfinite(stay), "path-end cost went non-finite");
      double best_next = kInf;
      NodeId pick = kNoNode;
      for (NodeId i : g.nonroot_neighbors(node)) {
        if (!available[std::size_t(i)]) continue;
        const double offer = bp.child_offer(i, node, depth + 1);
        // the infinity filter must coincide with directed-edge existence
        PATHPACK_REQUIRE(std::isfinite(offer) == g.has_edge(node, i),
                         "continuation filter disagrees with edge set");
        if (std::isinf(offer)) continue;
        const double v = stay + offer - bp.neutral(i, node);
        if (v < best_next) {
          best_next = v;
          pick = i;
        }
      }
      if (pick == kNoNode || best_next > stay) break;  // end the path here
      path.nodes.push_back(pick);
      available[std::size_t(pick)] = 0;
      parent = node;
      node = pick;
      ++depth;
    }
    out.paths.push_back(std::move(path));
  }
  return out;
}

PathCollection decode_best(const CompactBp& bp, double beta, int num_orders,
                           Rng& rng) {
  PATHPACK_REQUIRE(num_orders >= 1, "decode_best needs at least one order");
  const RootedDigraph& g = bp.graph();
  std::vector<NodeId> order(g.roots().begin(), g.roots().end());
  PathCollection best;
  int best_value = -1;
  for (int t = 0; t < num_orders; ++t) {
    rng.shuffle(order);
    PathCollection cand = decode_once(bp, beta, order);
    if (cand.value() > best_value) {
      best_value = cand.value();
      best = std::move(cand);
    }
  }
  return best;
}

PathCollection decode_once_dense(const DenseBp& dense, double beta,
                                 std::span<const NodeId> root_order) {
  const RootedDigraph& g = dense.graph();
  const int K = dense.max_depth();
  PATHPACK_REQUIRE(dense.iteration() >= 1, "decode needs at least one sweep");

  std::vector<char> available(std::size_t(g.node_count()), 0);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (!g.is_root(i)) available[std::size_t(i)] = 1;
  }

  PathCollection out;
  for (NodeId u : root_order) {
    const double stop = dense.neg_log_max_marginal(u, NodeVars::off(), beta);
    double best_cand = kInf;
    NodeId first = kNoNode;
    for (NodeId j : g.nonroot_neighbors(u)) {
      if (!available[std::size_t(j)]) continue;
      const double v = dense.neg_log_max_marginal(
          u, NodeVars{Depth::at(1), Link::end(), Link::to(j)}, beta);
      if (v < best_cand) {
        best_cand = v;
        first = j;
      }
    }
    if (first == kNoNode || std::isinf(best_cand) || best_cand > stop) continue;

    Path path;
    path.nodes = {u, first};
    available[std::size_t(first)] = 0;
    NodeId parent = u;
    NodeId node = first;
    int depth = 2;
    while (depth < K) {
      const NodeVars end_here{Depth::at(depth), Link::to(parent), Link::end()};
      const double stay = dense.neg_log_max_marginal(node, end_here, beta);
      double best_next = kInf;
      NodeId pick = kNoNode;
      for (NodeId i : g.nonroot_neighbors(node)) {
        if (!available[std::size_t(i)]) continue;
        const double v = dense.neg_log_max_marginal(
            node, NodeVars{Depth::at(depth), Link::to(parent), Link::to(i)}, beta);
        if (std::isinf(v)) continue;
        if (v < best_next) {
          best_next = v;
          pick = i;
        }
      }
      if (pick == kNoNode || best_next > stay) break;
      path.nodes.push_back(pick);
      available[std::size_t(pick)] = 0;
      parent = node;
      node = pick;
      ++depth;
    }
    out.paths.push_back(std::move(path));
  }
  return out;
}

namespace {

template <typename SweepFn, typename DecodeFn>
SolveResult run_solver_loop(const RootedDigraph& g, const SolveParams& p,
                            const char* name, SweepFn&& do_sweep,
                            DecodeFn&& do_decode) {
  const auto t0 = Clock::now();
  SolveResult res;
  res.report.algorithm = name;
  res.report.seed = p.seed;
  if (g.node_count() == 0) {
    res.report.converged = true;
    res.report.wall_seconds = seconds_since(t0);
    return res;
  }
  int best_value = -1;
  for (int t = 1; t <= p.max_iters; ++t) {
    const bool fixed = do_sweep();
    res.report.iterations = t;
    Rng rng(derive_seed(p.seed, std::uint64_t(t)));
    PathCollection cand = do_decode(rng);
    if (cand.value() > best_value) {
      best_value = cand.value();
      res.paths = std::move(cand);
    }
    res.report.best_by_iteration.push_back(best_value);
    if (fixed) {
      res.report.converged = true;
      break;
    }
    if (p.time_limit_s && seconds_since(t0) >= *p.time_limit_s) {
      res.report.truncated = true;
      break;
    }
  }
  res.report.value = res.paths.value();
  res.report.wall_seconds = seconds_since(t0);
  return res;
}

}  // namespace

SolveResult solve_bp(const RootedDigraph& g, const SolveParams& p) {
  p.validate();
  if (g.node_count() == 0) {
    return run_solver_loop(
        g, p, "bp", [] { return true; }, [](Rng&) { return PathCollection{}; });
  }
  CompactBp bp(g, p.K);
  return run_solver_loop(
      g, p, "bp", [&] { return bp.sweep(p.beta); },
      [&](Rng& rng) { return decode_best(bp, p.beta, p.bp_orders, rng); });
}

SolveResult solve_bp_dense(const RootedDigraph& g, const SolveParams& p,
                           bool allow_large) {
  p.validate();
  if (g.node_count() == 0) {
    return run_solver_loop(
        g, p, "bp-dense", [] { return true; }, [](Rng&) { return PathCollection{}; });
  }
  DenseBp dense(g, p.K, 1.0, allow_large);
  std::vector<NodeId> order(g.roots().begin(), g.roots().end());
  return run_solver_loop(
      g, p, "bp-dense", [&] { return dense.sweep(p.beta); },
      [&](Rng& rng) {
        PathCollection best;
        int best_value = -1;
        for (int t = 0; t < p.bp_orders; ++t) {
          rng.shuffle(order);
          PathCollection cand = decode_once_dense(dense, p.beta, order);
          if (cand.value() > best_value) {
            best_value = cand.value();
            best = std::move(cand);
          }
        }
        return best;
      });
}

}  // namespace pathpack
