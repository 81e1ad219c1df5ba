#pragma once

// Shared fixtures and independent oracles for the test suites. The
// enumerators here are deliberately plain (no pruning, no shared code with
// the library's solvers) so they can serve as ground truth.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pathpack/dense_bp.hpp"
#include "pathpack/fast_bp.hpp"
#include "pathpack/graph.hpp"
#include "pathpack/model.hpp"
#include "pathpack/rng.hpp"

namespace pathpack::testing {

// u = 0 (root) -> v = 1
inline RootedDigraph make_chain() {
  return RootedDigraph(2, {0}, {{0, 1}});
}

// roots 0 and 1 compete for the single non-root 2
inline RootedDigraph make_two_roots_one_child() {
  return RootedDigraph(3, {0, 1}, {{0, 2}, {1, 2}});
}

// root 0, edges 0->1, 1->2, 0->3
inline RootedDigraph make_fork() {
  return RootedDigraph(4, {0}, {{0, 1}, {1, 2}, {0, 3}});
}

// Random instance that survived isolation-dropping with at least one root.
inline RootedDigraph random_instance(NodeId n, double root_fraction, double c,
                                     std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    RootedDigraph g =
        generate_random_graph(n, root_fraction, c, derive_seed(seed, attempt));
    if (g.node_count() >= 2 && g.root_count() >= 1) return g;
  }
}

// Random member of the feasible set, built constructively: a random subset
// of roots each grows a random available walk of 2..K nodes.
inline PathCollection random_feasible_collection(const RootedDigraph& g, int K,
                                                 Rng& rng) {
  std::vector<char> available(std::size_t(g.node_count()), 0);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (!g.is_root(i)) available[std::size_t(i)] = 1;
  }
  std::vector<NodeId> roots(g.roots().begin(), g.roots().end());
  rng.shuffle(roots);
  PathCollection P;
  for (NodeId u : roots) {
    if (rng.below(4) == 0) continue;
    Path p;
    p.nodes.push_back(u);
    NodeId cur = u;
    std::vector<NodeId> cands;
    while (int(p.nodes.size()) < K) {
      if (p.nodes.size() >= 2 && rng.below(3) == 0) break;
      cands.clear();
      for (NodeId w : g.out_neighbors(cur)) {
        if (available[std::size_t(w)]) cands.push_back(w);
      }
      if (cands.empty()) break;
      NodeId pick = cands[rng.below(std::uint32_t(cands.size()))];
      available[std::size_t(pick)] = 0;
      p.nodes.push_back(pick);
      cur = pick;
    }
    if (p.nodes.size() >= 2) P.paths.push_back(std::move(p));
  }
  return P;
}

inline bool same_collection(PathCollection a, PathCollection b) {
  auto key = [](const Path& p) { return p.nodes; };
  std::sort(a.paths.begin(), a.paths.end(),
            [&](const Path& x, const Path& y) { return key(x) < key(y); });
  std::sort(b.paths.begin(), b.paths.end(),
            [&](const Path& x, const Path& y) { return key(x) < key(y); });
  if (a.paths.size() != b.paths.size()) return false;
  for (std::size_t t = 0; t < a.paths.size(); ++t) {
    if (a.paths[t].nodes != b.paths[t].nodes) return false;
  }
  return true;
}

// ---- pruning-free enumerators (ground truth, test-only) ----

struct EnumerationState {
  const RootedDigraph& g;
  int K;
  std::vector<char> available;
  std::vector<Path> chosen;
  int value = 0;
  int best_value = 0;
  PathCollection best;
  std::uint64_t leaves = 0;

  void at_leaf() {
    ++leaves;
    if (value > best_value) {
      best_value = value;
      best.paths = chosen;
    }
  }

  void visit_root(std::size_t idx) {
    if (idx == g.roots().size()) {
      at_leaf();
      return;
    }
    visit_root(idx + 1);  // the empty choice for this root
    std::vector<NodeId> path{g.roots()[idx]};
    grow(idx, path);
  }

  void grow(std::size_t idx, std::vector<NodeId>& path) {
    if (path.size() >= 2) {
      chosen.push_back(Path{path});
      value += int(path.size());
      visit_root(idx + 1);
      value -= int(path.size());
      chosen.pop_back();
    }
    if (int(path.size()) == K) return;
    for (NodeId w : g.out_neighbors(path.back())) {
      if (!available[std::size_t(w)]) continue;
      available[std::size_t(w)] = 0;
      path.push_back(w);
      grow(idx, path);
      path.pop_back();
      available[std::size_t(w)] = 1;
    }
  }
};

inline EnumerationState enumerate_collections(const RootedDigraph& g, int K) {
  EnumerationState st{g, K, {}, {}, 0, 0, {}, 0};
  st.available.assign(std::size_t(g.node_count()), 0);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (!g.is_root(i)) st.available[std::size_t(i)] = 1;
  }
  st.visit_root(0);
  return st;
}

inline int exhaustive_optimal_value(const RootedDigraph& g, int K) {
  return enumerate_collections(g, K).best_value;
}

// Collections are in bijection with complete per-root choice vectors, so the
// leaf count is the number of distinct feasible collections.
inline std::uint64_t count_feasible_collections(const RootedDigraph& g, int K) {
  return enumerate_collections(g, K).leaves;
}

// Full per-node domain of (depth, parent, child) triples.
inline std::vector<NodeVars> domain_of(const RootedDigraph& g, int K, NodeId i) {
  std::vector<NodeVars> out;
  auto und = g.neighbors(i);
  auto vnb = g.nonroot_neighbors(i);
  for (int d = 0; d <= K; ++d) {
    Depth depth = (d == 0) ? Depth::none() : Depth::at(d);
    for (std::size_t pi = 0; pi < und.size() + 2; ++pi) {
      Link parent = (pi == 0) ? Link::none() : (pi == 1) ? Link::end() : Link::to(und[pi - 2]);
      for (std::size_t ci = 0; ci < vnb.size() + 2; ++ci) {
        Link child = (ci == 0) ? Link::none() : (ci == 1) ? Link::end() : Link::to(vnb[ci - 2]);
        out.push_back(NodeVars{depth, parent, child});
      }
    }
  }
  return out;
}

// Counts assignments passing every node and pairwise indicator by direct
// enumeration over per-node consistent triples with backtracking.
inline std::uint64_t count_feasible_assignments(const RootedDigraph& g, int K) {
  const NodeId n = g.node_count();
  std::vector<std::vector<NodeVars>> options(std::size_t(n));
  for (NodeId i = 0; i < n; ++i) {
    for (const NodeVars& v : domain_of(g, K, i)) {
      if (node_consistent(g, i, v)) options[std::size_t(i)].push_back(v);
    }
  }
  Assignment a(std::size_t(n));
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, NodeId i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    for (const NodeVars& v : options[std::size_t(i)]) {
      bool ok = true;
      for (NodeId j : g.neighbors(i)) {
        if (j >= i) continue;  // only already-assigned neighbors
        if (!edge_consistent(g, i, v, j, a[std::size_t(j)])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      a[std::size_t(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return count;
}

// ---- oracle comparison helpers ----

struct EquivalenceDiff {
  double max_table_abs = 0.0;
  std::size_t table_inf_mismatches = 0;
  double max_rho_abs = 0.0;
  std::size_t rho_inf_mismatches = 0;
};

// Elementwise dense-table and max-marginal comparison between the reference
// engine and the compact engine's dense view, at their current iterations.
inline EquivalenceDiff compare_engines(const DenseBp& dense, const CompactBp& fast,
                                       double beta) {
  EquivalenceDiff diff;
  DenseBp view = materialize_dense(fast);
  auto d = DenseBp::compare(dense, view);
  diff.max_table_abs = d.max_abs;
  diff.table_inf_mismatches = d.finite_mismatches;
  const RootedDigraph& g = dense.graph();
  for (NodeId i = 0; i < g.node_count(); ++i) {
    for (std::size_t cfg = 0; cfg < dense.config_count(i); ++cfg) {
      const NodeVars& v = dense.config_at(i, cfg);
      const double a = dense.neg_log_max_marginal(i, v, beta);
      const double b = fast.neg_log_max_marginal(i, v, beta);
      if (std::isinf(a) || std::isinf(b)) {
        if (std::isinf(a) != std::isinf(b)) ++diff.rho_inf_mismatches;
      } else {
        diff.max_rho_abs = std::max(diff.max_rho_abs, std::abs(a - b));
      }
    }
  }
  return diff;
}

}  // namespace pathpack::testing
