#include "pathpack/fast_bp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace pathpack {

namespace {
inline double min0(double x) { return x < 0.0 ? x : 0.0; }
}

CompactBp::CompactBp(const RootedDigraph& g, int K, double initial)
    : g_(&g), K_(K) {
  PATHPACK_REQUIRE(K >= 2, "K must be at least 2");
  const NodeId n = g.node_count();
  adj_off_.assign(std::size_t(n) + 1, 0);
  for (NodeId i = 0; i < n; ++i) {
    adj_off_[std::size_t(i) + 1] =
        adj_off_[std::size_t(i)] + std::uint32_t(g.neighbors(i).size());
  }
  slots_.resize(adj_off_.back());

  auto kind_of = [&](NodeId from, NodeId to) -> Kind {
    if (g.is_root(from)) return kUV;
    return g.is_root(to) ? kVU : kVV;
  };

  // First pass: assign out-block offsets in (node, neighbor) scan order.
  std::uint32_t total = 0;
  for (NodeId i = 0; i < n; ++i) {
    auto und = g.neighbors(i);
    for (std::size_t t = 0; t < und.size(); ++t) {
      Slot& s = slots_[adj_off_[std::size_t(i)] + t];
      s.nbr = und[t];
      s.kind_out = kind_of(i, und[t]);
      s.kind_in = kind_of(und[t], i);
      s.edge_to = g.has_edge(i, und[t]);
      s.edge_from = g.has_edge(und[t], i);
      s.out_block = total;
      total += std::uint32_t(block_size(Kind(s.kind_out)));
      if (s.kind_in == kVU) {
        // a root's undirected adjacency is always one of its out-edges
        PATHPACK_REQUIRE(s.edge_to, "non-edge adjacency between root and non-root");
      }
    }
  }
  // Second pass: the in-block of (i, nbr) is the nbr's out-block toward i.
  for (NodeId i = 0; i < n; ++i) {
    auto und = g.neighbors(i);
    for (std::size_t t = 0; t < und.size(); ++t) {
      Slot& s = slots_[adj_off_[std::size_t(i)] + t];
      const Slot* back = find_slot(s.nbr, i);
      PATHPACK_REQUIRE(back != nullptr, "asymmetric adjacency");
      s.in_block = back->out_block;
    }
  }

  buf_[0].assign(total, initial);
  buf_[1].assign(total, initial);
  h_in_.resize(std::size_t(g.max_degree()));
  amin_.resize(std::size_t(K) + 2);
  bmin_.resize(std::size_t(K) + 2);
}

const CompactBp::Slot* CompactBp::find_slot(NodeId node, NodeId nbr) const {
  const Slot* begin = slots_.data() + adj_off_[std::size_t(node)];
  const Slot* end = slots_.data() + adj_off_[std::size_t(node) + 1];
  auto it = std::lower_bound(begin, end, nbr,
                             [](const Slot& s, NodeId x) { return s.nbr < x; });
  if (it == end || it->nbr != nbr) return nullptr;
  return it;
}

void CompactBp::update_root_node(NodeId j, double beta, const double* prev,
                                 double* next) {
  const std::uint32_t begin = adj_off_[std::size_t(j)];
  const int deg = int(adj_off_[std::size_t(j) + 1] - begin);
  const std::size_t h_vu = neutral_index(kVU);

  double sum_h = 0.0;
  root_min_.clear();
  for (int t = 0; t < deg; ++t) {
    const Slot& s = slots_[begin + std::size_t(t)];
    const double h = prev[s.in_block + h_vu];
    PATHPACK_REQUIRE(std::isfinite(h), "neutral message went non-finite");
    h_in_[std::size_t(t)] = h;
    sum_h += h;
    root_min_.add(prev[s.in_block + 0] - h, s.nbr);  // child_offer - neutral
  }
  ops_ += std::uint64_t(deg) * 4;

  for (int t = 0; t < deg; ++t) {
    const Slot& s = slots_[begin + std::size_t(t)];
    const double base = sum_h - h_in_[std::size_t(t)];
    double* b = next + s.out_block;  // UV layout [B][F][G][H]
    b[0] = base;
    b[1] = base + root_min_.min_excluding(s.nbr);
    b[2] = beta + base;
    b[3] = std::min(b[2], b[1]);
    PATHPACK_REQUIRE(std::isfinite(b[2]) && std::isfinite(b[3]),
                     "idle/neutral message went non-finite");
    ops_ += 6;
  }
}

void CompactBp::update_nonroot_node(NodeId j, double beta, const double* prev,
                                    double* next) {
  const int K = K_;
  const std::uint32_t begin = adj_off_[std::size_t(j)];
  const int deg = int(adj_off_[std::size_t(j) + 1] - begin);

  double sum_h = 0.0;
  root_min_.clear();
  for (int d = 2; d <= K; ++d) {
    amin_[std::size_t(d)].clear();
    bmin_[std::size_t(d)].clear();
  }
  for (int t = 0; t < deg; ++t) {
    const Slot& s = slots_[begin + std::size_t(t)];
    const double h = prev[s.in_block + neutral_index(Kind(s.kind_in))];
    PATHPACK_REQUIRE(std::isfinite(h), "neutral message went non-finite");
    h_in_[std::size_t(t)] = h;
    sum_h += h;
    if (s.kind_in == kUV) {
      root_min_.add(prev[s.in_block + 0] - h, s.nbr);  // parent_offer(1) - neutral
      ops_ += 2;
    } else {  // kVV
      for (int d = 3; d <= K; ++d) {
        amin_[std::size_t(d)].add(prev[s.in_block + std::size_t(d - 3)] - h, s.nbr);
      }
      for (int d = 2; d <= K - 1; ++d) {
        bmin_[std::size_t(d)].add(
            prev[s.in_block + std::size_t(K - 2) + std::size_t(d - 2)] - h, s.nbr);
      }
      ops_ += std::uint64_t(2 * K) * 2;
    }
  }
  ops_ += std::uint64_t(deg) * 2;

  const double a3 = (K >= 3) ? amin_[3].min_excluding() : kInf;

  for (int t = 0; t < deg; ++t) {
    const Slot& s = slots_[begin + std::size_t(t)];
    const double base = sum_h - h_in_[std::size_t(t)];
    double* b = next + s.out_block;
    double best_f = kInf;

    if (s.kind_out == kVU) {
      // [A][F_2..F_K][G][H]; receiver is a root, never among the non-root
      // records, so only the root record needs an exclusion.
      b[0] = base + min0(a3);
      double f2 = base + root_min_.min_excluding(s.nbr) + min0(a3);
      b[1] = f2;
      best_f = f2;
      for (int d = 3; d <= K - 1; ++d) {
        const ThreeMin& bm = bmin_[std::size_t(d - 1)];
        double f = base + std::min(bm.min_excluding(),
                                   best_pair_sum(bm, amin_[std::size_t(d + 1)]));
        b[std::size_t(d - 1)] = f;
        best_f = std::min(best_f, f);
      }
      if (K >= 3) {
        double f = base + bmin_[std::size_t(K - 1)].min_excluding();
        b[std::size_t(K - 1)] = f;
        best_f = std::min(best_f, f);
      }
      b[std::size_t(K)] = beta + base;
      b[std::size_t(K) + 1] = std::min(b[std::size_t(K)], best_f);
      PATHPACK_REQUIRE(std::isfinite(b[std::size_t(K)]) &&
                           std::isfinite(b[std::size_t(K) + 1]),
                       "idle/neutral message went non-finite");
    } else {  // kVV
      const NodeId i = s.nbr;
      const double delta_child = s.edge_from ? 0.0 : kInf;   // offers need i -> j
      const double delta_parent = s.edge_to ? 0.0 : kInf;    // offers need j -> i
      const std::size_t fa = 0;                              // A_3..A_K
      const std::size_t fb = std::size_t(K - 2);             // B_2..B_{K-1}
      const std::size_t ff = std::size_t(2 * (K - 2));       // F_2..F_K
      for (int d = 3; d <= K - 1; ++d) {
        b[fa + std::size_t(d - 3)] =
            delta_child + base + min0(amin_[std::size_t(d + 1)].min_excluding(i));
      }
      if (K >= 3) {
        b[fa + std::size_t(K - 3)] = delta_child + base;
        b[fb + 0] = delta_parent + base + root_min_.min_excluding();
      }
      for (int d = 3; d <= K - 1; ++d) {
        b[fb + std::size_t(d - 2)] =
            delta_parent + base + bmin_[std::size_t(d - 1)].min_excluding(i);
      }
      double f2 = base + root_min_.min_excluding() +
                  min0((K >= 3) ? amin_[3].min_excluding(i) : kInf);
      b[ff + 0] = f2;
      best_f = f2;
      for (int d = 3; d <= K - 1; ++d) {
        const ThreeMin& bm = bmin_[std::size_t(d - 1)];
        double f = base + std::min(bm.min_excluding(i),
                                   best_pair_sum(bm, amin_[std::size_t(d + 1)], i));
        b[ff + std::size_t(d - 2)] = f;
        best_f = std::min(best_f, f);
      }
      if (K >= 3) {
        double f = base + bmin_[std::size_t(K - 1)].min_excluding(i);
        b[ff + std::size_t(K - 2)] = f;
        best_f = std::min(best_f, f);
      }
      b[std::size_t(3 * K - 5)] = beta + base;
      b[std::size_t(3 * K - 4)] = std::min(b[std::size_t(3 * K - 5)], best_f);
      PATHPACK_REQUIRE(std::isfinite(b[std::size_t(3 * K - 5)]) &&
                           std::isfinite(b[std::size_t(3 * K - 4)]),
                       "idle/neutral message went non-finite");
    }
    ops_ += std::uint64_t(3 * K) + 4;
  }
}

bool CompactBp::sweep(double beta) {
  const double* prev = buf_[cur_].data();
  double* next = buf_[1 - cur_].data();
  ops_ = 0;
  for (NodeId j = 0; j < g_->node_count(); ++j) {
    if (g_->is_root(j)) {
      update_root_node(j, beta, prev, next);
    } else {
      update_nonroot_node(j, beta, prev, next);
    }
  }
  ops_sweep_ = ops_;
  ops_total_ += ops_;

  bool fixed = true;
  const auto& a = buf_[cur_];
  const auto& b = buf_[1 - cur_];
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (std::isinf(a[e]) && std::isinf(b[e])) continue;
    if (!(std::abs(a[e] - b[e]) <= 1e-12)) {
      fixed = false;
      break;
    }
  }
  cur_ = 1 - cur_;
  ++iter_;
  return fixed;
}

double CompactBp::child_offer(NodeId from, NodeId to, int depth) const {
  const Slot* s = find_slot(to, from);
  PATHPACK_REQUIRE(s != nullptr, "child_offer across a non-adjacent pair");
  switch (Kind(s->kind_in)) {
    case kVV:
      if (depth < 3 || depth > K_) return kInf;
      return cur()[s->in_block + std::size_t(depth - 3)];
    case kVU:
      return depth == 2 ? cur()[s->in_block + 0] : kInf;
    case kUV:
      return kInf;  // a root is never anyone's child
  }
  return kInf;
}

double CompactBp::parent_offer(NodeId from, NodeId to, int depth) const {
  const Slot* s = find_slot(to, from);
  PATHPACK_REQUIRE(s != nullptr, "parent_offer across a non-adjacent pair");
  switch (Kind(s->kind_in)) {
    case kVV:
      if (depth < 2 || depth > K_ - 1) return kInf;
      return cur()[s->in_block + std::size_t(K_ - 2) + std::size_t(depth - 2)];
    case kUV:
      return depth == 1 ? cur()[s->in_block + 0] : kInf;
    case kVU:
      return kInf;  // a non-root is never a root's parent
  }
  return kInf;
}

double CompactBp::detached(NodeId from, NodeId to, int depth) const {
  const Slot* s = find_slot(to, from);
  PATHPACK_REQUIRE(s != nullptr, "detached across a non-adjacent pair");
  switch (Kind(s->kind_in)) {
    case kVV:
      if (depth < 2 || depth > K_) return kInf;
      return cur()[s->in_block + std::size_t(2 * (K_ - 2)) + std::size_t(depth - 2)];
    case kVU:
      if (depth < 2 || depth > K_) return kInf;
      return cur()[s->in_block + 1 + std::size_t(depth - 2)];
    case kUV:
      return depth == 1 ? cur()[s->in_block + 1] : kInf;
  }
  return kInf;
}

double CompactBp::idle(NodeId from, NodeId to) const {
  const Slot* s = find_slot(to, from);
  PATHPACK_REQUIRE(s != nullptr, "idle across a non-adjacent pair");
  return cur()[s->in_block + idle_index(Kind(s->kind_in))];
}

double CompactBp::neutral(NodeId from, NodeId to) const {
  const Slot* s = find_slot(to, from);
  PATHPACK_REQUIRE(s != nullptr, "neutral across a non-adjacent pair");
  return cur()[s->in_block + neutral_index(Kind(s->kind_in))];
}

double CompactBp::neutral_in_sum(NodeId i) const {
  double r = 0.0;
  const std::uint32_t begin = adj_off_[std::size_t(i)];
  const std::uint32_t end = adj_off_[std::size_t(i) + 1];
  for (std::uint32_t t = begin; t < end; ++t) {
    const Slot& s = slots_[t];
    r += cur()[s.in_block + neutral_index(Kind(s.kind_in))];
  }
  return r;
}

double CompactBp::dense_message(NodeId from, NodeId to, const NodeVars& v) const {
  if (!node_consistent(*g_, to, v)) return kInf;
  if (v.parent.is_node(from)) {
    // sender is the receiver's parent, one depth above it; the accessor's
    // range/kind rules reject the impossible sender types
    return parent_offer(from, to, v.depth.value() - 1);
  }
  if (v.child.is_node(from)) {
    const int child_depth = g_->is_root(to) ? 2 : v.depth.value() + 1;
    return child_offer(from, to, child_depth);
  }
  return neutral(from, to);
}

double CompactBp::neg_log_max_marginal(NodeId i, const NodeVars& v,
                                       double beta) const {
  double r = v.opted_out() ? beta : 0.0;
  for (NodeId k : g_->neighbors(i)) r += dense_message(k, i, v);
  return r;
}

void CompactBp::dump(std::ostream& out) const {
  static const char* names[3] = {"VV", "VU", "UV"};
  out << "pathpack-msgdump 1\n";
  out << "nodes " << g_->node_count() << " max_depth " << K_ << " iteration "
      << iter_ << '\n';
  out.precision(17);
  for (NodeId j = 0; j < g_->node_count(); ++j) {
    const std::uint32_t begin = adj_off_[std::size_t(j)];
    const std::uint32_t end = adj_off_[std::size_t(j) + 1];
    for (std::uint32_t t = begin; t < end; ++t) {
      const Slot& s = slots_[t];
      out << "side " << j << ' ' << s.nbr << ' ' << names[s.kind_out];
      const std::size_t sz = block_size(Kind(s.kind_out));
      for (std::size_t e = 0; e < sz; ++e) out << ' ' << cur()[s.out_block + e];
      out << '\n';
    }
  }
}

std::size_t expected_entry_count(const RootedDigraph& g, int K) {
  std::size_t total = 0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    for (NodeId j : g.neighbors(i)) {
      if (j < i) continue;
      if (g.is_root(i) || g.is_root(j)) {
        total += std::size_t(K + 2) + 4;  // one VU + one UV bundle
      } else {
        total += 2 * std::size_t(3 * K - 3);
      }
    }
  }
  return total;
}

DenseBp materialize_dense(const CompactBp& bp) {
  DenseBp table(bp.graph(), bp.max_depth(), 0.0, /*allow_large=*/true);
  table.fill([&bp](NodeId from, NodeId to, const NodeVars& v) {
    return bp.dense_message(from, to, v);
  });
  return table;
}

}  // namespace pathpack
