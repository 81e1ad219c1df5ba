#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "pathpack/model.hpp"

namespace pathpack {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Literal min-sum message table: for every ordered adjacent pair (j, i) one
// cost entry per receiver configuration (depth, parent, child). Each sweep
// recomputes every entry by minimizing over the sender's configurations that
// are pair-consistent with the receiver's. This is the correctness reference
// for CompactBp; cost per sweep is quadratic in the per-node domain sizes,
// so construction is guarded to small instances.
class DenseBp {
 public:
  static constexpr NodeId kDefaultNodeGuard = 64;

  DenseBp(const RootedDigraph& g, int K, double initial = 1.0,
          bool allow_large = false);

  const RootedDigraph& graph() const { return *g_; }
  int max_depth() const { return K_; }
  int iteration() const { return iter_; }

  // One synchronous sweep; returns true when the new table equals the
  // previous one (fixed point; infinities must match exactly).
  bool sweep(double beta);

  // b_{from -> to}(receiver vars), from the most recent sweep.
  double message(NodeId from, NodeId to, const NodeVars& receiver) const;

  // Negative-log max-marginal at i: node cost plus the sum of all incoming
  // messages for this configuration.
  double neg_log_max_marginal(NodeId i, const NodeVars& v, double beta) const;

  std::size_t config_count(NodeId i) const { return cfgs_[std::size_t(i)].size(); }
  const NodeVars& config_at(NodeId i, std::size_t idx) const {
    return cfgs_[std::size_t(i)][idx];
  }
  std::size_t total_entries() const { return store_[0].size(); }

  struct Diff {
    double max_abs = 0.0;        // over entries finite on both sides
    std::size_t finite_mismatches = 0;  // finite on one side, infinite on the other
  };
  static Diff compare(const DenseBp& a, const DenseBp& b);

  // Overwrites the current table through `fn(from, to, receiver_vars)`;
  // used to materialize a compact state in dense form.
  template <typename Fn>
  void fill(Fn&& fn) {
    auto& cur = store_[cur_];
    for (NodeId to = 0; to < g_->node_count(); ++to) {
      for (std::size_t t = 0; t < g_->neighbors(to).size(); ++t) {
        NodeId from = g_->neighbors(to)[t];
        double* block = cur.data() + side_offset(to, t);
        for (std::size_t c = 0; c < config_count(to); ++c) {
          block[c] = fn(from, to, config_at(to, c));
        }
      }
    }
  }

 private:
  std::size_t side_offset(NodeId to, std::size_t nbr_pos) const;
  std::size_t config_index(NodeId i, const NodeVars& v) const;

  const RootedDigraph* g_ = nullptr;
  int K_ = 0;
  int iter_ = 0;
  int cur_ = 0;
  // per node: enumerated configurations and their single-node consistency
  std::vector<std::vector<NodeVars>> cfgs_;
  std::vector<std::vector<char>> node_ok_;
  std::vector<std::vector<std::uint32_t>> valid_cfgs_;  // indices with node_ok
  // per node `to`, per undirected-neighbor slot: block offset of (nbr -> to)
  std::vector<std::vector<std::size_t>> side_off_;
  std::vector<double> store_[2];
  std::vector<double> psi_;  // scratch
};

}  // namespace pathpack
