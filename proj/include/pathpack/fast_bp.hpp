#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pathpack/dense_bp.hpp"
#include "pathpack/model.hpp"
#include "pathpack/three_min.hpp"

namespace pathpack {

// Compact message state. Instead of one cost per receiver configuration, a
// directed adjacency side (j -> i) carries a fixed bundle whose entries
// summarize what the sender j can claim about itself:
//
//   child_offer(j->i, d)   j joins i's path as i's child, sitting at depth d
//                          (requires the directed edge i -> j)
//   parent_offer(j->i, d)  j is i's parent, j sitting at depth d
//                          (requires the directed edge j -> i)
//   detached(j->i, d)      j sits on some path at depth d, unrelated to i
//   idle(j->i)             j sits on no path
//   neutral(j->i)          cheapest no-relation option: min of idle and all
//                          detached entries
//
// Depth index ranges depend on the endpoint kinds: between two non-roots,
// child offers span depths 3..K, parent offers 2..K-1 and detached 2..K;
// a non-root sends a root one child offer (depth 2) plus detached 2..K;
// a root sends one parent offer (depth 1) and one detached entry. Empty
// ranges (K = 2) contribute +infinity to any minimum over them. Entries
// whose required directed edge is absent stay +infinity; idle and neutral
// are finite after every sweep, which keeps every subtraction below
// well-defined (asserted).
//
// One synchronous sweep recomputes all bundles of a node in O(K * degree)
// via the per-depth three-smallest records in ThreeMin, reading only the
// previous buffer, so total sweep cost is O(sum_j K * degree(j)).
class CompactBp {
 public:
  CompactBp(const RootedDigraph& g, int K, double initial = 1.0);

  const RootedDigraph& graph() const { return *g_; }
  int max_depth() const { return K_; }
  int iteration() const { return iter_; }

  // One synchronous sweep. Returns true when the new state equals the
  // previous one elementwise (|diff| <= 1e-12 on finite entries, infinities
  // matching exactly).
  bool sweep(double beta);

  // Arithmetic-operation tallies (adds, subtractions, min comparisons).
  std::uint64_t ops_last_sweep() const { return ops_sweep_; }
  std::uint64_t ops_total() const { return ops_total_; }

  // Number of stored bundle entries across all sides (one buffer).
  std::size_t stored_entry_count() const { return buf_[0].size(); }

  // --- bundle accessors (current state, i.e. after the last sweep) ---
  // `depth` is always the sender's depth. Out-of-range depths yield +inf.
  double child_offer(NodeId from, NodeId to, int depth) const;
  double parent_offer(NodeId from, NodeId to, int depth) const;
  double detached(NodeId from, NodeId to, int depth) const;
  double idle(NodeId from, NodeId to) const;
  double neutral(NodeId from, NodeId to) const;
  // sum over k adjacent to i of neutral(k, i)
  double neutral_in_sum(NodeId i) const;

  // --- dense view ---
  // The full-table message b_{from->to}(receiver vars) this compact state
  // represents, classified by how the receiver's links involve the sender:
  // inconsistent receiver vars are +inf; parent = sender maps to a parent
  // offer, child = sender to a child offer, anything else to neutral.
  double dense_message(NodeId from, NodeId to, const NodeVars& receiver) const;
  // Negative-log max-marginal assembled from dense_message.
  double neg_log_max_marginal(NodeId i, const NodeVars& v, double beta) const;

  // Versioned textual snapshot of the current buffer (debugging aid).
  void dump(std::ostream& out) const;

 private:
  friend DenseBp materialize_dense(const CompactBp&);

  enum Kind : std::uint8_t { kVV = 0, kVU = 1, kUV = 2 };
  struct Slot {
    NodeId nbr;
    std::uint32_t out_block;  // this -> nbr
    std::uint32_t in_block;   // nbr -> this
    std::uint8_t kind_out;
    std::uint8_t kind_in;
    bool edge_to;    // directed edge (this -> nbr)
    bool edge_from;  // directed edge (nbr -> this)
  };

  // Bundle layout, relative indices within a block.
  //   VV size 3K-3: [A_3..A_K][B_2..B_{K-1}][F_2..F_K][G][H]
  //   VU size K+2:  [A][F_2..F_K][G][H]
  //   UV size 4:    [B][F][G][H]
  std::size_t block_size(Kind k) const {
    return k == kVV ? std::size_t(3 * K_ - 3) : k == kVU ? std::size_t(K_ + 2) : 4;
  }
  std::size_t neutral_index(Kind k) const { return block_size(k) - 1; }
  std::size_t idle_index(Kind k) const { return block_size(k) - 2; }

  const Slot* find_slot(NodeId node, NodeId nbr) const;
  const double* cur() const { return buf_[cur_].data(); }

  void update_root_node(NodeId j, double beta, const double* prev, double* next);
  void update_nonroot_node(NodeId j, double beta, const double* prev, double* next);

  const RootedDigraph* g_ = nullptr;
  int K_ = 0;
  int iter_ = 0;
  int cur_ = 0;
  std::vector<std::uint32_t> adj_off_;  // n+1
  std::vector<Slot> slots_;
  std::vector<double> buf_[2];
  std::uint64_t ops_sweep_ = 0;
  std::uint64_t ops_total_ = 0;
  std::uint64_t ops_ = 0;  // accumulator during a sweep
  // scratch reused across node updates
  std::vector<double> h_in_;
  std::vector<ThreeMin> amin_, bmin_;
  ThreeMin root_min_;
};

// Closed-form stored-entry count implied by the bundle ranges, for the given
// graph: every undirected non-root pair holds two VV bundles, every root
// adjacency one VU and one UV bundle.
std::size_t expected_entry_count(const RootedDigraph& g, int K);

// Materialize the compact state as a full dense table (same storage type as
// the reference engine, enabling elementwise comparison).
DenseBp materialize_dense(const CompactBp& bp);

}  // namespace pathpack
