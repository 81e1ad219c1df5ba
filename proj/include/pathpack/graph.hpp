#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pathpack/errors.hpp"

namespace pathpack {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

// Directed graph with a designated root set. Structural guarantees, enforced
// at construction:
//   - no edge points into a root (so a root's whole neighborhood is its
//     out-neighborhood, and it only ever starts paths),
//   - no self-loops, no duplicate edges, no isolated nodes.
// Node ids are dense and 0-based; `source_id` maps back to the labels of the
// ingested data (identity for freshly generated graphs). Immutable once
// built and safe to share across threads.
class RootedDigraph {
 public:
  RootedDigraph() = default;  // the empty graph (n = 0)

  RootedDigraph(NodeId n, std::vector<NodeId> roots,
                std::vector<std::pair<NodeId, NodeId>> edges,
                std::vector<std::int64_t> source_ids = {});

  NodeId node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t root_count() const { return roots_.size(); }
  std::size_t nonroot_count() const { return std::size_t(n_) - roots_.size(); }

  bool is_root(NodeId i) const { return is_root_[std::size_t(i)]; }
  std::span<const NodeId> roots() const { return roots_; }

  std::span<const NodeId> out_neighbors(NodeId i) const {
    return view(out_off_, out_nbr_, i);
  }
  std::span<const NodeId> in_neighbors(NodeId i) const {
    return view(in_off_, in_nbr_, i);
  }
  // Undirected neighborhood, sorted ascending, deduplicated.
  std::span<const NodeId> neighbors(NodeId i) const {
    return view(und_off_, und_nbr_, i);
  }
  std::span<const NodeId> root_neighbors(NodeId i) const {
    return view(rn_off_, rn_nbr_, i);
  }
  std::span<const NodeId> nonroot_neighbors(NodeId i) const {
    return view(vn_off_, vn_nbr_, i);
  }

  int degree(NodeId i) const { return int(und_off_[i + 1] - und_off_[i]); }
  int max_degree() const;

  bool has_edge(NodeId from, NodeId to) const { return edge_index(from, to) >= 0; }

  // Directed edges sorted by (from, to); edge_index is the position in this
  // list, or -1 when absent. Used as the dense per-edge variable index.
  std::span<const std::pair<NodeId, NodeId>> edges() const { return edges_; }
  std::ptrdiff_t edge_index(NodeId from, NodeId to) const;

  std::int64_t source_id(NodeId i) const { return source_ids_[std::size_t(i)]; }

 private:
  static std::span<const NodeId> view(const std::vector<std::uint32_t>& off,
                                      const std::vector<NodeId>& flat, NodeId i) {
    return {flat.data() + off[std::size_t(i)],
            flat.data() + off[std::size_t(i) + 1]};
  }

  NodeId n_ = 0;
  std::vector<bool> is_root_;
  std::vector<NodeId> roots_;  // sorted
  std::vector<std::pair<NodeId, NodeId>> edges_;  // sorted by (from, to)
  std::vector<std::uint32_t> out_off_, in_off_, und_off_, rn_off_, vn_off_;
  std::vector<NodeId> out_nbr_, in_nbr_, und_nbr_, rn_nbr_, vn_nbr_;
  std::vector<std::int64_t> source_ids_;
};

// Random instance: exactly floor(root_fraction * n) roots chosen uniformly,
// then each ordered pair (i, j) with j a non-root and i != j carries an edge
// independently with probability c / n. Nodes left isolated are removed and
// ids are relabeled densely (source ids retain the pre-removal labels).
RootedDigraph generate_random_graph(NodeId n, double root_fraction, double c,
                                    std::uint64_t seed);

// How to pick roots when ingesting an edge list.
struct RootSpec {
  static RootSpec list(std::vector<std::int64_t> ids) {
    RootSpec s;
    s.explicit_roots = std::move(ids);
    return s;
  }
  static RootSpec sample(double fraction, std::uint64_t seed) {
    RootSpec s;
    s.fraction = fraction;
    s.seed = seed;
    return s;
  }
  std::optional<std::vector<std::int64_t>> explicit_roots;
  double fraction = 0.0;
  std::uint64_t seed = 0;
};

struct LoadedGraph {
  RootedDigraph graph;
  std::size_t dropped_self_loops = 0;
  std::size_t dropped_duplicates = 0;
  std::size_t dropped_edges_into_roots = 0;
  std::size_t dropped_isolated_nodes = 0;
};

// Ingests whitespace-separated "src dst" lines; lines starting with '#' (after
// optional leading whitespace) and blank lines are skipped. Processing order:
// drop self-loops and duplicates, select roots over the surviving node
// universe, discard edges pointing into roots, drop isolated nodes, relabel
// densely ascending by original id. Explicit root ids must exist in the
// pre-discard universe.
LoadedGraph load_edge_list(std::istream& in, const RootSpec& roots);

void write_edge_list(const RootedDigraph& g, std::ostream& out);
void write_root_list(const RootedDigraph& g, std::ostream& out);
// One integer per line; '#' comments and blank lines allowed.
std::vector<std::int64_t> read_root_list(std::istream& in);

}  // namespace pathpack
