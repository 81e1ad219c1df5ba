#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pathpack/graph.hpp"

// The local-variable encoding of a path packing. Every node carries a
// (depth, parent, child) triple: either all three are "none" (the node sits
// on no path) or the node is on a path at depth 1..K with parent/child links,
// where an "end" link marks a path endpoint. Local indicator functions decide
// whether triples are consistent per node and per adjacent pair; an
// assignment passing every pairwise check corresponds to exactly one feasible
// path collection and vice versa.

namespace pathpack {

class Depth {
 public:
  static Depth none() { return Depth(); }
  static Depth at(int d) {
    PATHPACK_REQUIRE(d >= 1, "depth must be positive");
    Depth v;
    v.v_ = d;
    return v;
  }
  bool is_none() const { return v_ == 0; }
  int value() const {
    PATHPACK_REQUIRE(v_ != 0, "depth value of 'none'");
    return v_;
  }
  friend bool operator==(Depth a, Depth b) = default;

 private:
  int v_ = 0;
};

class Link {
 public:
  static Link none() { return Link(kNone); }
  static Link end() { return Link(kEnd); }
  static Link to(NodeId j) {
    PATHPACK_REQUIRE(j >= 0, "link target must be a node id");
    return Link(j);
  }
  bool is_none() const { return v_ == kNone; }
  bool is_end() const { return v_ == kEnd; }
  bool is_node() const { return v_ >= 0; }
  bool is_node(NodeId j) const { return v_ == j; }
  NodeId node() const {
    PATHPACK_REQUIRE(v_ >= 0, "link carries no node");
    return v_;
  }
  friend bool operator==(Link a, Link b) = default;

 private:
  explicit Link(NodeId v) : v_(v) {}
  static constexpr NodeId kNone = -1;
  static constexpr NodeId kEnd = -2;
  NodeId v_ = kNone;
};

struct NodeVars {
  Depth depth;
  Link parent = Link::none();
  Link child = Link::none();

  static NodeVars off() { return NodeVars{}; }
  bool opted_out() const {
    return depth.is_none() && parent.is_none() && child.is_none();
  }
  friend bool operator==(const NodeVars&, const NodeVars&) = default;
};

using Assignment = std::vector<NodeVars>;

struct Path {
  std::vector<NodeId> nodes;
  int length() const { return int(nodes.size()); }
};

struct PathCollection {
  std::vector<Path> paths;
  int value() const {
    int v = 0;
    for (const Path& p : paths) v += p.length();
    return v;
  }
};

// Domain check: depth in [1,K] or none; a node-valued parent lies in the
// undirected neighborhood, a node-valued child among non-root neighbors.
bool vars_in_domain(const RootedDigraph& g, int K, NodeId i, const NodeVars& v);

// Single-node consistency (three mutually exclusive cases: opted out /
// starts a path / interior-or-final position).
bool node_consistent(const RootedDigraph& g, NodeId i, const NodeVars& v);
std::array<bool, 3> node_consistent_cases(const RootedDigraph& g, NodeId i,
                                          const NodeVars& v);

// Pairwise consistency between adjacent i and j (three mutually exclusive
// cases: j parents i / i parents j / no direct relation).
bool edge_consistent(const RootedDigraph& g, NodeId i, const NodeVars& vi,
                     NodeId j, const NodeVars& vj);
std::array<bool, 3> edge_consistent_cases(const RootedDigraph& g, NodeId i,
                                          const NodeVars& vi, NodeId j,
                                          const NodeVars& vj);

// edge_consistent and both node indicators at once.
bool pair_consistent(const RootedDigraph& g, NodeId i, const NodeVars& vi,
                     NodeId j, const NodeVars& vj);

// Global feasibility: domains hold and pair_consistent passes for every node
// and neighbor. Feasible assignments are in bijection with path collections.
bool is_feasible_assignment(const RootedDigraph& g, int K, const Assignment& a);

// Number of participating nodes. Equals collection value on corresponding
// objects.
int assignment_value(const Assignment& a);

struct PathViolation {
  enum class Kind { BadRoot, MissingEdge, RepeatNode, Overlong, TooShort };
  Kind kind;
  std::size_t path_index = 0;
  NodeId node = kNoNode;
  std::string message;
};

// First violation in fixed scan order (paths in list order, nodes left to
// right), or nullopt when the collection is feasible.
std::optional<PathViolation> find_violation(const RootedDigraph& g, int K,
                                            const PathCollection& P);

// Throws InputError naming the violated constraint when P is infeasible.
Assignment assignment_from_paths(const RootedDigraph& g, int K,
                                 const PathCollection& P);

// Inverse of assignment_from_paths; requires a feasible assignment (throws
// InvariantError otherwise). Paths come out ordered by their root id.
PathCollection paths_from_assignment(const RootedDigraph& g, int K,
                                     const Assignment& a);

// One path per line, node ids space-separated.
void write_paths(const PathCollection& P, std::ostream& out);
PathCollection read_paths(std::istream& in);

}  // namespace pathpack
