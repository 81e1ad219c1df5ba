#include "pathpack/model.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace pathpack {

namespace {

bool contains(std::span<const NodeId> s, NodeId x) {
  return std::binary_search(s.begin(), s.end(), x);
}

}  // namespace

bool vars_in_domain(const RootedDigraph& g, int K, NodeId i, const NodeVars& v) {
  if (!v.depth.is_none() && (v.depth.value() < 1 || v.depth.value() > K)) return false;
  if (v.parent.is_node() && !contains(g.neighbors(i), v.parent.node())) return false;
  if (v.child.is_node() && !contains(g.nonroot_neighbors(i), v.child.node())) return false;
  return true;
}

std::array<bool, 3> node_consistent_cases(const RootedDigraph& g, NodeId i,
                                          const NodeVars& v) {
  const bool out = v.opted_out();
  const bool starts = v.parent.is_end() && v.child.is_node() &&
                      v.depth == Depth::at(1) && g.is_root(i);
  const bool interior = v.parent.is_node() && !v.child.is_none() &&
                        v.child != v.parent && !v.depth.is_none() &&
                        v.depth.value() != 1 && !g.is_root(i);
  return {out, starts, interior};
}

bool node_consistent(const RootedDigraph& g, NodeId i, const NodeVars& v) {
  auto c = node_consistent_cases(g, i, v);
  return c[0] || c[1] || c[2];
}

std::array<bool, 3> edge_consistent_cases(const RootedDigraph& g, NodeId i,
                                          const NodeVars& vi, NodeId j,
                                          const NodeVars& vj) {
  const bool j_parents_i = vi.parent.is_node(j) && vj.child.is_node(i) &&
                           !vj.parent.is_node(i) && !vi.child.is_node(j) &&
                           g.has_edge(j, i) && !vi.depth.is_none() &&
                           !vj.depth.is_none() &&
                           vi.depth.value() == vj.depth.value() + 1;
  const bool i_parents_j = vj.parent.is_node(i) && vi.child.is_node(j) &&
                           !vi.parent.is_node(j) && !vj.child.is_node(i) &&
                           g.has_edge(i, j) && !vi.depth.is_none() &&
                           !vj.depth.is_none() &&
                           vj.depth.value() == vi.depth.value() + 1;
  const bool unrelated = !vi.parent.is_node(j) && !vj.child.is_node(i) &&
                         !vj.parent.is_node(i) && !vi.child.is_node(j);
  return {j_parents_i, i_parents_j, unrelated};
}

bool edge_consistent(const RootedDigraph& g, NodeId i, const NodeVars& vi,
                     NodeId j, const NodeVars& vj) {
  auto c = edge_consistent_cases(g, i, vi, j, vj);
  return c[0] || c[1] || c[2];
}

bool pair_consistent(const RootedDigraph& g, NodeId i, const NodeVars& vi,
                     NodeId j, const NodeVars& vj) {
  return edge_consistent(g, i, vi, j, vj) && node_consistent(g, i, vi) &&
         node_consistent(g, j, vj);
}

bool is_feasible_assignment(const RootedDigraph& g, int K, const Assignment& a) {
  if (a.size() != std::size_t(g.node_count())) return false;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (!vars_in_domain(g, K, i, a[std::size_t(i)])) return false;
    for (NodeId j : g.neighbors(i)) {
      if (j < i) continue;  // each unordered pair once
      if (!pair_consistent(g, i, a[std::size_t(i)], j, a[std::size_t(j)])) {
        return false;
      }
    }
  }
  return true;
}

int assignment_value(const Assignment& a) {
  int v = 0;
  for (const NodeVars& nv : a) v += nv.opted_out() ? 0 : 1;
  return v;
}

std::optional<PathViolation> find_violation(const RootedDigraph& g, int K,
                                            const PathCollection& P) {
  std::vector<bool> seen(std::size_t(g.node_count()), false);
  for (std::size_t pi = 0; pi < P.paths.size(); ++pi) {
    const auto& nodes = P.paths[pi].nodes;
    if (nodes.empty()) {
      return PathViolation{PathViolation::Kind::TooShort, pi, kNoNode,
                           "path " + std::to_string(pi) + " is empty"};
    }
    for (std::size_t t = 0; t < nodes.size(); ++t) {
      NodeId v = nodes[t];
      if (v < 0 || v >= g.node_count()) {
        return PathViolation{PathViolation::Kind::MissingEdge, pi, v,
                             "node id " + std::to_string(v) + " out of range"};
      }
      if (t == 0 && !g.is_root(v)) {
        return PathViolation{PathViolation::Kind::BadRoot, pi, v,
                             "path " + std::to_string(pi) + " starts at non-root " +
                                 std::to_string(v)};
      }
      if (t > 0 && g.is_root(v)) {
        return PathViolation{PathViolation::Kind::BadRoot, pi, v,
                             "root " + std::to_string(v) + " at interior position"};
      }
      if (int(t) >= K) {
        return PathViolation{PathViolation::Kind::Overlong, pi, v,
                             "overlong: path " + std::to_string(pi) + " exceeds " +
                                 std::to_string(K) + " nodes"};
      }
      if (seen[std::size_t(v)]) {
        return PathViolation{PathViolation::Kind::RepeatNode, pi, v,
                             "disjointness violated: node " + std::to_string(v) +
                                 " appears more than once"};
      }
      seen[std::size_t(v)] = true;
      if (t > 0 && !g.has_edge(nodes[t - 1], v)) {
        return PathViolation{PathViolation::Kind::MissingEdge, pi, v,
                             "missing edge " + std::to_string(nodes[t - 1]) + " -> " +
                                 std::to_string(v)};
      }
    }
    if (nodes.size() < 2) {
      return PathViolation{PathViolation::Kind::TooShort, pi, nodes[0],
                           "path " + std::to_string(pi) + " has a single node"};
    }
  }
  return std::nullopt;
}

Assignment assignment_from_paths(const RootedDigraph& g, int K,
                                 const PathCollection& P) {
  if (auto bad = find_violation(g, K, P)) {
    throw InputError("infeasible path collection: " + bad->message);
  }
  Assignment a(std::size_t(g.node_count()));
  for (const Path& p : P.paths) {
    for (std::size_t t = 0; t < p.nodes.size(); ++t) {
      NodeVars& v = a[std::size_t(p.nodes[t])];
      v.depth = Depth::at(int(t) + 1);
      v.parent = (t == 0) ? Link::end() : Link::to(p.nodes[t - 1]);
      v.child = (t + 1 == p.nodes.size()) ? Link::end() : Link::to(p.nodes[t + 1]);
    }
  }
  return a;
}

PathCollection paths_from_assignment(const RootedDigraph& g, int K,
                                     const Assignment& a) {
  PATHPACK_REQUIRE(is_feasible_assignment(g, K, a),
                   "paths_from_assignment requires a feasible assignment");
  PathCollection P;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (a[std::size_t(i)].depth != Depth::at(1)) continue;
    Path p;
    NodeId cur = i;
    while (true) {
      p.nodes.push_back(cur);
      const Link c = a[std::size_t(cur)].child;
      if (c.is_end()) break;
      PATHPACK_REQUIRE(p.nodes.size() <= std::size_t(K), "child chain exceeds bound");
      cur = c.node();
    }
    P.paths.push_back(std::move(p));
  }
  return P;
}

void write_paths(const PathCollection& P, std::ostream& out) {
  for (const Path& p : P.paths) {
    for (std::size_t t = 0; t < p.nodes.size(); ++t) {
      if (t) out << ' ';
      out << p.nodes[t];
    }
    out << '\n';
  }
}

PathCollection read_paths(std::istream& in) {
  PathCollection P;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    Path p;
    long long v = 0;
    while (ls >> v) {
      if (v < 0) throw ParseError(lineno, "negative node id");
      p.nodes.push_back(NodeId(v));
    }
    if (!ls.eof()) throw ParseError(lineno, "expected whitespace-separated node ids");
    P.paths.push_back(std::move(p));
  }
  return P;
}

}  // namespace pathpack
