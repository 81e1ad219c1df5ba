#include "pathpack/ip_model.hpp"

#include <sstream>

namespace pathpack {

PcdVariables PcdVariables::zeros(const RootedDigraph& g) {
  PcdVariables v;
  const std::size_t n = std::size_t(g.node_count());
  const std::size_t m = g.edge_count();
  v.x.assign(n, 0);
  v.p_start.assign(n, 0);
  v.d.assign(n, 0);
  v.d_start.assign(n, 0);
  v.p_edge.assign(m, 0);
  v.d_edge.assign(m, 0);
  v.c_edge.assign(m, 0);
  return v;
}

int pcd_objective(const PcdVariables& v) {
  int s = 0;
  for (int xi : v.x) s += xi;
  return s;
}

std::size_t pcd_variable_count(const RootedDigraph& g) {
  return 4 * std::size_t(g.node_count()) + 3 * g.edge_count();
}

namespace {

bool is_binary(int v) { return v == 0 || v == 1; }

std::optional<PcdViolation> fail(std::string constraint, std::string detail) {
  return PcdViolation{std::move(constraint), std::move(detail)};
}

}  // namespace

std::optional<PcdViolation> check_pcd(const RootedDigraph& g, int K,
                                      const PcdVariables& v) {
  const std::size_t n = std::size_t(g.node_count());
  const std::size_t m = g.edge_count();
  if (v.x.size() != n || v.p_start.size() != n || v.d.size() != n ||
      v.d_start.size() != n || v.p_edge.size() != m || v.d_edge.size() != m ||
      v.c_edge.size() != m) {
    return fail("shape", "variable vector sizes do not match the graph");
  }
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto ui = std::size_t(i);
    const std::string ni = std::to_string(i);
    if (!is_binary(v.x[ui])) return fail("binary-domain", "x_" + ni);
    if (!is_binary(v.p_start[ui])) return fail("binary-domain", "pdot_" + ni);
    if (v.d[ui] < 0 || v.d[ui] > K) {
      return fail("depth-bounds", "d_" + ni + " = " + std::to_string(v.d[ui]));
    }
  }
  for (std::size_t e = 0; e < m; ++e) {
    auto [a, b] = g.edges()[e];
    const std::string name =
        "_" + std::to_string(a) + "_" + std::to_string(b);
    if (!is_binary(v.p_edge[e])) return fail("binary-domain", "p" + name);
    if (!is_binary(v.c_edge[e])) return fail("binary-domain", "c" + name);
  }
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto ui = std::size_t(i);
    const std::string ni = std::to_string(i);
    int parents = v.p_start[ui];
    int dsum = v.d_start[ui];
    for (NodeId j : g.in_neighbors(i)) {
      const std::size_t e = std::size_t(g.edge_index(j, i));
      parents += v.p_edge[e];
      dsum += v.d_edge[e];
    }
    int children = 0;
    for (NodeId j : g.out_neighbors(i)) {
      children += v.c_edge[std::size_t(g.edge_index(i, j))];
    }
    if (v.x[ui] != parents) {
      return fail("participation", "node " + ni + ": x != pdot + sum of parent vars");
    }
    if (children > v.x[ui]) {
      return fail("single-child", "node " + ni + ": child sum exceeds x");
    }
    if (v.p_start[ui] > children) {
      return fail("root-needs-child", "node " + ni + ": pdot set but no child");
    }
    if (v.d[ui] != dsum) {
      return fail("depth-sum", "node " + ni + ": d != ddot + sum of depth shares");
    }
    if (v.d_start[ui] != v.p_start[ui]) {
      return fail("root-depth", "node " + ni + ": ddot != pdot");
    }
    if (!g.is_root(i) && v.p_start[ui] != 0) {
      return fail("nonroot-no-start", "node " + ni + " is not a root");
    }
  }
  for (std::size_t e = 0; e < m; ++e) {
    auto [j, i] = g.edges()[e];
    const std::string name =
        " (" + std::to_string(j) + " -> " + std::to_string(i) + ")";
    if (v.p_edge[e] != v.c_edge[e]) {
      return fail("parent-child-match", "edge" + name);
    }
    if (v.d_edge[e] != v.p_edge[e] * (v.d[std::size_t(j)] + 1)) {
      return fail("depth-step", "edge" + name);
    }
    const std::ptrdiff_t rev = g.edge_index(i, j);
    if (rev >= 0 && v.p_edge[e] + v.c_edge[std::size_t(rev)] > 1) {
      return fail("no-two-cycle", "edge" + name);
    }
  }
  return std::nullopt;
}

PcdVariables pcd_from_paths(const RootedDigraph& g, int K,
                            const PathCollection& P) {
  if (auto bad = find_violation(g, K, P)) {
    throw InputError("infeasible path collection: " + bad->message);
  }
  PcdVariables v = PcdVariables::zeros(g);
  for (const Path& p : P.paths) {
    for (std::size_t t = 0; t < p.nodes.size(); ++t) {
      const auto ui = std::size_t(p.nodes[t]);
      v.x[ui] = 1;
      v.d[ui] = int(t) + 1;
      if (t == 0) {
        v.p_start[ui] = 1;
        v.d_start[ui] = 1;
      } else {
        const std::size_t e = std::size_t(g.edge_index(p.nodes[t - 1], p.nodes[t]));
        v.p_edge[e] = 1;
        v.d_edge[e] = int(t) + 1;
      }
      if (t + 1 < p.nodes.size()) {
        v.c_edge[std::size_t(g.edge_index(p.nodes[t], p.nodes[t + 1]))] = 1;
      }
    }
  }
  return v;
}

PathCollection paths_from_pcd(const RootedDigraph& g, int K,
                              const PcdVariables& v) {
  if (auto bad = check_pcd(g, K, v)) {
    throw InputError("variables rejected at " + bad->constraint + ": " + bad->detail);
  }
  Assignment a(std::size_t(g.node_count()));
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto ui = std::size_t(i);
    if (v.x[ui] == 0) continue;
    NodeVars& nv = a[ui];
    nv.depth = Depth::at(v.d[ui]);
    if (v.p_start[ui] == 1) {
      nv.parent = Link::end();
    } else {
      for (NodeId j : g.in_neighbors(i)) {
        if (v.p_edge[std::size_t(g.edge_index(j, i))] == 1) {
          nv.parent = Link::to(j);
          break;
        }
      }
    }
    nv.child = Link::end();
    for (NodeId j : g.out_neighbors(i)) {
      if (v.c_edge[std::size_t(g.edge_index(i, j))] == 1) {
        nv.child = Link::to(j);
        break;
      }
    }
  }
  return paths_from_assignment(g, K, a);
}

std::string pcd_lp_text(const RootedDigraph& g, int K) {
  std::ostringstream out;
  const NodeId n = g.node_count();
  out << "\\ parent-child-depth path packing model, K = " << K << "\n";
  out << "Maximize\n obj:";
  if (n == 0) out << " 0 x_none";
  for (NodeId i = 0; i < n; ++i) out << (i ? " + x_" : " x_") << i;
  out << "\nSubject To\n";
  auto var = [](const char* stem, NodeId a, NodeId b) {
    return std::string(stem) + "_" + std::to_string(a) + "_" + std::to_string(b);
  };
  for (NodeId i = 0; i < n; ++i) {
    // participation: x_i - pdot_i - sum p_j_i = 0
    out << " part_" << i << ": x_" << i << " - pdot_" << i;
    for (NodeId j : g.in_neighbors(i)) out << " - " << var("p", j, i);
    out << " = 0\n";
    // single child: sum c_i_j - x_i <= 0
    out << " child_" << i << ":";
    bool first = true;
    for (NodeId j : g.out_neighbors(i)) {
      out << (first ? " " : " + ") << var("c", i, j);
      first = false;
    }
    if (first) out << " 0 x_" << i;
    out << " - x_" << i << " <= 0\n";
    // a start needs a child: pdot_i - sum c_i_j <= 0
    out << " rootchild_" << i << ": pdot_" << i;
    for (NodeId j : g.out_neighbors(i)) out << " - " << var("c", i, j);
    out << " <= 0\n";
    // depth decomposition: d_i - ddot_i - sum d_j_i = 0
    out << " dsum_" << i << ": d_" << i << " - ddot_" << i;
    for (NodeId j : g.in_neighbors(i)) out << " - " << var("d", j, i);
    out << " = 0\n";
    out << " dstart_" << i << ": ddot_" << i << " - pdot_" << i << " = 0\n";
    if (!g.is_root(i)) out << " nostart_" << i << ": pdot_" << i << " = 0\n";
  }
  for (auto [j, i] : g.edges()) {
    out << " pcm_" << j << "_" << i << ": " << var("p", j, i) << " - "
        << var("c", j, i) << " = 0\n";
    // linearized depth step, big-M = K
    out << " dstepA_" << j << "_" << i << ": " << var("d", j, i) << " - " << K
        << " " << var("p", j, i) << " <= 0\n";
    out << " dstepB_" << j << "_" << i << ": " << var("d", j, i) << " - d_" << j
        << " <= 1\n";
    out << " dstepC_" << j << "_" << i << ": " << var("d", j, i) << " - d_" << j
        << " - " << K << " " << var("p", j, i) << " >= " << (1 - K) << "\n";
    if (g.has_edge(i, j)) {
      out << " cyc_" << j << "_" << i << ": " << var("p", j, i) << " + "
          << var("c", i, j) << " <= 1\n";
    }
  }
  out << "Bounds\n";
  for (NodeId i = 0; i < n; ++i) {
    out << " 0 <= d_" << i << " <= " << K << "\n";
    out << " 0 <= ddot_" << i << " <= 1\n";
  }
  for (auto [j, i] : g.edges()) {
    out << " 0 <= " << var("d", j, i) << " <= " << K << "\n";
  }
  out << "Generals\n";
  for (NodeId i = 0; i < n; ++i) out << " d_" << i << " ddot_" << i << "\n";
  for (auto [j, i] : g.edges()) out << " " << var("d", j, i) << "\n";
  out << "Binaries\n";
  for (NodeId i = 0; i < n; ++i) out << " x_" << i << " pdot_" << i << "\n";
  for (auto [j, i] : g.edges()) {
    out << " " << var("p", j, i) << " " << var("c", j, i) << "\n";
  }
  out << "End\n";
  return out.str();
}

}  // namespace pathpack
