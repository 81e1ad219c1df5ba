#pragma once

#include <optional>
#include <string>

#include "pathpack/model.hpp"

namespace pathpack {

// Integer-program view of the same feasible set (the parent-child-depth
// formulation). Per node i: a participation indicator x_i, a starts-a-path
// indicator pdot_i, a depth d_i and its starts-a-path share ddot_i. Per
// directed edge (j, i): a parent indicator p_ji with its depth share d_ji,
// and a child indicator c_ji ("j's child is i"). Feasible variable settings
// are in bijection with feasible path collections, and the objective
// sum x_i counts covered nodes.
struct PcdVariables {
  // indexed by node id
  std::vector<int> x, p_start, d, d_start;
  // indexed by g.edge_index(from, to)
  std::vector<int> p_edge;  // edge (j,i): j is i's parent
  std::vector<int> d_edge;  // edge (j,i): depth share of i under that parent
  std::vector<int> c_edge;  // edge (i,j): i's child is j

  static PcdVariables zeros(const RootedDigraph& g);
};

struct PcdViolation {
  std::string constraint;  // role id, e.g. "depth-step"
  std::string detail;
};

// Evaluates every constraint (the depth-step one in its exact product form,
// not the big-M linearization) and reports the first violation in fixed scan
// order, or nullopt when feasible. Constraint ids:
//   binary-domain, depth-bounds, participation, single-child,
//   root-needs-child, depth-sum, root-depth, nonroot-no-start,
//   parent-child-match, depth-step, no-two-cycle
std::optional<PcdViolation> check_pcd(const RootedDigraph& g, int K,
                                      const PcdVariables& v);

// Node-by-node construction from a feasible collection; the result always
// passes check_pcd with objective equal to the collection value.
PcdVariables pcd_from_paths(const RootedDigraph& g, int K,
                            const PathCollection& P);

// Inverse direction: accepted variables map back to the unique feasible
// collection. Throws InputError when the variables fail check_pcd.
PathCollection paths_from_pcd(const RootedDigraph& g, int K,
                              const PcdVariables& v);

int pcd_objective(const PcdVariables& v);

// Number of variables the exported model declares: 4n + 3|E|.
std::size_t pcd_variable_count(const RootedDigraph& g);

// LP-format model text (Maximize / Subject To / Bounds / Generals /
// Binaries). The quadratic depth-step constraint is exported in linearized
// form with big-M = K:
//   d_j_i <= K p_j_i,  d_j_i <= d_j + 1,
//   d_j_i >= d_j + 1 - K (1 - p_j_i),  d_j_i >= 0.
// Variable naming: x_i, pdot_i, d_i, ddot_i, p_j_i, d_j_i, c_i_j.
std::string pcd_lp_text(const RootedDigraph& g, int K);

}  // namespace pathpack
