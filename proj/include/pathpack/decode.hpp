#pragma once

#include <span>

#include "pathpack/fast_bp.hpp"
#include "pathpack/params.hpp"
#include "pathpack/rng.hpp"

namespace pathpack {

// Greedy path reconstruction from a message state: roots are visited in the
// given order; each root either opts out or starts a path toward the child
// minimizing the negative-log max-marginal, and the path grows one node at a
// time the same way until ending wins, the depth bound is hit, or no finite
// continuation is available. Already-used non-roots never re-enter. Ties
// prefer continuing over stopping, then the lowest node id. The result is
// always a feasible collection.
PathCollection decode_once(const CompactBp& bp, double beta,
                           std::span<const NodeId> root_order);

// Best result over `num_orders` uniformly random root permutations; ties
// keep the first one found.
PathCollection decode_best(const CompactBp& bp, double beta, int num_orders,
                           Rng& rng);

// Dense-engine variant of decode_once evaluating the same max-marginal
// comparisons from the reference table (debugging path, small graphs only).
PathCollection decode_once_dense(const DenseBp& dense, double beta,
                                 std::span<const NodeId> root_order);

struct SolveResult {
  PathCollection paths;
  RunReport report;
};

// Full solver: sweeps until a fixed point, the iteration budget, or the time
// limit; after each sweep, decodes params.bp_orders random root orders and
// keeps the best collection seen across all sweeps.
SolveResult solve_bp(const RootedDigraph& g, const SolveParams& params);

// Same loop driven by the dense reference engine (guarded to small graphs
// unless allow_large).
SolveResult solve_bp_dense(const RootedDigraph& g, const SolveParams& params,
                           bool allow_large = false);

}  // namespace pathpack
