#pragma once

#include <span>

#include "pathpack/decode.hpp"

namespace pathpack {

// One greedy pass over the given root order: at each root, search
// exhaustively (depth-first over still-available non-roots, children in
// ascending id order) for a longest path of at most K nodes, keep it if it
// has at least one edge, and mark its nodes used. Ties keep the first path
// found.
PathCollection greedy_once(const RootedDigraph& g, int K,
                           std::span<const NodeId> root_order);

// Best greedy pass over params.greedy_orders random root orders.
SolveResult solve_greedy(const RootedDigraph& g, const SolveParams& params);

}  // namespace pathpack
