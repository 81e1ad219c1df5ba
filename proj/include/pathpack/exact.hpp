#pragma once

#include "pathpack/decode.hpp"

namespace pathpack {

// Exhaustive optimum by branch and bound over per-root path choices: roots
// are processed in ascending id order, each either skipped or assigned one
// directed path over still-available non-roots (every extension of at least
// one edge is a candidate, longest first). A branch is cut when
// current value + available non-roots + unprocessed roots
// cannot beat the incumbent. Guarded to small instances; pass
// override_guard to lift the node cap.
struct ExactGuard {
  NodeId max_nodes = 14;
  bool override_guard = false;
};

SolveResult solve_exact(const RootedDigraph& g, int K, ExactGuard guard = {});

}  // namespace pathpack
