#include "pathpack/dense_bp.hpp"

#include <algorithm>
#include <cmath>

namespace pathpack {

DenseBp::DenseBp(const RootedDigraph& g, int K, double initial, bool allow_large)
    : g_(&g), K_(K) {
  PATHPACK_REQUIRE(K >= 2, "K must be at least 2");
  if (!allow_large && g.node_count() > kDefaultNodeGuard) {
    throw InputError("dense reference table guarded to n <= " +
                     std::to_string(int(kDefaultNodeGuard)) +
                     " (pass allow_large to override)");
  }
  const NodeId n = g.node_count();
  cfgs_.resize(std::size_t(n));
  node_ok_.resize(std::size_t(n));
  valid_cfgs_.resize(std::size_t(n));
  side_off_.resize(std::size_t(n));

  for (NodeId i = 0; i < n; ++i) {
    auto und = g.neighbors(i);
    auto vnb = g.nonroot_neighbors(i);
    auto& cfgs = cfgs_[std::size_t(i)];
    cfgs.reserve(std::size_t(K + 1) * (und.size() + 2) * (vnb.size() + 2));
    for (int d = 0; d <= K; ++d) {
      Depth depth = (d == 0) ? Depth::none() : Depth::at(d);
      for (std::size_t pi = 0; pi < und.size() + 2; ++pi) {
        Link parent = (pi == 0)   ? Link::none()
                      : (pi == 1) ? Link::end()
                                  : Link::to(und[pi - 2]);
        for (std::size_t ci = 0; ci < vnb.size() + 2; ++ci) {
          Link child = (ci == 0)   ? Link::none()
                       : (ci == 1) ? Link::end()
                                   : Link::to(vnb[ci - 2]);
          cfgs.push_back(NodeVars{depth, parent, child});
        }
      }
    }
    auto& ok = node_ok_[std::size_t(i)];
    ok.resize(cfgs.size());
    for (std::size_t c = 0; c < cfgs.size(); ++c) {
      ok[c] = node_consistent(g, i, cfgs[c]) ? 1 : 0;
      if (ok[c]) valid_cfgs_[std::size_t(i)].push_back(std::uint32_t(c));
    }
  }

  std::size_t total = 0;
  for (NodeId i = 0; i < n; ++i) {
    auto& offs = side_off_[std::size_t(i)];
    offs.resize(g.neighbors(i).size());
    for (std::size_t t = 0; t < offs.size(); ++t) {
      offs[t] = total;
      total += cfgs_[std::size_t(i)].size();
    }
  }
  store_[0].assign(total, initial);
  store_[1].assign(total, initial);
}

std::size_t DenseBp::side_offset(NodeId to, std::size_t nbr_pos) const {
  return side_off_[std::size_t(to)][nbr_pos];
}

std::size_t DenseBp::config_index(NodeId i, const NodeVars& v) const {
  auto und = g_->neighbors(i);
  auto vnb = g_->nonroot_neighbors(i);
  auto link_index = [](std::span<const NodeId> list, Link l) -> std::size_t {
    if (l.is_none()) return 0;
    if (l.is_end()) return 1;
    auto it = std::lower_bound(list.begin(), list.end(), l.node());
    PATHPACK_REQUIRE(it != list.end() && *it == l.node(),
                     "link target outside the node's domain");
    return 2 + std::size_t(it - list.begin());
  };
  std::size_t d = v.depth.is_none() ? 0 : std::size_t(v.depth.value());
  PATHPACK_REQUIRE(d <= std::size_t(K_), "depth outside [1, K]");
  std::size_t p = link_index(und, v.parent);
  std::size_t c = link_index(vnb, v.child);
  return (d * (und.size() + 2) + p) * (vnb.size() + 2) + c;
}

double DenseBp::message(NodeId from, NodeId to, const NodeVars& receiver) const {
  auto und = g_->neighbors(to);
  auto it = std::lower_bound(und.begin(), und.end(), from);
  PATHPACK_REQUIRE(it != und.end() && *it == from, "message across a non-edge");
  std::size_t slot = std::size_t(it - und.begin());
  return store_[cur_][side_offset(to, slot) + config_index(to, receiver)];
}

double DenseBp::neg_log_max_marginal(NodeId i, const NodeVars& v,
                                     double beta) const {
  double r = v.opted_out() ? beta : 0.0;
  auto und = g_->neighbors(i);
  std::size_t cfg = config_index(i, v);
  for (std::size_t t = 0; t < und.size(); ++t) {
    r += store_[cur_][side_offset(i, t) + cfg];
  }
  return r;
}

bool DenseBp::sweep(double beta) {
  const RootedDigraph& g = *g_;
  const auto& prev = store_[cur_];
  auto& next = store_[1 - cur_];

  for (NodeId to = 0; to < g.node_count(); ++to) {
    auto und_to = g.neighbors(to);
    const auto& cfg_to = cfgs_[std::size_t(to)];
    const auto& ok_to = node_ok_[std::size_t(to)];
    for (std::size_t slot = 0; slot < und_to.size(); ++slot) {
      const NodeId from = und_to[slot];
      const auto& cfg_from = cfgs_[std::size_t(from)];
      const auto& valid_from = valid_cfgs_[std::size_t(from)];
      auto und_from = g.neighbors(from);

      // psi[cfg_from] = node cost + sum of messages into `from` except the
      // one coming back from `to`.
      psi_.assign(cfg_from.size(), kInf);
      for (std::uint32_t c : valid_from) {
        double s = cfg_from[c].opted_out() ? beta : 0.0;
        for (std::size_t t = 0; t < und_from.size(); ++t) {
          if (und_from[t] == to) continue;
          s += prev[side_offset(from, t) + c];
        }
        psi_[c] = s;
      }

      double* block = next.data() + side_offset(to, slot);
      for (std::size_t c = 0; c < cfg_to.size(); ++c) {
        if (!ok_to[c]) {
          block[c] = kInf;  // empty constraint set
          continue;
        }
        const NodeVars& rv = cfg_to[c];
        double best = kInf;
        for (std::uint32_t s : valid_from) {
          if (!edge_consistent(g, to, rv, from, cfg_from[s])) continue;
          best = std::min(best, psi_[s]);
        }
        block[c] = best;
      }
    }
  }

  bool fixed = true;
  for (std::size_t e = 0; e < next.size(); ++e) {
    double a = prev[e], b = next[e];
    if (std::isinf(a) && std::isinf(b)) continue;
    if (std::abs(a - b) > 1e-12) {
      fixed = false;
      break;
    }
  }
  cur_ = 1 - cur_;
  ++iter_;
  return fixed;
}

DenseBp::Diff DenseBp::compare(const DenseBp& a, const DenseBp& b) {
  PATHPACK_REQUIRE(a.total_entries() == b.total_entries(),
                   "comparing tables over different graphs");
  Diff d;
  const auto& sa = a.store_[a.cur_];
  const auto& sb = b.store_[b.cur_];
  for (std::size_t e = 0; e < sa.size(); ++e) {
    const bool ia = std::isinf(sa[e]), ib = std::isinf(sb[e]);
    if (ia != ib) {
      ++d.finite_mismatches;
    } else if (!ia) {
      d.max_abs = std::max(d.max_abs, std::abs(sa[e] - sb[e]));
    }
  }
  return d;
}

}  // namespace pathpack
