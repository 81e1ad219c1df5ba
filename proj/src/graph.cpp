#include "pathpack/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "pathpack/rng.hpp"

namespace pathpack {

namespace {

std::vector<std::uint32_t> offsets_from_counts(std::vector<std::uint32_t>& counts) {
  std::vector<std::uint32_t> off(counts.size() + 1, 0);
  for (std::size_t i = 0; i < counts.size(); ++i) off[i + 1] = off[i] + counts[i];
  return off;
}

}  // namespace

RootedDigraph::RootedDigraph(NodeId n, std::vector<NodeId> roots,
                             std::vector<std::pair<NodeId, NodeId>> edges,
                             std::vector<std::int64_t> source_ids) {
  PATHPACK_REQUIRE(n >= 0, "node count must be nonnegative");
  n_ = n;
  is_root_.assign(std::size_t(n), false);
  for (NodeId r : roots) {
    PATHPACK_REQUIRE(r >= 0 && r < n, "root id out of range");
    PATHPACK_REQUIRE(!is_root_[std::size_t(r)], "duplicate root id");
    is_root_[std::size_t(r)] = true;
  }
  roots_ = std::move(roots);
  std::sort(roots_.begin(), roots_.end());

  std::sort(edges.begin(), edges.end());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [a, b] = edges[e];
    PATHPACK_REQUIRE(a >= 0 && a < n && b >= 0 && b < n, "edge endpoint out of range");
    PATHPACK_REQUIRE(a != b, "self-loop");
    PATHPACK_REQUIRE(e == 0 || edges[e] != edges[e - 1], "duplicate edge");
    PATHPACK_REQUIRE(!is_root_[std::size_t(b)], "edge points into a root");
  }
  edges_ = std::move(edges);

  if (source_ids.empty()) {
    source_ids.resize(std::size_t(n));
    for (NodeId i = 0; i < n; ++i) source_ids[std::size_t(i)] = i;
  }
  PATHPACK_REQUIRE(source_ids.size() == std::size_t(n), "source id map size mismatch");
  source_ids_ = std::move(source_ids);

  std::vector<std::uint32_t> outc(std::size_t(n), 0), inc(std::size_t(n), 0);
  for (auto [a, b] : edges_) {
    ++outc[std::size_t(a)];
    ++inc[std::size_t(b)];
  }
  out_off_ = offsets_from_counts(outc);
  in_off_ = offsets_from_counts(inc);
  out_nbr_.resize(edges_.size());
  in_nbr_.resize(edges_.size());
  {
    std::vector<std::uint32_t> op(out_off_.begin(), out_off_.end() - 1);
    std::vector<std::uint32_t> ip(in_off_.begin(), in_off_.end() - 1);
    for (auto [a, b] : edges_) {
      out_nbr_[op[std::size_t(a)]++] = b;
      in_nbr_[ip[std::size_t(b)]++] = a;
    }
  }
  // in_nbr_ segments come out sorted because edges_ is sorted by (from, to)
  for (NodeId i = 0; i < n; ++i) {
    auto s = in_off_[std::size_t(i)], e = in_off_[std::size_t(i) + 1];
    std::sort(in_nbr_.begin() + s, in_nbr_.begin() + e);
  }

  // undirected / root / non-root views
  std::vector<std::uint32_t> undc(std::size_t(n), 0), rnc(std::size_t(n), 0),
      vnc(std::size_t(n), 0);
  std::vector<NodeId> merged;
  und_nbr_.clear();
  for (NodeId i = 0; i < n; ++i) {
    auto o = out_neighbors(i);
    auto in = view(in_off_, in_nbr_, i);
    merged.clear();
    std::set_union(o.begin(), o.end(), in.begin(), in.end(), std::back_inserter(merged));
    undc[std::size_t(i)] = std::uint32_t(merged.size());
    for (NodeId j : merged) {
      und_nbr_.push_back(j);
      if (is_root_[std::size_t(j)]) {
        ++rnc[std::size_t(i)];
      } else {
        ++vnc[std::size_t(i)];
      }
    }
  }
  und_off_ = offsets_from_counts(undc);
  rn_off_ = offsets_from_counts(rnc);
  vn_off_ = offsets_from_counts(vnc);
  rn_nbr_.resize(rn_off_.back());
  vn_nbr_.resize(vn_off_.back());
  {
    std::vector<std::uint32_t> rp(rn_off_.begin(), rn_off_.end() - 1);
    std::vector<std::uint32_t> vp(vn_off_.begin(), vn_off_.end() - 1);
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j : neighbors(i)) {
        if (is_root_[std::size_t(j)]) {
          rn_nbr_[rp[std::size_t(i)]++] = j;
        } else {
          vn_nbr_[vp[std::size_t(i)]++] = j;
        }
      }
    }
  }

  for (NodeId i = 0; i < n; ++i) {
    PATHPACK_REQUIRE(degree(i) > 0, "isolated node survived construction");
  }
  // A root's neighborhood is exactly its out-neighborhood into non-roots.
  for (NodeId u : roots_) {
    PATHPACK_REQUIRE(in_off_[std::size_t(u) + 1] == in_off_[std::size_t(u)],
                     "root has an incoming edge");
    PATHPACK_REQUIRE(rn_off_[std::size_t(u) + 1] == rn_off_[std::size_t(u)],
                     "root adjacent to a root");
  }
}

int RootedDigraph::max_degree() const {
  int d = 0;
  for (NodeId i = 0; i < n_; ++i) d = std::max(d, degree(i));
  return d;
}

std::ptrdiff_t RootedDigraph::edge_index(NodeId from, NodeId to) const {
  if (from < 0 || from >= n_) return -1;
  auto s = out_off_[std::size_t(from)], e = out_off_[std::size_t(from) + 1];
  auto it = std::lower_bound(out_nbr_.begin() + s, out_nbr_.begin() + e, to);
  if (it == out_nbr_.begin() + e || *it != to) return -1;
  return it - out_nbr_.begin();
}

namespace {

// Keeps only touched nodes, relabels densely ascending by old id.
RootedDigraph compact_and_build(NodeId n, const std::vector<bool>& is_root,
                                const std::vector<std::pair<NodeId, NodeId>>& edges,
                                const std::vector<std::int64_t>& old_labels) {
  std::vector<bool> touched(std::size_t(n), false);
  for (auto [a, b] : edges) touched[std::size_t(a)] = touched[std::size_t(b)] = true;
  std::vector<NodeId> remap(std::size_t(n), kNoNode);
  std::vector<std::int64_t> source_ids;
  std::vector<NodeId> roots;
  NodeId next = 0;
  for (NodeId i = 0; i < n; ++i) {
    if (!touched[std::size_t(i)]) continue;
    remap[std::size_t(i)] = next++;
    source_ids.push_back(old_labels.empty() ? std::int64_t(i)
                                            : old_labels[std::size_t(i)]);
    if (is_root[std::size_t(i)]) roots.push_back(remap[std::size_t(i)]);
  }
  std::vector<std::pair<NodeId, NodeId>> dense;
  dense.reserve(edges.size());
  for (auto [a, b] : edges) {
    dense.emplace_back(remap[std::size_t(a)], remap[std::size_t(b)]);
  }
  return RootedDigraph(next, std::move(roots), std::move(dense), std::move(source_ids));
}

}  // namespace

RootedDigraph generate_random_graph(NodeId n, double root_fraction, double c,
                                    std::uint64_t seed) {
  if (n < 2) throw InputError("generate: n must be at least 2");
  if (!(root_fraction > 0.0 && root_fraction < 1.0)) {
    throw InputError("generate: root fraction must lie in (0, 1)");
  }
  if (!(c > 0.0)) throw InputError("generate: c must be positive");
  const double p = c / double(n);
  if (p > 1.0) throw InputError("generate: c/n exceeds 1");

  Rng rng(seed);
  std::vector<bool> is_root(std::size_t(n), false);
  {
    auto r = NodeId(std::floor(root_fraction * double(n)));
    std::vector<NodeId> ids(std::size_t(n));
    for (NodeId i = 0; i < n; ++i) ids[std::size_t(i)] = i;
    for (NodeId k = 0; k < r; ++k) {
      std::swap(ids[std::size_t(k)],
                ids[std::size_t(k) + rng.below(std::uint32_t(n - k))]);
      is_root[std::size_t(ids[std::size_t(k)])] = true;
    }
  }

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId from = 0; from < n; ++from) {
    for (NodeId to = 0; to < n; ++to) {
      if (to == from || is_root[std::size_t(to)]) continue;
      if (rng.bernoulli(p)) edges.emplace_back(from, to);
    }
  }
  return compact_and_build(n, is_root, edges, {});
}

LoadedGraph load_edge_list(std::istream& in, const RootSpec& spec) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    std::int64_t a = 0, b = 0;
    if (!(ls >> a >> b)) throw ParseError(lineno, "expected 'src dst'");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
    if (a < 0 || b < 0) throw ParseError(lineno, "negative node id");
    raw.emplace_back(a, b);
  }

  LoadedGraph out;

  // Dense ids over every mentioned node, ascending by original label.
  std::map<std::int64_t, NodeId> ids;
  for (auto [a, b] : raw) {
    ids.emplace(a, 0);
    ids.emplace(b, 0);
  }
  std::vector<std::int64_t> labels;
  labels.reserve(ids.size());
  for (auto& [label, id] : ids) {
    id = NodeId(labels.size());
    labels.push_back(label);
  }
  const NodeId n = NodeId(labels.size());

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(raw.size());
  for (auto [a, b] : raw) {
    if (a == b) {
      ++out.dropped_self_loops;
      continue;
    }
    edges.emplace_back(ids.at(a), ids.at(b));
  }
  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  out.dropped_duplicates = std::size_t(edges.end() - last);
  edges.erase(last, edges.end());

  std::vector<bool> is_root(std::size_t(n), false);
  if (spec.explicit_roots) {
    for (std::int64_t r : *spec.explicit_roots) {
      auto it = ids.find(r);
      if (it == ids.end()) {
        throw InputError("root id " + std::to_string(r) + " not present in edge list");
      }
      is_root[std::size_t(it->second)] = true;
    }
  } else {
    if (!(spec.fraction > 0.0 && spec.fraction < 1.0)) {
      throw InputError("root fraction must lie in (0, 1)");
    }
    Rng rng(spec.seed);
    auto r = NodeId(std::floor(spec.fraction * double(n)));
    std::vector<NodeId> order(std::size_t(n));
    for (NodeId i = 0; i < n; ++i) order[std::size_t(i)] = i;
    for (NodeId k = 0; k < r; ++k) {
      std::swap(order[std::size_t(k)],
                order[std::size_t(k) + rng.below(std::uint32_t(n - k))]);
      is_root[std::size_t(order[std::size_t(k)])] = true;
    }
  }

  std::vector<std::pair<NodeId, NodeId>> kept;
  kept.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (is_root[std::size_t(b)]) {
      ++out.dropped_edges_into_roots;
    } else {
      kept.push_back({a, b});
    }
  }

  out.graph = compact_and_build(n, is_root, kept, labels);
  out.dropped_isolated_nodes = std::size_t(n) - std::size_t(out.graph.node_count());
  return out;
}

void write_edge_list(const RootedDigraph& g, std::ostream& out) {
  out << "# src dst\n";
  for (auto [a, b] : g.edges()) {
    out << g.source_id(a) << ' ' << g.source_id(b) << '\n';
  }
}

void write_root_list(const RootedDigraph& g, std::ostream& out) {
  for (NodeId u : g.roots()) out << g.source_id(u) << '\n';
}

std::vector<std::int64_t> read_root_list(std::istream& in) {
  std::vector<std::int64_t> roots;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    std::int64_t r = 0;
    if (!(ls >> r)) throw ParseError(lineno, "expected a node id");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
    roots.push_back(r);
  }
  return roots;
}

}  // namespace pathpack
