#pragma once

#include <limits>

#include "pathpack/graph.hpp"

namespace pathpack {

// Running record of the three smallest (value, key) pairs over a keyed set,
// with distinct keys, supporting "min over the set minus up to two named
// keys". Three entries are exactly enough: an exclusion query can invalidate
// at most two of them. Missing entries behave as +infinity, so querying an
// empty record yields +infinity (the empty-min convention).
class ThreeMin {
 public:
  void clear() { count_ = 0; }

  // Precondition: each key is added at most once between clears.
  void add(double value, NodeId key) {
    if (count_ < 3) {
      v_[count_] = value;
      k_[count_] = key;
      ++count_;
      bubble();
    } else if (value < v_[2]) {
      v_[2] = value;
      k_[2] = key;
      bubble();
    }
  }

  double min_excluding(NodeId a = kNoNode, NodeId b = kNoNode) const {
    for (int t = 0; t < count_; ++t) {
      if (k_[t] != a && k_[t] != b) return v_[t];
    }
    return std::numeric_limits<double>::infinity();
  }

  int size() const { return count_; }
  double value(int t) const { return v_[t]; }
  NodeId key(int t) const { return k_[t]; }

 private:
  void bubble() {
    for (int t = count_ - 1; t > 0 && v_[t] < v_[t - 1]; --t) {
      std::swap(v_[t], v_[t - 1]);
      std::swap(k_[t], k_[t - 1]);
    }
  }
  double v_[3];
  NodeId k_[3];
  int count_ = 0;
};

// min over (l from `first`, k from `second`) of value(l) + value(k), subject
// to key(l) != key(k) and neither equal to `exclude`. Exact as long as both
// records were fed the same underlying key set: if an optimal pair used a key
// outside a record's top three, a recorded key at least as small and distinct
// from the other side's pick is always available to swap in.
inline double best_pair_sum(const ThreeMin& first, const ThreeMin& second,
                            NodeId exclude = kNoNode) {
  double best = std::numeric_limits<double>::infinity();
  for (int a = 0; a < first.size(); ++a) {
    if (first.key(a) == exclude) continue;
    for (int b = 0; b < second.size(); ++b) {
      if (second.key(b) == exclude || second.key(b) == first.key(a)) continue;
      double s = first.value(a) + second.value(b);
      if (s < best) best = s;
    }
  }
  return best;
}

}  // namespace pathpack
