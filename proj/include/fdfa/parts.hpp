#pragma once

#include <vector>

#include "fdfa/dfa.hpp"
#include "fdfa/graph.hpp"

namespace fdfa {

/// Split of the states into the finite part (reached by finitely many words)
/// and the infinite part (reached by infinitely many).
struct PartsPartition {
  std::vector<bool> infinite;

  bool in_infinite_part(StateId q) const { return infinite[q]; }
  bool in_finite_part(StateId q) const { return !infinite[q]; }

  std::vector<StateId> finite_part() const { return collect(false); }
  std::vector<StateId> infinite_part() const { return collect(true); }

  bool operator==(const PartsPartition&) const = default;

 private:
  std::vector<StateId> collect(bool which) const {
    std::vector<StateId> out;
    for (StateId q = 0; q < infinite.size(); ++q) {
      if (infinite[q] == which) out.push_back(q);
    }
    return out;
  }
};

/// Infinite part = states reachable from a state lying on a cycle. Only
/// states reachable from the start are considered; cycles are found as
/// non-trivial strongly connected components or self-loops.
inline PartsPartition compute_parts(const Dfa& d) {
  auto reach = reachable_from(d, d.start());
  auto comps = graph::strongly_connected(d, reach);
  std::vector<bool> infinite(d.num_states(), false);
  std::vector<StateId> stack;
  for (StateId q = 0; q < d.num_states(); ++q) {
    if (comps.on_cycle[q]) {
      infinite[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (StateId t : d.row(q)) {
      if (!infinite[t]) {
        infinite[t] = true;
        stack.push_back(t);
      }
    }
  }
  return PartsPartition{std::move(infinite)};
}

/// Same partition from the word-counting characterization: q is reached by
/// infinitely many words iff it is reached by some word w with
/// |Q| ≤ |w| < 2|Q|. Computed by layered reachability, independently of
/// any cycle detection.
inline PartsPartition compute_parts_by_counting(const Dfa& d) {
  const StateId n = d.num_states();
  std::vector<bool> layer(n, false), infinite(n, false);
  layer[d.start()] = true;
  for (StateId depth = 0; depth < 2 * n; ++depth) {
    if (depth >= n) {
      for (StateId q = 0; q < n; ++q) {
        if (layer[q]) infinite[q] = true;
      }
    }
    std::vector<bool> next(n, false);
    for (StateId q = 0; q < n; ++q) {
      if (!layer[q]) continue;
      for (StateId t : d.row(q)) next[t] = true;
    }
    layer.swap(next);
  }
  return PartsPartition{std::move(infinite)};
}

}  // namespace fdfa
