#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "fdfa/dfa.hpp"

// Graph routines over the transition structure of a Dfa. All traversals are
// iterative so that deep automata cannot exhaust the call stack.

namespace fdfa::graph {

/// States from which some state in `targets` is reachable (inclusive).
inline std::vector<bool> coreachable(const Dfa& d, const std::vector<bool>& targets) {
  const StateId n = d.num_states();
  std::vector<std::vector<StateId>> preds(n);
  for (StateId q = 0; q < n; ++q) {
    for (StateId t : d.row(q)) preds[t].push_back(q);
  }
  std::vector<bool> seen(targets);
  std::vector<StateId> stack;
  for (StateId q = 0; q < n; ++q) {
    if (seen[q]) stack.push_back(q);
  }
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (StateId p : preds[q]) {
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

struct Components {
  std::vector<StateId> component_of;  // kNoState for states outside the mask
  std::vector<bool> on_cycle;         // per state
};

/// Tarjan's strongly-connected components restricted to the states in
/// `mask`. A state is on a cycle iff its component has two or more states or
/// it has a self-loop inside the mask.
inline Components strongly_connected(const Dfa& d, const std::vector<bool>& mask) {
  const StateId n = d.num_states();
  const std::size_t k = d.alphabet_size();
  std::vector<StateId> index(n, kNoState), low(n, 0), comp(n, kNoState);
  std::vector<bool> on_stack(n, false);
  std::vector<StateId> stack;
  StateId counter = 0, ncomp = 0;
  std::vector<std::size_t> comp_size;

  struct Frame {
    StateId q;
    std::size_t edge;
  };
  std::vector<Frame> call;

  for (StateId root = 0; root < n; ++root) {
    if (!mask[root] || index[root] != kNoState) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < k) {
        StateId t = d.next(f.q, f.edge++);
        if (!mask[t]) continue;
        if (index[t] == kNoState) {
          index[t] = low[t] = counter++;
          stack.push_back(t);
          on_stack[t] = true;
          call.push_back({t, 0});
        } else if (on_stack[t]) {
          low[f.q] = std::min(low[f.q], index[t]);
        }
        continue;
      }
      StateId q = f.q;
      call.pop_back();
      if (!call.empty()) low[call.back().q] = std::min(low[call.back().q], low[q]);
      if (low[q] == index[q]) {
        std::size_t size = 0;
        StateId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = ncomp;
          ++size;
        } while (w != q);
        comp_size.push_back(size);
        ++ncomp;
      }
    }
  }

  std::vector<bool> cyc(n, false);
  for (StateId q = 0; q < n; ++q) {
    if (!mask[q]) continue;
    if (comp_size[comp[q]] >= 2) {
      cyc[q] = true;
      continue;
    }
    for (StateId t : d.row(q)) {
      if (t == q) cyc[q] = true;
    }
  }
  return Components{std::move(comp), std::move(cyc)};
}

/// Shortlex-least shortest word leading from `from` to a state satisfying
/// `target`, moving only through states in `allowed` (nullptr = all). When
/// `nonempty` is set the empty word is not considered even if `from` is a
/// target, which yields shortest cycle words.
inline std::optional<Word> shortest_word(const Dfa& d, StateId from, const std::function<bool(StateId)>& target,
                                         const std::vector<bool>* allowed = nullptr, bool nonempty = false) {
  if (!nonempty && target(from)) return Word{};
  const StateId n = d.num_states();
  std::vector<StateId> parent(n, kNoState);
  std::vector<std::size_t> via(n, 0);
  std::deque<StateId> queue;

  auto rebuild = [&](std::size_t last_symbol, StateId last_parent) {
    Word w(1, d.alphabet()[last_symbol]);
    for (StateId q = last_parent; q != from; q = parent[q]) w.push_back(d.alphabet()[via[q]]);
    std::reverse(w.begin(), w.end());
    return w;
  };

  // BFS over states; the start is treated as visited so that paths never
  // pass through it again (a shortest path never needs to).
  queue.push_back(from);
  std::vector<bool> visited(n, false);
  visited[from] = true;
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < d.alphabet_size(); ++c) {
      StateId t = d.next(q, c);
      if (allowed && !(*allowed)[t]) continue;
      if (target(t)) return rebuild(c, q);
      if (!visited[t]) {
        visited[t] = true;
        parent[t] = q;
        via[t] = c;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

}  // namespace fdfa::graph
