#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "fdfa/dfa.hpp"

namespace fdfa {

/// Blocks of language-equivalent states. Block ids are canonical: blocks are
/// numbered in order of their smallest member.
struct StatePartition {
  std::vector<StateId> block_of;
  StateId block_count = 0;

  bool same_block(StateId p, StateId q) const { return block_of[p] == block_of[q]; }
  bool operator==(const StatePartition&) const = default;
};

/// Renumbers arbitrary labels to canonical block ids (first occurrence order).
inline StatePartition canonical_partition(const std::vector<StateId>& labels) {
  std::map<StateId, StateId> remap;
  StatePartition part;
  part.block_of.resize(labels.size());
  for (std::size_t q = 0; q < labels.size(); ++q) {
    auto [it, inserted] = remap.emplace(labels[q], static_cast<StateId>(remap.size()));
    part.block_of[q] = it->second;
  }
  part.block_count = static_cast<StateId>(remap.size());
  return part;
}

/// Moore's partition refinement over all states (reachable or not).
inline StatePartition language_partition(const Dfa& d) {
  const StateId n = d.num_states();
  const std::size_t k = d.alphabet_size();
  std::vector<StateId> block(n);
  for (StateId q = 0; q < n; ++q) block[q] = d.is_accepting(q) ? 1 : 0;
  StatePartition part = canonical_partition(block);

  while (true) {
    std::map<std::vector<StateId>, StateId> sig_ids;
    std::vector<StateId> next(n);
    std::vector<StateId> sig(k + 1);
    for (StateId q = 0; q < n; ++q) {
      sig[0] = part.block_of[q];
      for (std::size_t c = 0; c < k; ++c) sig[c + 1] = part.block_of[d.next(q, c)];
      auto [it, inserted] = sig_ids.emplace(sig, static_cast<StateId>(sig_ids.size()));
      next[q] = it->second;
    }
    StatePartition refined = canonical_partition(next);
    if (refined.block_count == part.block_count) return refined;
    part = std::move(refined);
  }
}

struct MinimizeResult {
  Dfa dfa;
  StatePartition partition;
  /// quotient[q] = state of `dfa` representing q, kNoState if q is unreachable.
  std::vector<StateId> quotient;
};

/// Language-preserving quotient by the Moore partition. Reachable blocks keep
/// the order of their smallest members, so a machine that is already
/// minimized comes back unchanged.
inline MinimizeResult minimize_with_partition(const Dfa& d) {
  StatePartition part = language_partition(d);
  const std::size_t k = d.alphabet_size();

  std::vector<StateId> member(part.block_count, kNoState);
  for (StateId q = d.num_states(); q-- > 0;) member[part.block_of[q]] = q;

  std::vector<bool> reached(part.block_count, false);
  std::vector<StateId> stack{part.block_of[d.start()]};
  reached[stack.back()] = true;
  while (!stack.empty()) {
    StateId blk = stack.back();
    stack.pop_back();
    for (std::size_t c = 0; c < k; ++c) {
      StateId to = part.block_of[d.next(member[blk], c)];
      if (!reached[to]) {
        reached[to] = true;
        stack.push_back(to);
      }
    }
  }
  std::vector<StateId> order_of_block(part.block_count, kNoState);
  std::vector<StateId> blocks_in_order;
  for (StateId blk = 0; blk < part.block_count; ++blk) {
    if (!reached[blk]) continue;
    order_of_block[blk] = static_cast<StateId>(blocks_in_order.size());
    blocks_in_order.push_back(blk);
  }

  const auto m = static_cast<StateId>(blocks_in_order.size());
  std::vector<bool> acc(m);
  std::vector<StateId> trans(static_cast<std::size_t>(m) * k);
  for (StateId s = 0; s < m; ++s) {
    StateId rep = member[blocks_in_order[s]];
    acc[s] = d.is_accepting(rep);
    for (std::size_t c = 0; c < k; ++c) trans[s * k + c] = order_of_block[part.block_of[d.next(rep, c)]];
  }
  std::vector<StateId> quotient(d.num_states());
  for (StateId q = 0; q < d.num_states(); ++q) quotient[q] = order_of_block[part.block_of[q]];
  return MinimizeResult{Dfa(d.alphabet(), m, order_of_block[part.block_of[d.start()]], std::move(acc), std::move(trans)), std::move(part),
                        std::move(quotient)};
}

inline Dfa minimize(const Dfa& d) { return minimize_with_partition(d).dfa; }

inline bool is_minimized(const Dfa& d) { return minimize_with_partition(d).dfa.num_states() == d.num_states(); }

/// Shortest word t, shortlex-least among the shortest, with
/// accepts-from-p(t) ≠ accepts-from-q(t); nullopt iff L(p) = L(q).
///
/// Breadth-first search over state pairs in symbol order visits pairs in
/// shortlex order of their first word, so the first differing pair found
/// carries the answer.
inline std::optional<Word> distinguishing_word(const Dfa& d, StateId p, StateId q) {
  d.check_state(p);
  d.check_state(q);
  const std::size_t n = d.num_states();
  const std::size_t k = d.alphabet_size();
  auto key = [n](StateId a, StateId b) { return a * n + b; };
  std::vector<std::size_t> parent(n * n, static_cast<std::size_t>(-1));
  std::vector<std::size_t> via(n * n, 0);
  std::vector<bool> seen(n * n, false);
  std::deque<std::pair<StateId, StateId>> queue{{p, q}};
  seen[key(p, q)] = true;
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    if (d.is_accepting(a) != d.is_accepting(b)) {
      Word w;
      for (std::size_t cur = key(a, b); cur != key(p, q); cur = parent[cur]) w.push_back(d.alphabet()[via[cur]]);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t c = 0; c < k; ++c) {
      StateId ta = d.next(a, c), tb = d.next(b, c);
      if (!seen[key(ta, tb)]) {
        seen[key(ta, tb)] = true;
        parent[key(ta, tb)] = key(a, b);
        via[key(ta, tb)] = c;
        queue.emplace_back(ta, tb);
      }
    }
  }
  return std::nullopt;
}

}  // namespace fdfa
