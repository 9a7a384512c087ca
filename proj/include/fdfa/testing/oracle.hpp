#pragma once

// Brute-force ground truth for tests. Nothing here builds products, detects
// cycles or minimizes: languages are compared by running every word.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdfa/dfa.hpp"
#include "fdfa/language.hpp"

namespace fdfa::testing {

inline bool simulate(const Dfa& d, const Word& w) {
  StateId q = d.start();
  for (char c : w) q = d.next(q, *d.symbol_index(c));
  return d.is_accepting(q);
}

/// Every word of length ≤ bound, shortlex.
inline std::vector<Word> all_words(const std::string& alphabet, std::size_t bound) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == bound) continue;
    for (char c : alphabet) out.push_back(out[i] + c);
  }
  return out;
}

struct MembershipTable {
  std::size_t bound = 0;
  std::vector<std::pair<Word, bool>> entries;  // shortlex
};

inline MembershipTable membership_table(const Dfa& d, std::size_t bound) {
  MembershipTable t{bound, {}};
  for (auto& w : all_words(d.alphabet(), bound)) t.entries.emplace_back(w, simulate(d, w));
  return t;
}

/// Accepted words of length ≤ bound.
inline std::vector<Word> accepted_words(const Dfa& d, std::size_t bound) {
  std::vector<Word> out;
  for (auto& [w, in] : membership_table(d, bound).entries) {
    if (in) out.push_back(w);
  }
  return out;
}

/// Words of length ≤ bound on which a and b disagree, shortlex. Walks the
/// word tree depth-first carrying both current states, which is the same as
/// simulating each word separately but shares prefixes.
inline std::vector<Word> oracle_diff(const Dfa& a, const Dfa& b, std::size_t bound) {
  require_same_alphabet(a, b);
  std::vector<Word> out;
  struct Item {
    StateId p, q;
    Word w;
  };
  std::vector<Item> stack{{a.start(), b.start(), Word{}}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    if (a.is_accepting(it.p) != b.is_accepting(it.q)) out.push_back(it.w);
    if (it.w.size() == bound) continue;
    for (std::size_t c = 0; c < a.alphabet_size(); ++c) {
      stack.push_back({a.next(it.p, c), b.next(it.q, c), it.w + a.alphabet()[c]});
    }
  }
  sort_shortlex(out);
  return out;
}

/// Same as oracle_diff for two start states of one automaton.
inline std::vector<Word> oracle_state_diff(const Dfa& d, StateId p, StateId q, std::size_t bound) {
  return oracle_diff(with_start(d, p), with_start(d, q), bound);
}

/// Words of length ≤ bound leading from the start to `target`.
inline std::vector<Word> words_reaching(const Dfa& d, StateId target, std::size_t bound) {
  std::vector<Word> out;
  for (auto& w : all_words(d.alphabet(), bound)) {
    StateId q = d.start();
    for (char c : w) q = d.next(q, *d.symbol_index(c));
    if (q == target) out.push_back(w);
  }
  return out;
}

inline bool oracle_all_reachable(const Dfa& d) {
  std::vector<bool> seen(d.num_states(), false);
  for (auto& w : all_words(d.alphabet(), d.num_states())) {
    StateId q = d.start();
    for (char c : w) q = d.next(q, *d.symbol_index(c));
    seen[q] = true;
  }
  for (bool s : seen) {
    if (!s) return false;
  }
  return true;
}

/// Every complete automaton with exactly n states over `alphabet`, any start,
/// any accepting set, keeping those whose states are all reachable. Order:
/// transition tables in odometer order (last entry fastest), then start,
/// then accepting bitmask.
inline std::vector<Dfa> enumerate_all_dfas(StateId n, const std::string& alphabet) {
  const std::size_t k = alphabet.size();
  const std::size_t cells = static_cast<std::size_t>(n) * k;
  std::vector<Dfa> out;
  std::vector<StateId> table(cells, 0);
  while (true) {
    for (StateId start = 0; start < n; ++start) {
      Dfa probe(alphabet, n, start, std::vector<bool>(n, false), table);
      if (!oracle_all_reachable(probe)) continue;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<bool> acc(n);
        for (StateId q = 0; q < n; ++q) acc[q] = (mask >> q) & 1u;
        out.emplace_back(alphabet, n, start, std::move(acc), table);
      }
    }
    std::size_t i = cells;
    while (i > 0 && ++table[i - 1] == n) table[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// Finite difference by counting lengths. The product has at most
/// N = |Qa|·|Qb| pair states, so L(a) △ L(b) is infinite iff it contains a
/// word with length in [N, 2N). Pairs reachable by exactly L symbols are
/// tracked layer by layer; no cycle or component analysis is involved.
inline bool oracle_finitely_different(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  const std::size_t nb = b.num_states();
  const std::size_t n = a.num_states() * nb;
  std::vector<char> layer(n, 0), next(n, 0);
  layer[a.start() * nb + b.start()] = 1;
  for (std::size_t len = 0; len < 2 * n; ++len) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!layer[i]) continue;
      const auto p = static_cast<StateId>(i / nb), q = static_cast<StateId>(i % nb);
      if (len >= n && a.is_accepting(p) != b.is_accepting(q)) return false;
      for (std::size_t c = 0; c < a.alphabet_size(); ++c) next[a.next(p, c) * nb + b.next(q, c)] = 1;
    }
    layer.swap(next);
  }
  return true;
}

inline bool oracle_states_finitely_different(const Dfa& d, StateId p, StateId q) {
  return oracle_finitely_different(with_start(d, p), with_start(d, q));
}

/// f-minimality by definition: no automaton with fewer states recognizes a
/// language finitely different from L(d). Exhaustive, so only practical for
/// small machines over small alphabets.
inline bool oracle_is_f_minimal(const Dfa& d) {
  for (StateId k = 1; k < d.num_states(); ++k) {
    for (const auto& m : enumerate_all_dfas(k, d.alphabet())) {
      if (oracle_finitely_different(d, m)) return false;
    }
  }
  return true;
}

/// Cached variant for suites that query many machines of the same alphabet.
class SmallDfaCatalog {
 public:
  explicit SmallDfaCatalog(std::string alphabet) : alphabet_(std::move(alphabet)) {}

  const std::vector<Dfa>& of_size(StateId n) {
    if (by_size_.size() <= n) by_size_.resize(n + 1);
    if (!by_size_[n]) by_size_[n] = enumerate_all_dfas(n, alphabet_);
    return *by_size_[n];
  }

  bool is_f_minimal(const Dfa& d) {
    for (StateId k = 1; k < d.num_states(); ++k) {
      for (const auto& m : of_size(k)) {
        if (oracle_finitely_different(d, m)) return false;
      }
    }
    return true;
  }

 private:
  std::string alphabet_;
  std::vector<std::optional<std::vector<Dfa>>> by_size_;
};

}  // namespace fdfa::testing
