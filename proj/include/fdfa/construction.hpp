#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fdfa/dfa.hpp"

namespace fdfa {

/// Parameters of the two-copy construction: states are pairs (w, i) with
/// |w| ≤ max_length and i ∈ {0, 1}; a run that outgrows max_length restarts
/// at (ε, 0) or (ε, 1) depending on the first symbol of the overlong word.
struct ConstructionSpec {
  std::vector<Word> words;  // shortlex, deduplicated
  std::size_t max_length = 0;
  std::string alphabet;

  /// Copy that a word of length max_length + 1 restarts in.
  int restart_copy(const Word& overlong) const { return overlong.front() == alphabet.front() ? 0 : 1; }
};

struct ConstructedPair {
  ConstructionSpec spec;
  Dfa first;   // starts at (ε, 0)
  Dfa second;  // starts at (ε, 1)
  /// Display label "w,i" of every state (w rendered with `@` for ε).
  std::vector<std::string> labels;
};

/// Two automata with empty finite parts, identical except for the start
/// state, whose languages differ exactly on `words`. Requires |Σ| ≥ 2.
///
/// State (w, i) has id i·|Σ_n| + rank(w), rank being the shortlex index
/// among words of length ≤ n. Only copy 1 accepts: (w, 1) for w ∈ words.
inline ConstructedPair construct_pair(std::vector<Word> words, std::string alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  if (alphabet.size() < 2) throw Error(ErrorCode::kAlphabetTooSmall, "need at least two symbols");
  for (const auto& w : words) {
    for (char c : w) {
      if (alphabet.find(c) == std::string::npos) throw Error(ErrorCode::kUnknownSymbol, std::string("'") + c + "'");
    }
  }
  sort_shortlex(words);

  ConstructionSpec spec;
  spec.alphabet = alphabet;
  for (const auto& w : words) spec.max_length = std::max(spec.max_length, w.size());
  spec.words = std::move(words);

  // All words of length ≤ n in shortlex order.
  std::vector<Word> short_words{Word{}};
  for (std::size_t i = 0; i < short_words.size(); ++i) {
    if (short_words[i].size() == spec.max_length) continue;
    for (char c : alphabet) short_words.push_back(short_words[i] + c);
  }
  std::map<Word, StateId> rank;
  for (std::size_t i = 0; i < short_words.size(); ++i) rank[short_words[i]] = static_cast<StateId>(i);

  const auto per_copy = static_cast<StateId>(short_words.size());
  const StateId n = 2 * per_copy;
  const std::size_t k = alphabet.size();
  auto id = [per_copy](StateId word_rank, int copy) { return static_cast<StateId>(copy) * per_copy + word_rank; };

  std::vector<bool> acc(n, false);
  std::vector<StateId> trans(static_cast<std::size_t>(n) * k);
  std::vector<std::string> labels(n);
  for (int copy = 0; copy < 2; ++copy) {
    for (StateId r = 0; r < per_copy; ++r) {
      const Word& w = short_words[r];
      const StateId s = id(r, copy);
      labels[s] = format_word(w) + "," + std::to_string(copy);
      for (std::size_t c = 0; c < k; ++c) {
        Word wc = w + alphabet[c];
        trans[s * k + c] = w.size() < spec.max_length ? id(rank.at(wc), copy) : id(0, spec.restart_copy(wc));
      }
    }
  }
  for (const auto& w : spec.words) acc[id(rank.at(w), 1)] = true;

  Dfa first(alphabet, n, id(0, 0), acc, trans);
  Dfa second(alphabet, n, id(0, 1), std::move(acc), std::move(trans));
  return ConstructedPair{std::move(spec), std::move(first), std::move(second), std::move(labels)};
}

}  // namespace fdfa
