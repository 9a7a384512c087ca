#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fdfa/dfa.hpp"
#include "fdfa/graph.hpp"

namespace fdfa {

/// u·vᵏ·x is accepted for every k ≥ 0, with v non-empty.
struct Lasso {
  Word prefix;
  Word pump;
  Word suffix;

  Word instance(std::size_t k) const {
    Word w = prefix;
    for (std::size_t i = 0; i < k; ++i) w += pump;
    return w + suffix;
  }

  bool operator==(const Lasso&) const = default;
};

enum class LanguageKind { kEmpty, kFinite, kInfinite };

inline const char* to_string(LanguageKind kind) {
  switch (kind) {
    case LanguageKind::kEmpty: return "empty";
    case LanguageKind::kFinite: return "finite";
    case LanguageKind::kInfinite: return "infinite";
  }
  return "?";
}

struct LanguageClassification {
  LanguageKind kind;
  std::optional<Lasso> witness;  // present iff kind == kInfinite
};

class InfiniteLanguageError : public Error {
 public:
  explicit InfiniteLanguageError(Lasso witness)
      : Error(ErrorCode::kInfiniteLanguage, "pumpable lasso " + format_word(witness.prefix) + " (" +
                                                format_word(witness.pump) + ")* " + format_word(witness.suffix)),
        witness_(std::move(witness)) {}

  const Lasso& witness() const noexcept { return witness_; }

 private:
  Lasso witness_;
};

namespace detail {

/// Reachable states that can still reach an accepting state.
inline std::vector<bool> useful_states(const Dfa& d) {
  auto reach = reachable_from(d, d.start());
  auto co = graph::coreachable(d, d.accepting());
  std::vector<bool> useful(d.num_states());
  for (StateId q = 0; q < d.num_states(); ++q) useful[q] = reach[q] && co[q];
  return useful;
}

}  // namespace detail

/// EMPTY when no accepting state is reachable, INFINITE when a cycle lies
/// among the useful states (reachable and co-reachable), FINITE otherwise.
///
/// The witness pumps the smallest-id useful state on a cycle: u is the
/// shortest word reaching it, v its shortest cycle word inside the useful
/// subgraph and x the shortest word from it to acceptance.
inline LanguageClassification classify_language(const Dfa& d) {
  auto useful = detail::useful_states(d);
  if (!useful[d.start()]) return {LanguageKind::kEmpty, std::nullopt};

  auto comps = graph::strongly_connected(d, useful);
  for (StateId c = 0; c < d.num_states(); ++c) {
    if (!useful[c] || !comps.on_cycle[c]) continue;
    auto prefix = graph::shortest_word(d, d.start(), [c](StateId q) { return q == c; });
    auto pump = graph::shortest_word(d, c, [c](StateId q) { return q == c; }, &useful, /*nonempty=*/true);
    auto suffix = graph::shortest_word(d, c, [&d](StateId q) { return d.is_accepting(q); });
    return {LanguageKind::kInfinite, Lasso{*prefix, *pump, *suffix}};
  }
  return {LanguageKind::kFinite, std::nullopt};
}

/// All accepted words, shortlex-sorted. Each has length < |Q| because a
/// longer accepting run repeats a state and would pump.
inline std::vector<Word> enumerate_finite_language(const Dfa& d) {
  auto cls = classify_language(d);
  if (cls.kind == LanguageKind::kInfinite) throw InfiniteLanguageError(*cls.witness);
  std::vector<Word> words;
  if (cls.kind == LanguageKind::kEmpty) return words;

  auto useful = detail::useful_states(d);
  // The useful subgraph is acyclic here, so a plain depth-first walk over
  // words terminates.
  struct Item {
    StateId q;
    Word w;
  };
  std::vector<Item> stack{{d.start(), Word{}}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    if (d.is_accepting(it.q)) words.push_back(it.w);
    for (std::size_t c = 0; c < d.alphabet_size(); ++c) {
      StateId t = d.next(it.q, c);
      if (useful[t]) stack.push_back({t, it.w + d.alphabet()[c]});
    }
  }
  sort_shortlex(words);
  return words;
}

/// L(a) △ L(b), either as a complete finite word list or as a lasso whose
/// every instance lies in exactly one of the two languages.
struct DiffResult {
  enum class Kind { kFinite, kInfinite };
  Kind kind = Kind::kFinite;
  std::vector<Word> words;
  std::optional<Lasso> witness;

  bool finite() const noexcept { return kind == Kind::kFinite; }
};

inline DiffResult diff_of_product(const Dfa& product) {
  auto cls = classify_language(product);
  if (cls.kind == LanguageKind::kInfinite) return {DiffResult::Kind::kInfinite, {}, cls.witness};
  return {DiffResult::Kind::kFinite, enumerate_finite_language(product), std::nullopt};
}

inline DiffResult symmetric_difference(const Dfa& a, const Dfa& b) {
  return diff_of_product(product_xor(a, b).dfa);
}

}  // namespace fdfa
