#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdfa/error.hpp"

namespace fdfa {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

/// A word is a plain string of alphabet symbols; the empty string is ε.
using Word = std::string;

inline constexpr char kEpsilonToken = '@';

inline bool is_valid_symbol(char c) {
  return c > ' ' && c < 127 && c != '#' && c != kEpsilonToken;
}

/// Textual form of a word: `@` stands for ε.
inline std::string format_word(std::string_view w) {
  return w.empty() ? std::string(1, kEpsilonToken) : std::string(w);
}

/// Shortlex: shorter first, then lexicographic by symbol order. Alphabets are
/// kept sorted by character code, so plain string comparison breaks ties.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline void sort_shortlex(std::vector<Word>& words) {
  std::sort(words.begin(), words.end(), shortlex_less);
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

/// Complete deterministic automaton over a sorted single-character alphabet.
///
/// The transition table is total by construction. Reachability of every
/// state is not a type invariant: parse_dfa() and every library operation
/// returning an automaton trim unreachable states, but intermediate values
/// such as disjoint_union() deliberately keep them.
class Dfa {
 public:
  Dfa(std::string alphabet, StateId num_states, StateId start, std::vector<bool> accepting,
      std::vector<StateId> transitions)
      : alphabet_(std::move(alphabet)),
        num_states_(num_states),
        start_(start),
        accepting_(std::move(accepting)),
        transitions_(std::move(transitions)) {
    if (alphabet_.empty()) throw Error(ErrorCode::kEmptyAlphabet, "");
    symbol_index_.fill(-1);
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      char c = alphabet_[i];
      if (!is_valid_symbol(c)) {
        throw Error(ErrorCode::kBadAlphabet, std::string("symbol '") + c + "' is not allowed");
      }
      if (i > 0 && alphabet_[i - 1] >= c) {
        throw Error(ErrorCode::kBadAlphabet, "symbols must be distinct and sorted");
      }
      symbol_index_[static_cast<unsigned char>(c)] = static_cast<std::int16_t>(i);
    }
    if (num_states_ == 0) throw Error(ErrorCode::kStateOutOfRange, "an automaton needs at least one state");
    if (start_ >= num_states_) throw Error(ErrorCode::kStateOutOfRange, "start " + std::to_string(start_));
    if (accepting_.size() != num_states_) {
      throw Error(ErrorCode::kStateOutOfRange, "acceptance vector has wrong size");
    }
    if (transitions_.size() != static_cast<std::size_t>(num_states_) * alphabet_.size()) {
      throw Error(ErrorCode::kIncompleteTable, "");
    }
    for (StateId t : transitions_) {
      if (t >= num_states_) throw Error(ErrorCode::kStateOutOfRange, "transition target " + std::to_string(t));
    }
  }

  const std::string& alphabet() const noexcept { return alphabet_; }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  StateId num_states() const noexcept { return num_states_; }
  StateId start() const noexcept { return start_; }
  bool is_accepting(StateId q) const { return accepting_[q]; }
  const std::vector<bool>& accepting() const noexcept { return accepting_; }
  const std::vector<StateId>& transitions() const noexcept { return transitions_; }

  std::optional<std::size_t> symbol_index(char c) const {
    auto u = static_cast<unsigned char>(c);
    if (u >= symbol_index_.size() || symbol_index_[u] < 0) return std::nullopt;
    return static_cast<std::size_t>(symbol_index_[u]);
  }

  StateId next(StateId q, std::size_t symbol) const { return transitions_[q * alphabet_.size() + symbol]; }

  std::span<const StateId> row(StateId q) const {
    return std::span<const StateId>(transitions_).subspan(q * alphabet_.size(), alphabet_.size());
  }

  void check_state(StateId q) const {
    if (q >= num_states_) throw Error(ErrorCode::kStateOutOfRange, "unknown state " + std::to_string(q));
  }

  std::size_t require_symbol(char c) const {
    auto idx = symbol_index(c);
    if (!idx) throw Error(ErrorCode::kUnknownSymbol, std::string("'") + c + "'");
    return *idx;
  }

  bool operator==(const Dfa& other) const {
    return alphabet_ == other.alphabet_ && num_states_ == other.num_states_ && start_ == other.start_ &&
           accepting_ == other.accepting_ && transitions_ == other.transitions_;
  }

 private:
  std::string alphabet_;
  StateId num_states_;
  StateId start_;
  std::vector<bool> accepting_;
  std::vector<StateId> transitions_;
  std::array<std::int16_t, 128> symbol_index_{};
};

inline void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (a.alphabet() != b.alphabet()) {
    throw Error(ErrorCode::kAlphabetMismatch, "'" + a.alphabet() + "' vs '" + b.alphabet() + "'");
  }
}

// ---------------------------------------------------------------------------
// Evaluation

/// δ(q, w) for an arbitrary source state.
inline StateId run_from(const Dfa& d, StateId q, std::string_view w) {
  d.check_state(q);
  for (char c : w) q = d.next(q, d.require_symbol(c));
  return q;
}

/// δ(q₀, w).
inline StateId run(const Dfa& d, std::string_view w) { return run_from(d, d.start(), w); }

inline bool accepts(const Dfa& d, std::string_view w) { return d.is_accepting(run(d, w)); }

inline void check_word(const Dfa& d, std::string_view w) {
  for (char c : w) d.require_symbol(c);
}

// ---------------------------------------------------------------------------
// Structural helpers

/// States reachable from `from` (inclusive).
inline std::vector<bool> reachable_from(const Dfa& d, StateId from) {
  std::vector<bool> seen(d.num_states(), false);
  std::vector<StateId> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (StateId t : d.row(q)) {
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

inline bool all_reachable(const Dfa& d) {
  auto seen = reachable_from(d, d.start());
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// An automaton together with the origin of each of its states in some
/// source automaton (origin[new] = old) and the inverse map (new_id[old],
/// kNoState for dropped states).
struct Relabeled {
  Dfa dfa;
  std::vector<StateId> origin;
  std::vector<StateId> new_id;
};

/// Keeps only the states in `keep`, preserving their relative order.
/// Transitions of kept states must stay inside `keep`.
inline Relabeled restrict_to(const Dfa& d, const std::vector<bool>& keep) {
  std::vector<StateId> new_id(d.num_states(), kNoState);
  std::vector<StateId> origin;
  for (StateId q = 0; q < d.num_states(); ++q) {
    if (keep[q]) {
      new_id[q] = static_cast<StateId>(origin.size());
      origin.push_back(q);
    }
  }
  const auto k = d.alphabet_size();
  std::vector<bool> acc(origin.size());
  std::vector<StateId> trans(origin.size() * k);
  for (StateId n = 0; n < origin.size(); ++n) {
    acc[n] = d.is_accepting(origin[n]);
    for (std::size_t c = 0; c < k; ++c) trans[n * k + c] = new_id[d.next(origin[n], c)];
  }
  Dfa out(d.alphabet(), static_cast<StateId>(origin.size()), new_id[d.start()], std::move(acc), std::move(trans));
  return Relabeled{std::move(out), std::move(origin), std::move(new_id)};
}

/// Removes states unreachable from the start state.
inline Relabeled trim(const Dfa& d) { return restrict_to(d, reachable_from(d, d.start())); }

inline Dfa with_start(const Dfa& d, StateId q) {
  d.check_state(q);
  return Dfa(d.alphabet(), d.num_states(), q, d.accepting(), d.transitions());
}

inline Dfa with_accepting(const Dfa& d, std::vector<bool> accepting) {
  return Dfa(d.alphabet(), d.num_states(), d.start(), std::move(accepting), d.transitions());
}

/// The automaton (Q, Σ, δ, q, A) trimmed to the states reachable from q,
/// with provenance back into `d`.
inline Relabeled induce_tracked(const Dfa& d, StateId q) { return trim(with_start(d, q)); }

/// Automaton recognizing the induced language L(q).
inline Dfa induce(const Dfa& d, StateId q) { return induce_tracked(d, q).dfa; }

/// States of `a` followed by the states of `b` (shifted by |Q_a|); the start
/// is a's start, so b's states are generally unreachable.
inline Dfa disjoint_union(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  const auto k = a.alphabet_size();
  const StateId offset = a.num_states();
  const StateId n = offset + b.num_states();
  std::vector<bool> acc(n);
  std::vector<StateId> trans(static_cast<std::size_t>(n) * k);
  for (StateId q = 0; q < a.num_states(); ++q) {
    acc[q] = a.is_accepting(q);
    for (std::size_t c = 0; c < k; ++c) trans[q * k + c] = a.next(q, c);
  }
  for (StateId q = 0; q < b.num_states(); ++q) {
    acc[offset + q] = b.is_accepting(q);
    for (std::size_t c = 0; c < k; ++c) trans[(offset + q) * k + c] = offset + b.next(q, c);
  }
  return Dfa(a.alphabet(), n, a.start(), std::move(acc), std::move(trans));
}

// ---------------------------------------------------------------------------
// Product construction

struct ProductDfa {
  Dfa dfa;
  /// origin[r] = (state of left, state of right) for product state r.
  std::vector<std::pair<StateId, StateId>> origin;
};

/// Reachable pair automaton; a pair state accepts iff exactly one component
/// does, so the product recognizes L(a) △ L(b). Pair states are numbered in
/// breadth-first discovery order over the sorted alphabet.
inline ProductDfa product_xor(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  const auto k = a.alphabet_size();
  const std::size_t nb = b.num_states();
  std::vector<StateId> id(static_cast<std::size_t>(a.num_states()) * nb, kNoState);
  std::vector<std::pair<StateId, StateId>> origin;
  std::vector<StateId> trans;
  auto intern = [&](StateId p, StateId q) {
    StateId& slot = id[p * nb + q];
    if (slot == kNoState) {
      slot = static_cast<StateId>(origin.size());
      origin.emplace_back(p, q);
    }
    return slot;
  };
  intern(a.start(), b.start());
  for (std::size_t r = 0; r < origin.size(); ++r) {
    auto [p, q] = origin[r];
    for (std::size_t c = 0; c < k; ++c) trans.push_back(intern(a.next(p, c), b.next(q, c)));
  }
  std::vector<bool> acc(origin.size());
  for (std::size_t r = 0; r < origin.size(); ++r) {
    acc[r] = a.is_accepting(origin[r].first) != b.is_accepting(origin[r].second);
  }
  Dfa dfa(a.alphabet(), static_cast<StateId>(origin.size()), 0, std::move(acc), std::move(trans));
  return ProductDfa{std::move(dfa), std::move(origin)};
}

// ---------------------------------------------------------------------------
// Text format `dfa v1`

struct ParseOptions {
  /// Route missing transitions to a fresh rejecting sink instead of failing.
  bool complete = false;
};

struct ParsedDfa {
  Dfa dfa;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline StateId parse_id(const std::string& tok, std::size_t line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      tok.size() > 9) {
    throw Error(ErrorCode::kSyntax, "line " + std::to_string(line) + ": expected a state id, got '" + tok + "'");
  }
  return static_cast<StateId>(std::stoul(tok));
}

}  // namespace detail

inline ParsedDfa parse_dfa(std::istream& in, const ParseOptions& options = {}) {
  auto syntax = [](std::size_t line, const std::string& what) {
    return Error(ErrorCode::kSyntax, "line " + std::to_string(line) + ": " + what);
  };

  std::string raw;
  std::size_t lineno = 0;
  bool saw_magic = false;
  std::optional<std::string> alphabet;
  std::optional<StateId> num_states;
  std::optional<std::pair<StateId, std::size_t>> start;
  std::optional<std::vector<std::pair<StateId, std::size_t>>> accept;
  std::vector<StateId> trans;
  std::size_t filled = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;

    if (!saw_magic) {
      if (toks.size() != 2 || toks[0] != "dfa" || toks[1] != "v1") throw syntax(lineno, "expected header 'dfa v1'");
      saw_magic = true;
      continue;
    }

    const std::string& key = toks[0];
    if (key == "alphabet") {
      if (alphabet) throw syntax(lineno, "duplicate alphabet line");
      if (toks.size() != 2) throw syntax(lineno, "alphabet takes one token of concatenated symbols");
      std::string sym = toks[1];
      std::sort(sym.begin(), sym.end());
      if (std::adjacent_find(sym.begin(), sym.end()) != sym.end()) {
        throw Error(ErrorCode::kBadAlphabet, "line " + std::to_string(lineno) + ": repeated symbol");
      }
      for (char c : sym) {
        if (!is_valid_symbol(c)) {
          throw Error(ErrorCode::kBadAlphabet, "line " + std::to_string(lineno) + ": symbol '" + c + "'");
        }
      }
      alphabet = sym;
    } else if (key == "states") {
      if (num_states) throw syntax(lineno, "duplicate states line");
      if (toks.size() != 2) throw syntax(lineno, "states takes one count");
      num_states = detail::parse_id(toks[1], lineno);
      if (*num_states == 0) throw syntax(lineno, "state count must be positive");
    } else if (key == "start") {
      if (start) throw syntax(lineno, "duplicate start line");
      if (toks.size() != 2) throw syntax(lineno, "start takes one state id");
      start = std::make_pair(detail::parse_id(toks[1], lineno), lineno);
    } else if (key == "accept") {
      if (accept) throw syntax(lineno, "duplicate accept line");
      accept.emplace();
      if (toks.size() == 2 && toks[1] == "-") continue;
      if (toks.size() < 2) throw syntax(lineno, "accept needs ids or '-'");
      for (std::size_t i = 1; i < toks.size(); ++i) accept->emplace_back(detail::parse_id(toks[i], lineno), lineno);
    } else {
      if (!alphabet || !num_states) throw syntax(lineno, "transition before alphabet and states lines");
      if (toks.size() != 3) throw syntax(lineno, "expected '<from> <symbol> <to>'");
      StateId from = detail::parse_id(toks[0], lineno);
      StateId to = detail::parse_id(toks[2], lineno);
      if (toks[1].size() != 1) throw syntax(lineno, "symbol must be a single character");
      auto pos = alphabet->find(toks[1][0]);
      if (pos == std::string::npos) {
        throw Error(ErrorCode::kUnknownSymbol, "line " + std::to_string(lineno) + ": '" + toks[1] + "'");
      }
      if (from >= *num_states || to >= *num_states) {
        throw Error(ErrorCode::kStateOutOfRange, "line " + std::to_string(lineno));
      }
      if (trans.empty()) trans.assign(static_cast<std::size_t>(*num_states) * alphabet->size(), kNoState);
      StateId& slot = trans[from * alphabet->size() + pos];
      if (slot != kNoState) throw syntax(lineno, "duplicate transition");
      slot = to;
      ++filled;
    }
  }

  if (!saw_magic) throw Error(ErrorCode::kSyntax, "missing header 'dfa v1'");
  if (!alphabet) throw Error(ErrorCode::kSyntax, "missing alphabet line");
  if (alphabet->empty()) throw Error(ErrorCode::kEmptyAlphabet, "");
  if (!num_states) throw Error(ErrorCode::kSyntax, "missing states line");
  if (!start) throw Error(ErrorCode::kSyntax, "missing start line");
  if (!accept) throw Error(ErrorCode::kSyntax, "missing accept line");

  StateId n = *num_states;
  const std::size_t k = alphabet->size();
  if (start->first >= n) {
    throw Error(ErrorCode::kStateOutOfRange, "line " + std::to_string(start->second) + ": start " +
                                                 std::to_string(start->first));
  }
  std::vector<bool> acc(n, false);
  for (auto [q, line] : *accept) {
    if (q >= n) throw Error(ErrorCode::kStateOutOfRange, "line " + std::to_string(line) + ": accept " + std::to_string(q));
    acc[q] = true;
  }

  std::vector<std::string> warnings;
  if (trans.empty()) trans.assign(static_cast<std::size_t>(n) * k, kNoState);
  if (filled != trans.size()) {
    if (!options.complete) {
      auto missing = std::find(trans.begin(), trans.end(), kNoState) - trans.begin();
      throw Error(ErrorCode::kIncompleteTable, "no transition for state " + std::to_string(missing / k) +
                                                   " on '" + std::string(1, (*alphabet)[missing % k]) + "'");
    }
    StateId sink = n++;
    acc.push_back(false);
    for (auto& t : trans) {
      if (t == kNoState) t = sink;
    }
    for (std::size_t c = 0; c < k; ++c) trans.push_back(sink);
    warnings.push_back("added rejecting sink state " + std::to_string(sink) + " for " +
                       std::to_string(trans.size() - k - filled) + " missing transition(s)");
  }

  Dfa raw_dfa(*alphabet, n, start->first, std::move(acc), std::move(trans));
  auto trimmed = trim(raw_dfa);
  if (auto dropped = raw_dfa.num_states() - trimmed.dfa.num_states(); dropped > 0) {
    warnings.push_back("trimmed " + std::to_string(dropped) + " unreachable state" + (dropped == 1 ? "" : "s"));
  }
  return ParsedDfa{std::move(trimmed.dfa), std::move(warnings)};
}

inline ParsedDfa parse_dfa(std::string_view text, const ParseOptions& options = {}) {
  std::istringstream in{std::string(text)};
  return parse_dfa(in, options);
}

inline ParsedDfa read_dfa_file(const std::string& path, const ParseOptions& options = {}) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return parse_dfa(in, options);
}

/// Canonical `dfa v1` text: accept ids ascending, transitions sorted by
/// (from, symbol).
inline std::string serialize_dfa(const Dfa& d) {
  std::ostringstream out;
  out << "dfa v1\n";
  out << "alphabet " << d.alphabet() << "\n";
  out << "states " << d.num_states() << "\n";
  out << "start " << d.start() << "\n";
  out << "accept";
  bool any = false;
  for (StateId q = 0; q < d.num_states(); ++q) {
    if (d.is_accepting(q)) {
      out << ' ' << q;
      any = true;
    }
  }
  if (!any) out << " -";
  out << "\n";
  for (StateId q = 0; q < d.num_states(); ++q) {
    for (std::size_t c = 0; c < d.alphabet_size(); ++c) {
      out << q << ' ' << d.alphabet()[c] << ' ' << d.next(q, c) << "\n";
    }
  }
  return out.str();
}

inline void write_dfa_file(const std::string& path, const Dfa& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << serialize_dfa(d);
}

// ---------------------------------------------------------------------------
// Word lists: one word per line, `@` is ε, `#` starts a comment.

inline std::vector<Word> parse_word_list(std::istream& in) {
  std::vector<Word> words;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 1) throw Error(ErrorCode::kSyntax, "line " + std::to_string(lineno) + ": one word per line");
    if (toks[0] == "@") {
      words.emplace_back();
      continue;
    }
    for (char c : toks[0]) {
      if (!is_valid_symbol(c)) {
        throw Error(ErrorCode::kSyntax, "line " + std::to_string(lineno) + ": bad symbol '" + std::string(1, c) + "'");
      }
    }
    words.push_back(toks[0]);
  }
  sort_shortlex(words);
  return words;
}

inline std::vector<Word> read_word_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return parse_word_list(in);
}

inline std::string format_word_list(const std::vector<Word>& words) {
  std::string out;
  for (const auto& w : words) {
    out += format_word(w);
    out += '\n';
  }
  return out;
}

}  // namespace fdfa
