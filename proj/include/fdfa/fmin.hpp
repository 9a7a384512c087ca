#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fdfa/classes.hpp"
#include "fdfa/dfa.hpp"
#include "fdfa/language.hpp"
#include "fdfa/minimize.hpp"
#include "fdfa/parts.hpp"

namespace fdfa {

/// One f-merge step. The language changes only on words x·z with x reaching
/// the merged state and z in L(merged) △ L(target), so the change is bounded
/// by words_into_merged × diff_size.
struct MergeRecord {
  StateId merged = 0;
  StateId target = 0;
  StateId state_class = 0;
  std::uint64_t words_into_merged = 0;
  std::uint64_t diff_size = 0;

  bool operator==(const MergeRecord&) const = default;
};

using MergeTrace = std::vector<MergeRecord>;

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

/// Number of words w with δ(q₀, w) = p. Only meaningful for finite-part
/// states, all of whose words are shorter than |Q|.
inline std::uint64_t count_words_reaching(const Dfa& d, StateId p) {
  d.check_state(p);
  const StateId n = d.num_states();
  std::vector<std::uint64_t> ways(n, 0);
  ways[d.start()] = 1;
  std::uint64_t total = 0;
  for (StateId len = 0; len < n; ++len) {
    total = saturating_add(total, ways[p]);
    std::vector<std::uint64_t> next(n, 0);
    for (StateId q = 0; q < n; ++q) {
      if (ways[q] == 0) continue;
      for (StateId t : d.row(q)) next[t] = saturating_add(next[t], ways[q]);
    }
    ways.swap(next);
  }
  return total;
}

namespace detail {

/// Deletes p, sends every transition into p (and the start, if it was p) to
/// q, then trims. No precondition checks.
inline Relabeled apply_merge(const Dfa& d, StateId p, StateId q) {
  std::vector<StateId> trans = d.transitions();
  for (auto& t : trans) {
    if (t == p) t = q;
  }
  StateId start = d.start() == p ? q : d.start();
  Dfa redirected(d.alphabet(), d.num_states(), start, d.accepting(), std::move(trans));
  auto keep = reachable_from(redirected, start);
  keep[p] = false;
  return restrict_to(redirected, keep);
}

inline void check_merge(const Dfa& d, const PartsPartition& parts, FiniteDifferenceCache& cache, StateId p,
                        StateId q) {
  d.check_state(p);
  d.check_state(q);
  if (p == q) throw Error(ErrorCode::kSameState, "cannot merge state " + std::to_string(p) + " with itself");
  if (!parts.in_finite_part(p)) {
    throw Error(ErrorCode::kNotInFinitePart, "merged state " + std::to_string(p) + " is in the infinite part");
  }
  if (!cache.query(p, q)) {
    throw Error(ErrorCode::kNotFinitelyDifferent,
                "states " + std::to_string(p) + " and " + std::to_string(q) + " differ on infinitely many words");
  }
  // Redirecting the edges into p would close a cycle through q, which can
  // change the language on infinitely many words: {ε, 0} becomes 0*.
  if (reachable_from(d, q)[p]) {
    throw Error(ErrorCode::kTargetReachesMerged,
                "state " + std::to_string(q) + " reaches merged state " + std::to_string(p));
  }
}

}  // namespace detail

/// Removes finite-part state p in favour of q ~ p, where q must not reach p.
inline Dfa f_merge(const Dfa& d, StateId p, StateId q) {
  FiniteDifferenceCache cache(d);
  detail::check_merge(d, compute_parts(d), cache, p, q);
  return detail::apply_merge(d, p, q).dfa;
}

enum class MergeOrder {
  /// Highest-id finite-part state first; targets prefer the smallest id.
  kCanonical,
  /// Lowest-id finite-part state first; targets prefer the largest id.
  kReversed,
};

struct FMinimizeResult {
  Dfa dfa;
  MergeTrace trace;
};

/// Minimizes, then greedily f-merges until no finite-part state shares its
/// state-class with another state. Each merge goes into an infinite-part
/// member of the class when one exists, otherwise into a finite-part member
/// that does not reach p. Some finite-part member of a class is reachable from
/// no other member, so a mergeable class always yields a legal pair. Parts and
/// classes are recomputed after every merge.
inline FMinimizeResult f_minimize(const Dfa& d, MergeOrder order = MergeOrder::kCanonical) {
  Dfa cur = minimize(d);
  MergeTrace trace;
  const bool canonical = order == MergeOrder::kCanonical;

  while (true) {
    auto parts = compute_parts(cur);
    FiniteDifferenceCache cache(cur);
    auto classes = state_class_partition(cur, cache);

    std::vector<StateId> candidates = parts.finite_part();
    if (canonical) std::reverse(candidates.begin(), candidates.end());

    std::optional<std::pair<StateId, StateId>> pick;
    for (StateId p : candidates) {
      const auto& members = classes.members(classes.class_of[p]);
      std::optional<StateId> inf_target, fin_target;
      for (StateId m : members) {
        if (m == p) continue;
        if (parts.in_finite_part(m) && reachable_from(cur, m)[p]) continue;
        auto& slot = parts.in_infinite_part(m) ? inf_target : fin_target;
        if (!slot || !canonical) slot = m;  // members ascend: first = smallest, last = largest
      }
      if (inf_target || fin_target) {
        pick.emplace(p, inf_target ? *inf_target : *fin_target);
        break;
      }
    }
    if (!pick) break;

    auto [p, q] = *pick;
    detail::check_merge(cur, parts, cache, p, q);
    MergeRecord rec;
    rec.merged = p;
    rec.target = q;
    rec.state_class = classes.class_of[p];
    rec.words_into_merged = count_words_reaching(cur, p);
    rec.diff_size = states_finitely_different(cur, p, q).diff.words.size();
    trace.push_back(rec);
    cur = detail::apply_merge(cur, p, q).dfa;
  }

  if (!is_minimized(cur)) throw std::logic_error("f-minimization reached a fixpoint that is not minimized");
  return FMinimizeResult{std::move(cur), std::move(trace)};
}

struct FMinimalityReport {
  bool f_minimal = false;
  bool minimized = false;
  /// Two states witnessing the failure: language-equal states when the
  /// machine is not minimized, otherwise a finite-part state and another
  /// member of its state-class.
  std::optional<std::pair<StateId, StateId>> violation;

  explicit operator bool() const noexcept { return f_minimal; }
};

/// Minimized, and every finite-part state is the only member of its
/// state-class.
inline FMinimalityReport is_f_minimal(const Dfa& d) {
  FMinimalityReport report;
  auto part = language_partition(d);
  for (StateId p = 0; p < d.num_states() && !report.violation; ++p) {
    for (StateId q = p + 1; q < d.num_states(); ++q) {
      if (part.same_block(p, q)) {
        report.violation.emplace(p, q);
        break;
      }
    }
  }
  report.minimized = !report.violation.has_value();
  if (!report.minimized) return report;

  auto parts = compute_parts(d);
  auto classes = state_class_partition(d);
  for (StateId p : parts.finite_part()) {
    const auto& members = classes.members(classes.class_of[p]);
    if (members.size() > 1) {
      report.violation.emplace(p, members.front() == p ? members[1] : members.front());
      return report;
    }
  }
  report.f_minimal = true;
  return report;
}

/// Toggles acceptance of the given finite-part states.
inline Dfa flip_finite_acceptance(const Dfa& d, std::span<const StateId> states) {
  auto parts = compute_parts(d);
  std::vector<bool> flip(d.num_states(), false);
  for (StateId s : states) {
    d.check_state(s);
    if (!parts.in_finite_part(s)) {
      throw Error(ErrorCode::kNotInFinitePart, "state " + std::to_string(s) + " is in the infinite part");
    }
    flip[s] = true;
  }
  std::vector<bool> acc = d.accepting();
  for (StateId q = 0; q < d.num_states(); ++q) {
    if (flip[q]) acc[q] = !acc[q];
  }
  return with_accepting(d, std::move(acc));
}

/// Retargets the transition from a finite-part state into the infinite part
/// to another infinite-part state of the same state-class.
inline Dfa redirect_boundary_transition(const Dfa& d, StateId from, char symbol, StateId new_target) {
  d.check_state(from);
  d.check_state(new_target);
  const std::size_t c = d.require_symbol(symbol);
  auto parts = compute_parts(d);
  if (!parts.in_finite_part(from)) {
    throw Error(ErrorCode::kNotInFinitePart, "source " + std::to_string(from) + " is in the infinite part");
  }
  const StateId old_target = d.next(from, c);
  if (!parts.in_infinite_part(old_target)) {
    throw Error(ErrorCode::kNotInInfinitePart, "current target " + std::to_string(old_target) + " is in the finite part");
  }
  if (!parts.in_infinite_part(new_target)) {
    throw Error(ErrorCode::kNotInInfinitePart, "new target " + std::to_string(new_target) + " is in the finite part");
  }
  if (old_target == new_target) return d;
  if (!states_finitely_different(d, old_target, new_target, FinitenessProcedure::kDirect)) {
    throw Error(ErrorCode::kNotFinitelyDifferent, "targets " + std::to_string(old_target) + " and " +
                                                      std::to_string(new_target) + " lie in different state-classes");
  }
  std::vector<StateId> trans = d.transitions();
  trans[from * d.alphabet_size() + c] = new_target;
  return trim(Dfa(d.alphabet(), d.num_states(), d.start(), d.accepting(), std::move(trans))).dfa;
}

}  // namespace fdfa
