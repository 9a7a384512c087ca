#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fdfa/classes.hpp"
#include "fdfa/dfa.hpp"
#include "fdfa/fmin.hpp"
#include "fdfa/graph.hpp"
#include "fdfa/language.hpp"
#include "fdfa/minimize.hpp"
#include "fdfa/parts.hpp"

namespace fdfa {

enum class PartTag { kInfinitePart, kFinitePart };

inline const char* to_string(PartTag tag) { return tag == PartTag::kInfinitePart ? "infinite" : "finite"; }

/// Bijection between the tagged parts of two automata, as (a-state, b-state)
/// pairs sorted by the a-state.
struct StateBijection {
  PartTag part = PartTag::kInfinitePart;
  std::vector<std::pair<StateId, StateId>> pairs;

  std::optional<StateId> image(StateId q) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(q, StateId{0}));
    if (it == pairs.end() || it->first != q) return std::nullopt;
    return it->second;
  }

  bool operator==(const StateBijection&) const = default;
};

struct BijectionCheck {
  bool ok = true;
  std::string violation;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks the isomorphism conditions selected by the bijection's tag.
///
/// Infinite part: acceptance is preserved and f(δ(q,c)) = δ'(f(q),c) for
/// every q and c. Finite part (up to acceptance): only transitions whose
/// target stays in the finite part must commute; acceptance is ignored.
/// Throws when the domain or range is not exactly the tagged part.
inline BijectionCheck verify_bijection(const Dfa& a, const Dfa& b, const StateBijection& f) {
  require_same_alphabet(a, b);
  const bool inf = f.part == PartTag::kInfinitePart;
  auto parts_a = compute_parts(a);
  auto parts_b = compute_parts(b);
  auto want_dom = inf ? parts_a.infinite_part() : parts_a.finite_part();
  auto want_rng = inf ? parts_b.infinite_part() : parts_b.finite_part();

  std::vector<StateId> dom, rng;
  for (auto [p, q] : f.pairs) {
    dom.push_back(p);
    rng.push_back(q);
  }
  std::sort(dom.begin(), dom.end());
  std::sort(rng.begin(), rng.end());
  if (std::adjacent_find(dom.begin(), dom.end()) != dom.end() || std::adjacent_find(rng.begin(), rng.end()) != rng.end()) {
    throw Error(ErrorCode::kBadBijection, "mapping is not injective");
  }
  if (dom != want_dom) throw Error(ErrorCode::kBadBijection, std::string("domain is not the ") + to_string(f.part) + " part");
  if (rng != want_rng) throw Error(ErrorCode::kBadBijection, std::string("range is not the ") + to_string(f.part) + " part");

  for (auto [p, fp] : f.pairs) {
    if (inf && a.is_accepting(p) != b.is_accepting(fp)) {
      return {false, "acceptance differs at " + std::to_string(p) + " -> " + std::to_string(fp)};
    }
    for (std::size_t c = 0; c < a.alphabet_size(); ++c) {
      StateId t = a.next(p, c);
      if (!inf && parts_a.in_infinite_part(t)) continue;
      auto ft = f.image(t);
      if (!ft || *ft != b.next(fp, c)) {
        return {false, "transition " + std::to_string(p) + " -" + a.alphabet()[c] + "-> " + std::to_string(t) +
                           " does not commute"};
      }
    }
  }
  return {};
}

inline void require_minimized(const Dfa& d, const char* which) {
  if (!is_minimized(d)) throw Error(ErrorCode::kNotMinimized, which);
}

/// Exact-language matching: every q ∈ I(a) is paired with the unique
/// q' ∈ I(b) satisfying L(q) = L(q'). Returns nullopt unless the matching is
/// a perfect bijection satisfying the infinite-part conditions.
inline std::optional<StateBijection> infinite_part_iso(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  require_minimized(a, "left automaton");
  require_minimized(b, "right automaton");
  auto inf_a = compute_parts(a).infinite_part();
  auto inf_b = compute_parts(b).infinite_part();
  if (inf_a.size() != inf_b.size()) return std::nullopt;

  StateBijection f{PartTag::kInfinitePart, {}};
  std::vector<bool> used(b.num_states(), false);
  for (StateId q : inf_a) {
    Dfa lq = induce(a, q);
    std::optional<StateId> match;
    for (StateId r : inf_b) {
      if (classify_language(product_xor(lq, induce(b, r)).dfa).kind == LanguageKind::kEmpty) {
        match = r;
        break;
      }
    }
    if (!match || used[*match]) return std::nullopt;
    used[*match] = true;
    f.pairs.emplace_back(q, *match);
  }
  if (!verify_bijection(a, b, f)) return std::nullopt;
  return f;
}

struct RepresentativeAssignment {
  /// Every representative is strictly longer than this.
  std::size_t threshold = 0;
  /// (state of the left automaton, representative word), ascending by state.
  std::vector<std::pair<StateId, Word>> words;
};

struct RepresentativeIso {
  StateBijection bijection;
  RepresentativeAssignment representatives;
};

/// Word w with δ(q₀, w) = q and |w| > threshold, for q in the infinite part:
/// the shortest path to the smallest-id cycle state c that reaches q, c's
/// shortest cycle word pumped as often as needed, then the shortest path from
/// c to q.
inline Word representative_word(const Dfa& d, StateId q, std::size_t threshold) {
  auto reach = reachable_from(d, d.start());
  auto comps = graph::strongly_connected(d, reach);
  for (StateId c = 0; c < d.num_states(); ++c) {
    if (!comps.on_cycle[c]) continue;
    auto to_q = graph::shortest_word(d, c, [q](StateId s) { return s == q; });
    if (!to_q) continue;
    auto to_c = graph::shortest_word(d, d.start(), [c](StateId s) { return s == c; });
    auto loop = graph::shortest_word(d, c, [c](StateId s) { return s == c; }, nullptr, /*nonempty=*/true);
    Word w = *to_c;
    while (w.size() + to_q->size() <= threshold) w += *loop;
    return w + *to_q;
  }
  throw Error(ErrorCode::kNotInInfinitePart, "state " + std::to_string(q));
}

/// Transports each infinite-part state of `a` to `b` along a long word
/// reaching it. Requires both machines minimized and finitely different; the
/// result is verified against the infinite-part conditions before return.
inline RepresentativeIso iso_from_representatives(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  require_minimized(a, "left automaton");
  require_minimized(b, "right automaton");
  if (!symmetric_difference(a, b).finite()) throw Error(ErrorCode::kNotFinitelyDifferent, "");

  RepresentativeIso out;
  // Past |Q|-1 symbols every run sits in the infinite part, and every word of
  // the symmetric difference is shorter than |Q_a|·|Q_b|.
  out.representatives.threshold = static_cast<std::size_t>(a.num_states()) * b.num_states();
  out.bijection.part = PartTag::kInfinitePart;
  for (StateId q : compute_parts(a).infinite_part()) {
    Word w = representative_word(a, q, out.representatives.threshold);
    out.bijection.pairs.emplace_back(q, run(b, w));
    out.representatives.words.emplace_back(q, std::move(w));
  }
  BijectionCheck check;
  try {
    check = verify_bijection(a, b, out.bijection);
  } catch (const Error& e) {
    check = {false, e.what()};
  }
  if (!check) throw std::logic_error("representative-string mapping is not an isomorphism: " + check.violation);
  return out;
}

/// Maps each finite-part state of `a` to the unique finite-part state of `b`
/// in the same state-class. Requires both machines f-minimal and finitely
/// different.
inline std::optional<StateBijection> finite_part_iso(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  if (!is_f_minimal(a)) throw Error(ErrorCode::kNotFMinimal, "left automaton");
  if (!is_f_minimal(b)) throw Error(ErrorCode::kNotFMinimal, "right automaton");
  if (!symmetric_difference(a, b).finite()) throw Error(ErrorCode::kNotFinitelyDifferent, "");

  Dfa u = disjoint_union(a, b);
  const StateId offset = a.num_states();
  auto classes = state_class_partition(u);
  auto fin_a = compute_parts(a).finite_part();
  auto parts_b = compute_parts(b);

  StateBijection f{PartTag::kFinitePart, {}};
  for (StateId p : fin_a) {
    std::optional<StateId> match;
    for (StateId m : classes.members(classes.class_of[p])) {
      if (m >= offset && parts_b.in_finite_part(m - offset)) {
        if (match) return std::nullopt;
        match = m - offset;
      }
    }
    if (!match) return std::nullopt;
    f.pairs.emplace_back(p, *match);
  }
  if (f.pairs.size() != parts_b.finite_part().size()) return std::nullopt;
  if (!verify_bijection(a, b, f)) return std::nullopt;
  return f;
}

}  // namespace fdfa
