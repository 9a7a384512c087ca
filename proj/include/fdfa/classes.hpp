#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fdfa/dfa.hpp"
#include "fdfa/language.hpp"
#include "fdfa/minimize.hpp"
#include "fdfa/parts.hpp"

namespace fdfa {

struct FiniteDifferenceVerdict {
  bool finitely_different = false;
  DiffResult diff;
};

/// Two ways of deciding whether a xor product recognizes a finite language.
enum class FinitenessProcedure {
  /// Look for a cycle among the useful states of the product.
  kDirect,
  /// Minimize the product and require its infinite part to be one rejecting
  /// state whose transitions all loop back to itself.
  kMinimizedProduct,
};

inline bool infinite_part_is_rejecting_sink(const Dfa& product) {
  Dfa m = minimize(product);
  auto inf = compute_parts(m).infinite_part();
  if (inf.size() != 1) return false;
  StateId sink = inf.front();
  if (m.is_accepting(sink)) return false;
  auto row = m.row(sink);
  return std::all_of(row.begin(), row.end(), [sink](StateId t) { return t == sink; });
}

inline Dfa state_pair_product(const Dfa& d, StateId p, StateId q) {
  d.check_state(p);
  d.check_state(q);
  return product_xor(induce(d, p), induce(d, q)).dfa;
}

/// p ~ q: L(p) △ L(q) is finite.
inline FiniteDifferenceVerdict states_finitely_different(const Dfa& d, StateId p, StateId q) {
  DiffResult diff = diff_of_product(state_pair_product(d, p, q));
  bool fin = diff.finite();
  return {fin, std::move(diff)};
}

inline bool states_finitely_different(const Dfa& d, StateId p, StateId q, FinitenessProcedure procedure) {
  Dfa product = state_pair_product(d, p, q);
  if (procedure == FinitenessProcedure::kMinimizedProduct) return infinite_part_is_rejecting_sink(product);
  return classify_language(product).kind != LanguageKind::kInfinite;
}

/// D ~ D'.
inline FiniteDifferenceVerdict dfas_finitely_different(const Dfa& a, const Dfa& b) {
  DiffResult diff = symmetric_difference(a, b);
  bool fin = diff.finite();
  return {fin, std::move(diff)};
}

/// Symmetric memo of pairwise ~ verdicts for one automaton. Safe to query
/// from several threads; verdicts are deterministic, so a lost race only
/// repeats work.
class FiniteDifferenceCache {
 public:
  explicit FiniteDifferenceCache(const Dfa& d) : dfa_(&d) {}

  bool query(StateId p, StateId q) {
    if (p == q) return true;
    if (p > q) std::swap(p, q);
    const std::uint64_t key = (static_cast<std::uint64_t>(p) << 32) | q;
    {
      std::shared_lock lock(mutex_);
      if (auto it = verdicts_.find(key); it != verdicts_.end()) return it->second;
    }
    bool verdict = states_finitely_different(*dfa_, p, q, FinitenessProcedure::kDirect);
    std::unique_lock lock(mutex_);
    verdicts_[key] = verdict;
    return verdict;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return verdicts_.size();
  }

 private:
  const Dfa* dfa_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, bool> verdicts_;
};

/// Partition of the states by ~. A class is identified by its smallest
/// member state id.
struct StateClassPartition {
  std::vector<StateId> class_of;
  /// Member lists ordered by class id; each list ascending.
  std::vector<std::vector<StateId>> classes;

  const std::vector<StateId>& members(StateId class_id) const {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [class_id](const auto& m) { return m.front() == class_id; });
    if (it == classes.end()) throw Error(ErrorCode::kStateOutOfRange, "no class " + std::to_string(class_id));
    return *it;
  }

  bool same_class(StateId p, StateId q) const { return class_of[p] == class_of[q]; }
};

struct ClassOptions {
  /// Test every pair instead of one representative per class and check that
  /// the verdicts form an equivalence relation.
  bool verify_all_pairs = false;
};

inline StateClassPartition state_class_partition(const Dfa& d, FiniteDifferenceCache& cache,
                                                 const ClassOptions& options = {}) {
  const StateId n = d.num_states();
  StateClassPartition part;
  part.class_of.assign(n, kNoState);
  // States are visited in ascending order, so the first member of each class
  // is its smallest.
  for (StateId q = 0; q < n; ++q) {
    for (auto& members : part.classes) {
      if (cache.query(members.front(), q)) {
        members.push_back(q);
        part.class_of[q] = members.front();
        break;
      }
    }
    if (part.class_of[q] == kNoState) {
      part.classes.push_back({q});
      part.class_of[q] = q;
    }
  }
  if (options.verify_all_pairs) {
    for (StateId p = 0; p < n; ++p) {
      for (StateId q = p + 1; q < n; ++q) {
        if (cache.query(p, q) != part.same_class(p, q)) {
          throw std::logic_error("finite-difference verdicts are not transitive at states " + std::to_string(p) +
                                 ", " + std::to_string(q));
        }
      }
    }
  }
  return part;
}

inline StateClassPartition state_class_partition(const Dfa& d, const ClassOptions& options = {}) {
  FiniteDifferenceCache cache(d);
  return state_class_partition(d, cache, options);
}

/// Comparison of the sets of language-classes represented by two machines.
struct SignatureComparison {
  bool equal = false;
  /// (class id in a, class id in b) for every class represented in both.
  std::vector<std::pair<StateId, StateId>> matched;
  /// Class ids represented in only one of the machines.
  std::vector<StateId> only_in_a;
  std::vector<StateId> only_in_b;
};

/// Decided on the disjoint union so that one partition spans both machines.
inline SignatureComparison signature_equal(const Dfa& a, const Dfa& b, const ClassOptions& options = {}) {
  Dfa u = disjoint_union(a, b);
  const StateId offset = a.num_states();
  auto part = state_class_partition(u, options);

  SignatureComparison cmp;
  for (const auto& members : part.classes) {
    auto first_b = std::find_if(members.begin(), members.end(), [offset](StateId s) { return s >= offset; });
    bool has_a = members.front() < offset;
    bool has_b = first_b != members.end();
    if (has_a && has_b) {
      // Class ids are the smallest member within each machine.
      cmp.matched.emplace_back(members.front(), *first_b - offset);
    } else if (has_a) {
      cmp.only_in_a.push_back(members.front());
    } else {
      cmp.only_in_b.push_back(*first_b - offset);
    }
  }
  std::sort(cmp.matched.begin(), cmp.matched.end());
  std::sort(cmp.only_in_b.begin(), cmp.only_in_b.end());
  cmp.equal = cmp.only_in_a.empty() && cmp.only_in_b.empty();
  return cmp;
}

}  // namespace fdfa
