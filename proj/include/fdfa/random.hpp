#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdfa/dfa.hpp"

namespace fdfa {

/// 64-bit linear congruential generator (Knuth's MMIX constants). Fixed so
/// that seeded corpora are reproducible in any language:
///
///   state ← state · 6364136223846793005 + 1442695040888963407  (mod 2⁶⁴)
///   output = state >> 32
///
/// The state starts at the seed; below(k) is output mod k.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint32_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  std::uint32_t below(std::uint32_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Uniformly drawn complete automaton with `n` states, start 0, all states
/// reachable. Draw order per attempt: for each state ascending, each symbol
/// of the sorted alphabet, a target below(n); then one acceptance bit
/// below(2) per state. Attempts with unreachable states are rejected.
inline Dfa random_dfa(StateId n, const std::string& alphabet, Lcg& rng) {
  if (n == 0) throw Error(ErrorCode::kStateOutOfRange, "need at least one state");
  const std::size_t k = alphabet.size();
  while (true) {
    std::vector<StateId> trans(static_cast<std::size_t>(n) * k);
    for (auto& t : trans) t = rng.below(n);
    std::vector<bool> acc(n);
    for (StateId q = 0; q < n; ++q) acc[q] = rng.below(2) == 1;
    Dfa d(alphabet, n, 0, std::move(acc), std::move(trans));
    if (all_reachable(d)) return d;
  }
}

}  // namespace fdfa
