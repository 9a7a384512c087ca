#include "catch_amalgamated.hpp"

#include "fdfa/minimize.hpp"
#include "fdfa/random.hpp"
#include "fdfa/testing/oracle.hpp"
#include "fixtures.hpp"

using namespace fdfa;

namespace {

// ZSTAR with a second copy of A: A=0, X=1, A'=2.
Dfa zstar_with_duplicate() { return Dfa("01", 3, 0, {true, false, true}, {2, 1, 1, 1, 0, 1}); }

// ODD with a duplicated accepting state.
Dfa odd_with_duplicate() { return Dfa("01", 3, 0, {false, true, true}, {1, 2, 0, 0, 0, 0}); }

// Pairwise distinguishability by brute force: some word up to the bound
// separates the induced languages.
bool oracle_distinct(const Dfa& d, StateId p, StateId q) {
  return !testing::oracle_state_diff(d, p, q, d.num_states() + 1).empty();
}

}  // namespace

TEST_CASE("minimize on fixtures") {
  auto z = fixtures::zstar();
  CHECK(minimize(z) == z);
  CHECK(oracle_distinct(z, 0, 1));

  Dfa odd2 = minimize(odd_with_duplicate());
  CHECK(odd2 == fixtures::odd());

  Dfa eps = minimize(product_xor(fixtures::sigplus(), fixtures::all()).dfa);
  CHECK(eps.num_states() == 2);
  CHECK(testing::accepted_words(eps, 4) == std::vector<Word>{""});
}

TEST_CASE("is_minimized") {
  auto o = fixtures::onezstar();
  CHECK(is_minimized(o));
  for (StateId p = 0; p < 3; ++p) {
    for (StateId q = p + 1; q < 3; ++q) CHECK(!testing::oracle_state_diff(o, p, q, 3).empty());
  }
  CHECK_FALSE(is_minimized(zstar_with_duplicate()));
  CHECK(is_minimized(fixtures::all()));
}

TEST_CASE("distinguishing_word") {
  auto z = fixtures::zstar();
  CHECK(distinguishing_word(z, 0, 1) == Word{});
  CHECK(distinguishing_word(fixtures::onezstar(), 1, 2) == Word{});
  CHECK_FALSE(distinguishing_word(z, 1, 1).has_value());
  CHECK(distinguishing_word(fixtures::onezstar(), 0, 2) == Word{"1"});
  CHECK_FALSE(distinguishing_word(zstar_with_duplicate(), 0, 2).has_value());
  CHECK_THROWS_AS(distinguishing_word(z, 0, 9), Error);
}

TEST_CASE("minimization properties on random automata") {
  Lcg rng(1234);
  for (int i = 0; i < 300; ++i) {
    Dfa d = random_dfa(1 + rng.below(6), i % 3 ? "01" : "abc", rng);
    auto res = minimize_with_partition(d);

    // Language preserved.
    REQUIRE(testing::oracle_diff(d, res.dfa, d.num_states() + 2).empty());
    // Idempotent.
    REQUIRE(minimize(res.dfa) == res.dfa);
    REQUIRE(is_minimized(res.dfa));

    for (StateId p = 0; p < d.num_states(); ++p) {
      REQUIRE(res.quotient[p] != kNoState);
      for (StateId q = 0; q < d.num_states(); ++q) {
        auto w = distinguishing_word(d, p, q);
        REQUIRE(w.has_value() == !res.partition.same_block(p, q));
        if (!w) continue;
        // w separates p and q, and nothing shorter or shortlex-smaller does.
        REQUIRE(testing::simulate(with_start(d, p), *w) != testing::simulate(with_start(d, q), *w));
        for (auto& shorter : testing::all_words(d.alphabet(), w->size())) {
          if (!shortlex_less(shorter, *w)) break;
          REQUIRE(testing::simulate(with_start(d, p), shorter) == testing::simulate(with_start(d, q), shorter));
        }
      }
    }
  }
}
