#include "catch_amalgamated.hpp"

#include <atomic>
#include <thread>

#include "fdfa/classes.hpp"
#include "fdfa/isomorphism.hpp"
#include "fdfa/random.hpp"
#include "fdfa/testing/oracle.hpp"
#include "fixtures.hpp"

using namespace fdfa;

TEST_CASE("states_finitely_different") {
  auto sp = fixtures::sigplus();
  auto v = states_finitely_different(sp, 0, 1);
  CHECK(v.finitely_different);
  CHECK(v.diff.words == std::vector<Word>{""});
  CHECK(testing::oracle_state_diff(sp, 0, 1, 4) == std::vector<Word>{""});

  auto o = fixtures::onezstar();
  auto so = states_finitely_different(o, 0, 1);
  CHECK_FALSE(so.finitely_different);
  for (std::size_t k = 0; k < 4; ++k) {
    Word w = so.diff.witness->instance(k);
    CHECK(testing::simulate(with_start(o, 0), w) != testing::simulate(with_start(o, 1), w));
  }

  auto self = states_finitely_different(o, 2, 2);
  CHECK(self.finitely_different);
  CHECK(self.diff.words.empty());
  CHECK_THROWS_AS(states_finitely_different(o, 0, 5), Error);
}

TEST_CASE("both finiteness procedures agree") {
  Lcg rng(41);
  for (int i = 0; i < 200; ++i) {
    Dfa d = random_dfa(1 + rng.below(5), "01", rng);
    for (StateId p = 0; p < d.num_states(); ++p) {
      for (StateId q = 0; q < d.num_states(); ++q) {
        REQUIRE(states_finitely_different(d, p, q, FinitenessProcedure::kDirect) ==
                states_finitely_different(d, p, q, FinitenessProcedure::kMinimizedProduct));
      }
    }
  }
}

TEST_CASE("state_class_partition") {
  using Classes = std::vector<std::vector<StateId>>;
  ClassOptions verify{.verify_all_pairs = true};
  CHECK(state_class_partition(fixtures::onezstar(), verify).classes == Classes{{0}, {1}, {2}});
  CHECK(state_class_partition(fixtures::sigplus(), verify).classes == Classes{{0, 1}});
  auto s0 = state_class_partition(fixtures::single0(), verify);
  CHECK(s0.classes == Classes{{0, 1, 2}});
  CHECK(s0.class_of == std::vector<StateId>{0, 0, 0});
}

TEST_CASE("state classes refine nothing finer than language equality") {
  Lcg rng(42);
  for (int i = 0; i < 150; ++i) {
    Dfa d = random_dfa(1 + rng.below(6), "01", rng);
    auto classes = state_class_partition(d, ClassOptions{.verify_all_pairs = true});
    auto blocks = language_partition(d);
    for (StateId p = 0; p < d.num_states(); ++p) {
      for (StateId q = 0; q < d.num_states(); ++q) {
        if (blocks.same_block(p, q)) REQUIRE(classes.same_class(p, q));
      }
    }
  }
}

TEST_CASE("the memo table answers symmetrically from several threads") {
  Dfa d = fixtures::single0();
  FiniteDifferenceCache cache(d);
  std::vector<std::thread> workers;
  std::atomic<int> wrong{0};
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&] {
      for (StateId p = 0; p < 3; ++p) {
        for (StateId q = 0; q < 3; ++q) {
          if (!cache.query(p, q) || !cache.query(q, p)) ++wrong;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(wrong == 0);
  CHECK(cache.size() == 3);
}

TEST_CASE("signature_equal") {
  auto oe = signature_equal(fixtures::odd(), fixtures::even());
  CHECK(oe.equal);
  CHECK(oe.matched == std::vector<std::pair<StateId, StateId>>{{0, 1}, {1, 0}});
  CHECK_FALSE(dfas_finitely_different(fixtures::odd(), fixtures::even()).finitely_different);

  auto zo = signature_equal(fixtures::zstar(), fixtures::onezstar());
  CHECK_FALSE(zo.equal);
  CHECK(zo.only_in_b == std::vector<StateId>{0});  // the class of 10*
  CHECK(zo.only_in_a.empty());

  auto o = fixtures::onezstar();
  CHECK(signature_equal(o, o).equal);
  CHECK_THROWS_AS(signature_equal(o, Dfa("ab", 1, 0, {true}, {0, 0})), Error);
}

TEST_CASE("dfas_finitely_different") {
  CHECK(dfas_finitely_different(fixtures::sigplus(), fixtures::all()).finitely_different);
  CHECK_FALSE(dfas_finitely_different(fixtures::odd(), fixtures::even()).finitely_different);
  CHECK_FALSE(dfas_finitely_different(fixtures::zstar(), fixtures::onezstar()).finitely_different);
}

TEST_CASE("finite difference implies equal signatures implies isomorphic infinite parts") {
  Lcg rng(2024);
  int finite_pairs = 0;
  for (int i = 0; i < 400; ++i) {
    Dfa a = minimize(random_dfa(1 + rng.below(4), "01", rng));
    Dfa b = i % 2 ? minimize(random_dfa(1 + rng.below(4), "01", rng))
                  : minimize(with_accepting(a, [&] {
                      auto acc = a.accepting();
                      for (StateId q : compute_parts(a).finite_part()) acc[q] = rng.below(2) == 1;
                      return acc;
                    }()));
    bool fd = dfas_finitely_different(a, b).finitely_different;
    bool sig = signature_equal(a, b).equal;
    bool iso = infinite_part_iso(a, b).has_value();
    if (fd) {
      ++finite_pairs;
      REQUIRE(sig);
    }
    if (sig) REQUIRE(iso);
  }
  CHECK(finite_pairs > 100);

  // The converses fail.
  CHECK(signature_equal(fixtures::odd(), fixtures::even()).equal);
  CHECK(infinite_part_iso(fixtures::zstar(), fixtures::onezstar()).has_value());
  CHECK_FALSE(signature_equal(fixtures::zstar(), fixtures::onezstar()).equal);
}
