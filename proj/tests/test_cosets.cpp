#include <doctest.h>

#include "liftbraid/cosets.hpp"
#include "liftbraid/errors.hpp"
#include "liftbraid/hurwitz.hpp"
#include "liftbraid/lift.hpp"
#include "liftbraid/orbit.hpp"
#include "oracles.hpp"

using namespace liftbraid;

TEST_SUITE("cosets") {
  TEST_CASE("presentation") {
    const auto p = braid_presentation(4);
    CHECK(p.generators == 3);
    CHECK(p.relators.size() == 3);
    CHECK(p.relators[0] == std::vector<int>{1, 2, 1, -2, -1, -2});
    CHECK(p.relators[2] == std::vector<int>{1, 3, -1, -3});
    CHECK(braid_presentation(1).relators.empty());
  }

  TEST_CASE("small indices") {
    CHECK(todd_coxeter(2, {BraidWord(2, {1, 1, 1})}, 100).index == 3);
    CHECK(todd_coxeter(2, {BraidWord(2, {1})}, 100).index == 1);
    CHECK(todd_coxeter(1, {}, 1).index == 1);
    CHECK(todd_coxeter(3, theorem_c_generators(3), 10000).index == 16);
    CHECK(todd_coxeter(3, {BraidWord(3, {1}), BraidWord(3, {2})}, 100).index == 1);
    // the pure braid group has index 3! = 6
    CHECK(todd_coxeter(3, {BraidWord(3, {1, 1}), BraidWord(3, {2, 2}), BraidWord(3, {2, 1, 1, -2})},
                       1000)
              .index == 6);
  }

  TEST_CASE("complete tables satisfy every relator and fix the subgroup") {
    const auto gens = theorem_c_generators(4);
    const auto e = todd_coxeter(4, gens, 100000);
    CHECK(e.index == 125);
    const auto p = braid_presentation(4);
    for (int c = 0; c < static_cast<int>(e.table.size()); ++c)
      for (const auto& r : p.relators) CHECK(e.table.follow(c, BraidWord(4, r)) == c);
    for (const auto& w : gens) CHECK(e.table.follow(0, w) == 0);
  }

  TEST_CASE("whole group and trivial subgroup") {
    for (int n = 2; n <= 5; ++n) {
      std::vector<BraidWord> all;
      for (int i = 1; i < n; ++i) all.push_back(BraidWord::generator(n, i));
      CHECK(todd_coxeter(n, all, 10).index == 1);
      CHECK_THROWS_AS(todd_coxeter(n, {}, 500), Inconclusive);
    }
  }

  TEST_CASE("verification of the generating set") {
    const auto r1 = verify_theorem_c(1);
    CHECK(r1.pass);
    CHECK(r1.generator_count == 0);
    CHECK(*r1.tc_index == 1);
    const auto r2 = verify_theorem_c(2);
    CHECK(r2.pass);
    CHECK(r2.orbit_index == 3);
    CHECK(*r2.tc_index == 3);
    const auto r3 = verify_theorem_c(3);
    CHECK(r3.pass);
    CHECK(r3.generators_liftable);
    CHECK(r3.orbit_index == 16);
    CHECK(*r3.tc_index == 16);
    CHECK_THROWS_AS(verify_theorem_c(4, 50), Inconclusive);
  }

  TEST_CASE("exploratory interval powers") {
    const auto p3 = MonodromySequence::disk(3);
    const auto gens = interval_power_generators(p3, 1);
    for (const auto& w : gens) CHECK(is_liftable(p3, w));
    const auto r = verify_interval_generation(p3, 1);
    CHECK(r.orbit_index == 16);
    CHECK(r.generates);
    const MonodromySequence s(3, {{1, 2}, {1, 2}, {2, 3}, {2, 3}});
    for (const auto& w : interval_power_generators(s, 2)) CHECK(is_liftable(s, w));
  }

  TEST_CASE("property: Schreier generators enumerate to the orbit index") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
      const int d = 2 + trial % 3;
      const int n = std::max(d - 1, 2 + (trial / 3) % 3);
      const auto s = oracle::to(d, oracle::random_connected(rng, d, n));
      const auto gens = schreier_generators(s);
      for (const auto& w : gens) CHECK(is_liftable(s, w));
      CHECK(todd_coxeter(n, gens, 64 * index_bound(d, n)).index == stabilizer_index(s));
    }
  }
}
