#include <doctest.h>

#include "liftbraid/errors.hpp"
#include "liftbraid/hurwitz.hpp"
#include "liftbraid/lift.hpp"
#include "liftbraid/orbit.hpp"
#include "oracles.hpp"

using namespace liftbraid;

TEST_SUITE("orbit") {
  TEST_CASE("orbit of p_2") {
    const auto p2 = MonodromySequence::disk(2);
    const auto t = hurwitz_orbit(p2);
    REQUIRE(t.size() == 3);
    CHECK(t.elements()[0] == p2);
    CHECK(t.find(MonodromySequence(3, {{2, 3}, {1, 3}})) >= 0);
    CHECK(t.find(MonodromySequence(3, {{1, 3}, {1, 2}})) >= 0);
    CHECK(t.find(MonodromySequence(3, {{1, 2}, {1, 2}})) == -1);
    for (std::size_t k = 0; k < t.size(); ++k) CHECK(act(p2, t.tree_word(k)) == t.elements()[k]);
  }

  TEST_CASE("orbit sizes and bounds") {
    CHECK(stabilizer_index(MonodromySequence(2, {{1, 2}})) == 1);
    CHECK(stabilizer_index(MonodromySequence::disk(2)) == 3);
    CHECK(index_bound(3, 2) == 9);
    CHECK(stabilizer_index(MonodromySequence::disk(3)) == 16);
    CHECK(index_bound(4, 3) == 216);
    CHECK(stabilizer_index(MonodromySequence::disk(4)) == 125);
    CHECK(index_bound(1, 0) == 1);
    CHECK(index_bound(60, 40) == kNoCap);
    CHECK_THROWS_AS(hurwitz_orbit(MonodromySequence::disk(3), 10), CapExceeded);
    try {
      hurwitz_orbit(MonodromySequence::disk(3), 10);
    } catch (const CapExceeded& e) {
      CHECK(e.cap() == 10);
    }
  }

  TEST_CASE("Schreier generators") {
    CHECK(schreier_generators(MonodromySequence::disk(2)) ==
          std::vector<BraidWord>{BraidWord(2, {1, 1, 1})});
    CHECK(schreier_generators(MonodromySequence(2, {{1, 2}})).empty());
    const auto p3 = MonodromySequence::disk(3);
    for (const auto& w : schreier_generators(p3)) CHECK(is_liftable(p3, w));
  }

  TEST_CASE("classification examples") {
    const auto c43 = classify_all(4, 3);
    CHECK(c43.total == 216);
    CHECK(c43.connected == 96);
    int connected_classes = 0;
    for (const auto& k : c43.classes)
      if (k.connected) {
        ++connected_classes;
        CHECK(k.omega.parts == std::vector<int>{4});
        CHECK(k.representative == MonodromySequence(4, {{1, 2}, {1, 3}, {1, 4}}));
      }
    CHECK(connected_classes == 1);

    const auto c22 = classify_all(2, 2);
    REQUIRE(c22.classes.size() == 1);
    CHECK(c22.classes[0].representative == MonodromySequence(2, {{1, 2}, {1, 2}}));
    CHECK(c22.classes[0].omega.is_identity());
    CHECK(c22.classes[0].count == 1);

    CHECK_THROWS_AS(classify_all(4, 5, 1000), CapExceeded);
  }

  TEST_CASE("property: coset soundness of tree words") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      const int d = 2 + trial % 3;
      const int n = 2 + trial % 3;
      const auto s = oracle::to(d, oracle::random_connected(rng, d, n));
      const auto t = hurwitz_orbit(s);
      CHECK(t.size() == oracle::orbit_size(d, oracle::from(s)));
      for (std::size_t u = 0; u < t.size(); ++u)
        for (std::size_t v = 0; v < t.size(); ++v)
          CHECK(is_liftable(s, t.tree_word(u) * t.tree_word(v).inverse()) == (u == v));
    }
  }

  TEST_CASE("property: connected classes are determined by degree, length and omega") {
    for (int d = 1; d <= 4; ++d)
      for (int n = 0; n <= 5; ++n) {
        const auto c = classify_all(d, n);
        std::set<std::vector<int>> omegas;
        std::uint64_t members = 0;
        std::size_t connected_classes = 0;
        for (const auto& k : c.classes) {
          if (!k.connected) continue;
          ++connected_classes;
          members += k.count;
          omegas.insert(k.omega.parts);
        }
        std::uint64_t brute = 0;
        oracle::for_each_sequence(d, n, [&](const oracle::Seq& raw) { brute += oracle::connected(d, raw); });
        CHECK(members == brute);
        CHECK(c.connected == brute);
        CHECK_MESSAGE(connected_classes == omegas.size(), "d=" << d << " n=" << n);
      }
  }

  TEST_CASE("property: orbit sizes respect the bound") {
    for (int d = 2; d <= 4; ++d)
      for (int n = 1; n <= 4; ++n)
        oracle::for_each_sequence(d, n, [&](const oracle::Seq& raw) {
          CHECK(stabilizer_index(oracle::to(d, raw)) <= index_bound(d, n));
        });
  }
}
