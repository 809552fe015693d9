#include <doctest.h>

#include "liftbraid/errors.hpp"
#include "liftbraid/restrict.hpp"
#include "oracles.hpp"

using namespace liftbraid;

namespace {

std::vector<std::vector<int>> nonempty_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    auto& s = out.emplace_back();
    for (int j = 1; j <= n; ++j)
      if (mask & (1 << (j - 1))) s.push_back(j);
  }
  return out;
}

}  // namespace

TEST_SUITE("restrict") {
  TEST_CASE("restriction examples") {
    const auto p3 = MonodromySequence::disk(3);
    CHECK(restrict(p3, RestrictionSpec::make({3}, BasePoint::start)) ==
          MonodromySequence(4, {{1, 2}, {2, 3}}));
    CHECK(restrict(p3, RestrictionSpec::make({3}, BasePoint::end)) ==
          MonodromySequence(4, {{1, 2}, {2, 4}}));
    CHECK(restrict(p3, RestrictionSpec::make({3, 1, 2})).empty());
    CHECK(restrict(p3, RestrictionSpec::make({1, 2, 3}, BasePoint::end)).degree() == 4);
  }

  TEST_CASE("restricted total monodromy examples") {
    const auto p3 = MonodromySequence::disk(3);
    const auto pi = restricted_total_monodromy(p3, RestrictionSpec::make({3}));
    CHECK(cycle_type(pi).parts == std::vector<int>{3});
    CHECK(pi(4) == 4);
    CHECK(restricted_total_monodromy(MonodromySequence(2, {{1, 2}}), RestrictionSpec::make({1}))
              .is_identity());
  }

  TEST_CASE("restriction signatures") {
    const auto p3 = MonodromySequence::disk(3);
    auto sig = restriction_signature(p3, RestrictionSpec::make({3}));
    REQUIRE(sig.count() == 2);
    CHECK(sig.blocks[0].sheets == std::vector<int>{1, 2, 3});
    CHECK(sig.blocks[0].branch_count == 2);
    CHECK(sig.blocks[1].sheets == std::vector<int>{4});
    CHECK(sig.blocks[1].branch_count == 0);

    // at the start base the survivors pass under (1 2); at the end base they stay put
    sig = restriction_signature(p3, RestrictionSpec::make({1}, BasePoint::start));
    REQUIRE(sig.count() == 2);
    CHECK(sig.blocks[0].sheets == std::vector<int>{1, 3, 4});
    CHECK(sig.blocks[0].branch_count == 2);
    CHECK(sig.blocks[1].sheets == std::vector<int>{2});
    sig = restriction_signature(p3, RestrictionSpec::make({1}, BasePoint::end));
    REQUIRE(sig.count() == 2);
    CHECK(sig.blocks[0].sheets == std::vector<int>{1});
    CHECK(sig.blocks[0].branch_count == 0);
    CHECK(sig.blocks[1].sheets == std::vector<int>{2, 3, 4});
    CHECK(sig.blocks[1].branch_count == 2);

    const auto p2 = MonodromySequence::disk(2);
    CHECK(restrict(p2, RestrictionSpec::make({1}, BasePoint::start)) == MonodromySequence(3, {{1, 3}}));
    sig = restriction_signature(p2, RestrictionSpec::make({1}, BasePoint::end));
    REQUIRE(sig.count() == 2);
    CHECK(sig.blocks[0].sheets == std::vector<int>{1});
    CHECK(sig.blocks[0].branch_count == 0);
    CHECK(sig.blocks[1].sheets == std::vector<int>{2, 3});
    CHECK(sig.blocks[1].branch_count == 1);
  }

  TEST_CASE("invalid specs") {
    const auto p3 = MonodromySequence::disk(3);
    CHECK_THROWS_AS(RestrictionSpec::make({}), InvalidInput);
    CHECK_THROWS_AS(RestrictionSpec::make({2, 2}), InvalidInput);
    CHECK_THROWS_AS(restrict(p3, RestrictionSpec::make({4})), InvalidInput);
    CHECK_THROWS_AS(restrict(p3, RestrictionSpec{{2, 1}, BasePoint::start}), InvalidInput);
  }

  TEST_CASE("property: restriction agrees with the oracle and with the total-monodromy identity") {
    for (int d = 2; d <= 4; ++d)
      for (int n = 1; n <= 5; ++n) {
        const auto subsets = nonempty_subsets(n);
        std::size_t bad = 0;
        oracle::for_each_sequence(d, n, [&](const oracle::Seq& raw) {
          const auto s = oracle::to(d, raw);
          const int c = static_cast<int>(components(s).count());
          for (const auto& I : subsets)
            for (bool start : {true, false}) {
              const auto spec = RestrictionSpec::make(I, start ? BasePoint::start : BasePoint::end);
              const auto r = restrict(s, spec);
              if (oracle::from(r) != oracle::restrict(d, raw, I, start)) ++bad;
              if (total_monodromy(r) != restricted_total_monodromy(s, spec)) ++bad;
              const int cr = static_cast<int>(components(r).count());
              if (cr < c || cr > c + static_cast<int>(I.size())) ++bad;
            }
        });
        CHECK_MESSAGE(bad == 0, "d=" << d << " n=" << n);
      }
  }

  TEST_CASE("property: iterated restriction") {
    // restricting by I at the start base, then by the survivors J re-indexed,
    // again at the start base, equals restricting by I u J at once
    std::mt19937 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
      const int d = 2 + trial % 4;
      const int n = 2 + trial % 5;
      const auto raw = oracle::random_sequence(rng, d, n);
      const auto s = oracle::to(d, raw);
      std::vector<int> I, J, union_set, survivors;
      for (int j = 1; j <= n; ++j) (rng() % 2 ? I : survivors).push_back(j);
      if (I.empty() || survivors.empty()) continue;
      std::vector<int> J_reindexed;
      for (std::size_t k = 0; k < survivors.size(); ++k)
        if (rng() % 2) {
          J.push_back(survivors[k]);
          J_reindexed.push_back(static_cast<int>(k) + 1);
        }
      if (J.empty()) continue;
      union_set = I;
      union_set.insert(union_set.end(), J.begin(), J.end());
      for (bool start : {true, false}) {
        const BasePoint b = start ? BasePoint::start : BasePoint::end;
        const auto once = restrict(s, RestrictionSpec::make(union_set, b));
        const auto twice =
            restrict(restrict(s, RestrictionSpec::make(I, b)), RestrictionSpec::make(J_reindexed, b));
        CHECK(once == twice);
      }
    }
  }

  TEST_CASE("property: a connected covering is a disk iff every single cut disconnects it") {
    for (int d = 1; d <= 4; ++d)
      for (int n = 0; n <= 5; ++n)
        oracle::for_each_sequence(d, n, [&](const oracle::Seq& raw) {
          if (!oracle::connected(d, raw)) return;
          const auto s = oracle::to(d, raw);
          bool all_cut = true;
          for (int j = 1; j <= n; ++j)
            for (bool start : {true, false})
              all_cut = all_cut &&
                        !is_connected(restrict(
                            s, RestrictionSpec::make({j}, start ? BasePoint::start : BasePoint::end)));
          CHECK(is_disk(s) == all_cut);
        });
  }
}
