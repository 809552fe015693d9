#include <doctest.h>

#include "liftbraid/errors.hpp"
#include "liftbraid/hurwitz.hpp"
#include "oracles.hpp"

using namespace liftbraid;

TEST_SUITE("canonicalize") {
  TEST_CASE("already canonical input needs nothing") {
    const auto p3 = MonodromySequence::disk(3);
    const auto r = canonicalize(p3);
    CHECK(r.relabel.is_identity());
    CHECK(r.moves.empty());
    CHECK(r.canonical == p3);

    const MonodromySequence s(3, {{1, 2}, {1, 2}, {2, 3}, {2, 3}});
    const auto q = canonicalize(s);
    CHECK(q.canonical == canonical_target(3, 4, CycleType::make(3, {})));
    CHECK(q.canonical == s);
    CHECK(q.relabel.is_identity());
    CHECK(q.moves.empty());
  }

  TEST_CASE("one move away from canonical") {
    const MonodromySequence s(4, {{2, 3}, {1, 3}, {3, 4}});
    const auto r = canonicalize(s);
    CHECK(r.canonical == MonodromySequence::disk(3));
    CHECK(r.replays(s));
  }

  TEST_CASE("rejects disconnected input") {
    CHECK_THROWS_AS(canonicalize(MonodromySequence(3, {{1, 2}, {1, 2}})), InvalidInput);
  }

  TEST_CASE("a tampered certificate does not replay") {
    const MonodromySequence s(4, {{2, 3}, {1, 3}, {3, 4}});
    auto r = canonicalize(s);
    r.moves.push_back({1, MoveDirection::forward});
    CHECK_FALSE(r.replays(s));
  }

  void check_exhaustive(int d, int max_n) {
    for (int n = 0; n <= max_n; ++n) {
      std::size_t failures = 0, seen = 0;
      oracle::for_each_sequence(d, n, [&](const oracle::Seq& raw) {
        if (!oracle::connected(d, raw)) return;
        ++seen;
        const auto s = oracle::to(d, raw);
        const auto r = canonicalize(s);
        const auto omega = CycleType::make(d, oracle::cycle_type(oracle::product(d, raw)));
        // replay by hand from the raw data
        oracle::Seq replay;
        for (auto [a, b] : raw) replay.emplace_back(r.relabel(a), r.relabel(b));
        for (auto& [a, b] : replay)
          if (a > b) std::swap(a, b);
        replay = oracle::act(d, replay, to_braid(std::max(n, 1), r.moves).letters());
        if (oracle::to(d, replay) != canonical_target(d, n, omega) || !r.replays(s)) ++failures;
      });
      CHECK_MESSAGE(failures == 0, "d=" << d << " n=" << n << " of " << seen);
    }
  }

  TEST_CASE("property: every connected sequence reaches its target with a replaying certificate") {
    for (int d = 1; d <= 4; ++d) check_exhaustive(d, 5);
  }

  TEST_CASE("property: canonicalization on five sheets, up to six branch points") {
    check_exhaustive(5, 6);
  }
}
