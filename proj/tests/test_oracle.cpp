#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace posort;
using testing::chain;
using testing::make;
using testing::small_example;

TEST_CASE("hidden order oracle") {
  const Poset anti = make(3, {});
  HiddenOrderOracle o({2, 0, 1}, anti);
  CHECK(o.answer(2, 0));
  CHECK_FALSE(o.answer(1, 0));
  CHECK(o.answer(1, 1));
  CHECK(o.query_count() == 3);
  CHECK(o.rank(2) == 0);

  CHECK_THROWS_AS(HiddenOrderOracle({1, 0}, chain(2)), NotAnExtensionError);
  CHECK_THROWS_AS(HiddenOrderOracle({0, 0, 1}, anti), NotAnExtensionError);
  CHECK_THROWS_AS(HiddenOrderOracle({0, 1}, anti), NotAnExtensionError);
}

TEST_CASE("relabelled source forwards and counts") {
  HiddenOrderOracle inner({3, 1, 2, 0}, make(4, {}));
  RelabelledSource local(inner, {0, 3});
  CHECK_FALSE(local.answer(0, 1));
  CHECK(local.query_count() == 1);
  CHECK(inner.query_count() == 1);
}

TEST_CASE("level intervals") {
  const auto anti = level_intervals(make(3, {}));
  for (const auto& iv : anti) {
    CHECK(iv.lo == 0);
    CHECK(iv.hi == 1);
  }
  const auto ch = level_intervals(chain(3));
  CHECK(ch[0] == OpenInterval{0, BigRational(1, 3)});
  CHECK(ch[1] == OpenInterval{BigRational(1, 3), BigRational(2, 3)});
  CHECK(ch[2] == OpenInterval{BigRational(2, 3), 1});

  const auto ex = level_intervals(small_example());
  CHECK(ex[0] == OpenInterval{0, BigRational(1, 2)});
  CHECK(ex[1] == OpenInterval{0, BigRational(1, 2)});
  CHECK(ex[2] == OpenInterval{BigRational(1, 2), 1});
  CHECK(ex[3] == OpenInterval{BigRational(1, 2), 1});

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Poset p = random_poset(10, 0.25, seed);
    CHECK(intervals_consistent(p, level_intervals(p)));
  }
}

TEST_CASE("interval adversary") {
  const Poset anti = make(2, {});
  AdversaryOracle adv(anti, level_intervals(anti));
  CHECK(adv.answer(0, 1));
  CHECK(adv.intervals()[0] == OpenInterval{0, BigRational(1, 2)});
  CHECK(adv.intervals()[1] == OpenInterval{BigRational(1, 2), 1});
  CHECK(adv.answer(1, 1));
  CHECK(adv.intervals()[1] == OpenInterval{BigRational(1, 2), 1});
  CHECK_FALSE(adv.answer(1, 0));
  CHECK(adv.query_count() == 3);
  CHECK(adv.consistent());

  IntervalCollection bad{{BigRational(1, 2), 1}, {0, BigRational(1, 2)}};
  CHECK_THROWS_AS(AdversaryOracle(chain(2), bad), std::invalid_argument);
}

TEST_CASE("adversary stays consistent under random queries") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Poset p = random_poset(8, 0.2, rng());
    AdversaryOracle adv(p, level_intervals(p));
    for (int q = 0; q < 40; ++q) {
      const auto u = static_cast<Element>(rng() % 8);
      const auto v = static_cast<Element>(rng() % 8);
      const bool yes = adv.answer(u, v);
      if (u != v && p.less(u, v)) CHECK(yes);
      if (u != v && p.less(v, u)) CHECK_FALSE(yes);
      REQUIRE(adv.consistent());
    }
  }
}
