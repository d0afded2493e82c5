#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"

using namespace posort;
using testing::chain;
using testing::make;

namespace {

StabPoint point(std::vector<Rational> x) { return StabPoint{std::move(x)}; }

Rational r(std::int64_t a, std::int64_t b) { return {a, b}; }

// A = (0,1,2), B = (3,4,5); a0 || b0,b1; a1 || b1; a2 || b2.
Poset capped_instance() {
  return make(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 5}, {3, 1}, {1, 5}, {4, 2}});
}

}  // namespace

TEST_CASE("two-chain cover") {
  const auto c2 = build_two_chain_cover(chain(2), {0, 1}, {});
  CHECK(c2.inc_a[0].empty());
  CHECK(c2.inc_a[1].empty());

  const auto anti = build_two_chain_cover(make(2, {}), {0}, {1});
  CHECK(anti.inc_a[0] == Interval{0, 0});
  CHECK(anti.inc_b[0] == Interval{0, 0});

  const auto g = build_two_chain_cover(make(3, {{0, 1}, {0, 2}}), {0, 1}, {2});
  CHECK(g.inc_a[0].empty());
  CHECK(g.inc_a[1] == Interval{0, 0});
  CHECK(g.inc_b[0] == Interval{1, 1});

  CHECK_THROWS_AS(build_two_chain_cover(make(3, {}), {0, 1}, {2}), InvalidCoverError);
  CHECK_THROWS_AS(build_two_chain_cover(chain(3), {0, 1}, {1, 2}), InvalidCoverError);
  CHECK_THROWS_AS(build_two_chain_cover(chain(3), {0, 1}, {}), InvalidCoverError);
}

TEST_CASE("cover from bounds and swapping") {
  const Poset p = capped_instance();
  const auto g = build_two_chain_cover(p, {0, 1, 2}, {3, 4, 5});
  CHECK(cover_from_bounds(g.a, g.b, {0, 1, 2}, {2, 2, 3}) == g);
  const auto s = g.swapped();
  CHECK(s.a == g.b);
  CHECK(s.inc_a == g.inc_b);
  CHECK(s.swapped() == g);
  CHECK(build_two_chain_cover(p, {3, 4, 5}, {0, 1, 2}) == s);
}

TEST_CASE("finding a two-chain cover") {
  CHECK_FALSE(find_two_chain_cover(make(3, {})).has_value());
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_width2_poset(1 + static_cast<int>(rng() % 14), rng);
    const auto cover = find_two_chain_cover(inst.poset);
    REQUIRE(cover.has_value());
    CHECK_NOTHROW(build_two_chain_cover(inst.poset, cover->first, cover->second));
  }
}

TEST_CASE("tight components") {
  const auto anti = build_two_chain_cover(make(2, {}), {0}, {1});
  const auto tc = build_tight_components(anti, point({r(1, 2), r(1, 2)}));
  REQUIRE(tc.comps.size() == 1);
  CHECK(tc.comps[0].a == Interval{0, 0});
  CHECK(tc.comps[0].b == Interval{0, 0});
  CHECK(tc.comps[0].color == Color::red);
  CHECK(tc.unbalanced.empty());
  CHECK(tc.good == std::vector<int>{0});

  const auto ch = build_two_chain_cover(chain(3), {0, 1, 2}, {});
  CHECK(build_tight_components(ch, point({1, 1, 1})).comps.empty());

  // a0 || b0, a1 || b1, a0 < b1, b0 < a1
  const Poset two = make(4, {{0, 1}, {2, 3}, {0, 3}, {2, 1}});
  const auto g2 = build_two_chain_cover(two, {0, 1}, {2, 3});
  const auto tc2 = build_tight_components(g2, point({r(1, 2), r(1, 2), r(1, 2), r(1, 2)}));
  REQUIRE(tc2.comps.size() == 2);
  CHECK(tc2.comps[0].a == Interval{0, 0});
  CHECK(tc2.comps[1].a == Interval{1, 1});
  CHECK(tc2.graph_components.size() == 2);

  CHECK_THROWS_AS(build_tight_components(anti, point({r(1, 3), r(1, 2)})), StructureError);
  CHECK_THROWS_AS(build_tight_components(anti, point({r(2, 3), r(1, 2)})), StructureError);

  // b0 is incomparable to all of a0 < a1 < a2; a1 is lighter than its chain neighbours
  const auto g3 = build_two_chain_cover(make(4, {{0, 1}, {1, 2}}), {0, 1, 2}, {3});
  CHECK_THROWS_AS(build_tight_components(g3, point({r(1, 2), r(1, 4), r(1, 2), r(1, 2)})), StructureError);
}

TEST_CASE("slack") {
  const auto anti = build_two_chain_cover(make(2, {}), {0}, {1});
  const auto x = point({r(2, 5), r(3, 5)});
  const auto tc = build_tight_components(anti, x);
  CHECK(tc.unbalanced == std::vector<int>{0});
  CHECK(slack(0, tc, anti, x) == r(1, 10));

  const auto y = point({r(1, 2), r(1, 2)});
  CHECK(slack(0, build_tight_components(anti, y), anti, y) == 0);

  const auto g = build_two_chain_cover(capped_instance(), {0, 1, 2}, {3, 4, 5});
  const auto z = point({r(1, 5), r(2, 5), r(1, 2), r(4, 5), r(3, 5), r(1, 2)});
  const auto tz = build_tight_components(g, z);
  REQUIRE(tz.comps.size() == 3);
  const Rational s = slack(0, tz, g, z);
  CHECK(s == r(1, 5));
  CHECK(s < r(1, 2) - r(1, 5));
}

TEST_CASE("rebalance") {
  const auto anti = build_two_chain_cover(make(2, {}), {0}, {1});
  const auto y = point({r(1, 2), r(1, 2)});
  const auto [same, tsame] = rebalance(anti, y, build_tight_components(anti, y));
  CHECK(same == y);

  const auto x = point({r(2, 5), r(3, 5)});
  const auto [bal, tbal] = rebalance(anti, x, build_tight_components(anti, x));
  CHECK(bal == y);
  CHECK(tbal.unbalanced.empty());

  const auto g = build_two_chain_cover(capped_instance(), {0, 1, 2}, {3, 4, 5});
  const auto z = point({r(1, 5), r(2, 5), r(1, 2), r(4, 5), r(3, 5), r(1, 2)});
  const auto [merged, tc] = rebalance(g, z, build_tight_components(g, z));
  REQUIRE(tc.comps.size() == 2);
  CHECK(tc.comps[0].a == Interval{0, 1});
  CHECK(tc.comps[0].b == Interval{0, 1});
  CHECK(tc.comps[0].xa == r(1, 2));
  CHECK(tc.unbalanced.empty());
  CHECK(point_entropy(merged) <= point_entropy(z));
}

TEST_CASE("red contribution") {
  const auto ch = build_two_chain_cover(chain(2), {0, 1}, {});
  const auto one = point({1, 1});
  const auto none = red_contribution(one, build_tight_components(ch, one), 2);
  CHECK(none.first == 0.0);
  CHECK(none.second == 0.0);

  const auto anti = build_two_chain_cover(make(2, {}), {0}, {1});
  const auto half = point({r(1, 2), r(1, 2)});
  const auto [red, blue] = red_contribution(half, build_tight_components(anti, half), 2);
  CHECK(red == doctest::Approx(1.0));
  CHECK(blue == 0.0);

  // red ({a0,a1},{b0}) below blue ({a2},{b1,b2})
  const Poset p = make(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}, {3, 2}});
  const auto g = build_two_chain_cover(p, {0, 1, 2}, {3, 4, 5});
  const auto x = point({r(2, 3), r(2, 3), r(1, 3), r(1, 3), r(2, 3), r(2, 3)});
  const auto tc = build_tight_components(g, x);
  REQUIRE(tc.comps.size() == 2);
  CHECK(tc.comps[0].color == Color::red);
  CHECK(tc.comps[1].color == Color::blue);
  const auto [rc, bc] = red_contribution(x, tc, 6);
  CHECK(rc == doctest::Approx(bc));
}

TEST_CASE("mupi core on tiny inputs") {
  const Poset anti = make(2, {});
  const auto g = build_two_chain_cover(anti, {0}, {1});
  HiddenOrderOracle o({1, 0}, anti);
  LinearOrder out(2, -1);
  const auto res = mupi_core(g, point({r(1, 2), r(1, 2)}), o, out, {true});
  CHECK(res.order == LinearOrder{1, 0});
  CHECK(res.comparisons == 1);
  CHECK(3 * 2 * res.initial_entropy == doctest::Approx(6.0));

  const auto ch = build_two_chain_cover(chain(3), {0, 1, 2}, {});
  HiddenOrderOracle oc({0, 1, 2}, chain(3));
  LinearOrder out3(3, -1);
  emit_cut_points(ch, out3);
  CHECK(out3 == LinearOrder{0, 1, 2});
  CHECK(mupi_core(ch, point({1, 1, 1}), oc, out3).comparisons == 0);

  HiddenOrderOracle o2({0, 1}, anti);
  CHECK_THROWS_AS(mupi_core(g, point({r(2, 5), r(3, 5)}), o2, LinearOrder(2, -1)), std::invalid_argument);
}

TEST_CASE("mupi entry point") {
  const Poset total = chain(4);
  HiddenOrderOracle o({0, 1, 2, 3}, total);
  const auto res = mupi(total, {0, 1}, {2, 3}, o);
  CHECK(res.order == LinearOrder{0, 1, 2, 3});
  CHECK(res.comparisons == 0);

  const Poset anti = make(2, {});
  HiddenOrderOracle oa({0, 1}, anti);
  const auto ra = mupi(anti, {0}, {1}, oa);
  CHECK(ra.order == LinearOrder{0, 1});
  CHECK(ra.comparisons == 1);
  CHECK(ra.swapped);

  // A star a0,a1 || b0 is red only; the chains are exchanged
  const Poset star = make(3, {{0, 1}});
  const auto setup = prepare_mupi(star, {0, 1}, {2});
  CHECK(setup.swapped);
  HiddenOrderOracle os({0, 2, 1}, star);
  CHECK(run_mupi(setup, os, {true}).order == LinearOrder{0, 2, 1});
}

TEST_CASE("mupi on every small width-2 poset with invariant checks") {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 7; ++n) {
    for_each_width2_poset(n, [&](const Width2Instance& inst) {
      const double log_e = log2_linear_extensions(inst.poset);
      const auto setup = prepare_mupi(inst.poset, inst.a, inst.b);
      for_each_linear_extension(inst.poset, [&](const LinearOrder& order) {
        HiddenOrderOracle o(order, inst.poset);
        const auto res = run_mupi(setup, o, {true});
        REQUIRE(res.order == order);
        CHECK(res.comparisons <= 6 * log_e + 1e-9);
        CHECK(res.comparisons <= 3 * n * res.initial_entropy + 1e-9);
      });
    });
  }
}

TEST_CASE("mupi on random width-2 posets") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 120);
    const auto inst = random_width2_poset(n, rng);
    const auto order = sample_linear_extension(inst.poset, rng);
    HiddenOrderOracle o(order, inst.poset);
    const auto res = mupi(inst.poset, inst.a, inst.b, o, {n <= 60});
    REQUIRE(res.order == order);
    CHECK(res.comparisons <= 3 * n * res.initial_entropy + 1e-9);
  }
}

TEST_CASE("mupi on many small random width-2 posets") {
  for (int n = 2; n <= 24; ++n) {
    std::mt19937_64 rng(n);
    for (int trial = 0; trial < 300; ++trial) {
      const auto inst = random_width2_poset(n, rng);
      const auto order = sample_linear_extension(inst.poset, rng);
      HiddenOrderOracle o(order, inst.poset);
      const auto res = mupi(inst.poset, inst.a, inst.b, o, {true});
      REQUIRE(res.order == order);
      CHECK(res.comparisons <= 6 * log2_linear_extensions(inst.poset) + 1e-9);
    }
  }
}
