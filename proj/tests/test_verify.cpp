#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"

using namespace posort;

TEST_CASE("width-2 enumeration") {
  std::size_t count = 0;
  for_each_width2_poset(3, [&](const Width2Instance& inst) {
    CHECK(inst.poset.size() == 3);
    CHECK(inst.poset.is_chain(inst.a));
    CHECK(inst.poset.is_chain(inst.b));
    ++count;
  });
  CHECK(count > 0);

  // every poset of width <= 2 on 5 elements shows up
  std::set<std::uint64_t> seen;
  for_each_width2_poset(5, [&](const Width2Instance& inst) { seen.insert(canonical_code(inst.poset)); });
  std::size_t width2 = 0;
  for (const Poset& p : nonisomorphic_posets(5)) {
    if (find_two_chain_cover(p).has_value()) {
      ++width2;
      CHECK(seen.count(canonical_code(p)) == 1);
    }
  }
  CHECK(seen.size() == width2);
}

TEST_CASE("non-isomorphic poset counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 5, 16, 63, 318, 2045};
  for (int n = 0; n <= 7; ++n) CHECK(nonisomorphic_posets(n).size() == expected[n]);
  CHECK_THROWS_AS(nonisomorphic_posets(9), TooLargeError);
}

TEST_CASE("canonical code is invariant under relabelling") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Poset p = random_poset(8, 0.3, rng());
    std::vector<Element> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<Element, Element>> pairs;
    for (const auto& [u, v] : p.relations()) pairs.emplace_back(perm[u], perm[v]);
    CHECK(canonical_code(p) == canonical_code(transitive_closure(pairs, 8)));
  }
}

TEST_CASE("random width-2 posets") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_width2_poset(1 + static_cast<int>(rng() % 30), rng);
    CHECK_NOTHROW(build_two_chain_cover(inst.poset, inst.a, inst.b));
  }
}

TEST_CASE("verification sweep") {
  VerifyOptions small;
  small.max_n = 1;
  CHECK(verify_bounds(small).ok());

  VerifyOptions opts;
  opts.max_n = 5;
  const auto report = verify_bounds(opts);
  CHECK(report.ok());
  CHECK(report.checks.size() >= 10);
  for (const auto& c : report.checks) {
    CHECK(c.instances > 0);
    CHECK(c.violations == 0);
  }

  VerifyOptions big;
  big.max_n = 11;
  CHECK_THROWS_AS(verify_bounds(big), std::invalid_argument);
}
