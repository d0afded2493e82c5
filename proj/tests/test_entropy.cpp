#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"

using namespace posort;
using testing::chain;
using testing::make;

namespace {

BipartiteConvexGraph graph(int na, std::vector<Interval> nbr) {
  BipartiteConvexGraph g;
  for (int i = 0; i < na; ++i) g.side_a.push_back(i);
  for (std::size_t j = 0; j < nbr.size(); ++j) g.side_b.push_back(na + static_cast<int>(j));
  g.nbr = std::move(nbr);
  return g;
}

BipartiteConvexGraph random_graph(std::mt19937_64& rng, int max_a, int max_b) {
  const int na = 1 + static_cast<int>(rng() % max_a);
  const int nb = static_cast<int>(rng() % (max_b + 1));
  std::vector<Interval> nbr;
  for (int j = 0; j < nb; ++j) {
    if (rng() % 6 == 0) {
      nbr.push_back({0, -1});
      continue;
    }
    int f = static_cast<int>(rng() % na);
    int l = static_cast<int>(rng() % na);
    if (f > l) std::swap(f, l);
    nbr.push_back({f, l});
  }
  return graph(na, nbr);
}

}  // namespace

TEST_CASE("point entropy") {
  CHECK(point_entropy(StabPoint{{1, 1, 1, 1}}) == doctest::Approx(0.0));
  CHECK(point_entropy(StabPoint{{Rational(1, 2), Rational(1, 2)}}) == doctest::Approx(1.0));
  CHECK(point_entropy(StabPoint{{Rational(2, 3), Rational(2, 3), Rational(1, 3)}}) ==
        doctest::Approx(0.918295834).epsilon(1e-9));
  CHECK(binary_entropy(1.0 / 3) == doctest::Approx(0.918295834).epsilon(1e-9));
}

TEST_CASE("greedy point and chain-size entropy") {
  CHECK(greedy_point(ChainDecomposition{{{0, 1, 2}}}).x == std::vector<Rational>{1, 1, 1});
  CHECK(greedy_point(ChainDecomposition{{{0}, {1}, {2}}}).x ==
        std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  CHECK(greedy_point(ChainDecomposition{{{0, 2}, {1}, {3}}}).x ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 2), Rational(1, 4)});
  const auto d = greedy_chain_decomposition(testing::small_example());
  CHECK(greedy_point(d).x == std::vector<Rational>(4, Rational(1, 2)));

  CHECK(chain_size_entropy(ChainDecomposition{{{0, 1, 2}}}) == doctest::Approx(0.0));
  CHECK(chain_size_entropy(ChainDecomposition{{{0}, {1}, {2, 3}}}) == doctest::Approx(1.5));
  CHECK(chain_size_entropy(ChainDecomposition{{{0}, {1}, {2}, {3}, {4}, {5}, {6}, {7}}}) == doctest::Approx(3.0));
}

TEST_CASE("brute-force partition examples") {
  const auto edge = km_partition_bruteforce(graph(1, {{0, 0}}));
  REQUIRE(edge.blocks.size() == 1);
  CHECK(edge.blocks[0] == KMBlock{{0}, {0}});
  CHECK(edge.entropy == doctest::Approx(1.0));
  CHECK(km_to_point(edge).x == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

  const auto star = km_partition_bruteforce(graph(2, {{0, 1}}));
  REQUIRE(star.blocks.size() == 1);
  CHECK(star.blocks[0] == KMBlock{{0, 1}, {0}});
  CHECK(star.entropy == doctest::Approx(binary_entropy(1.0 / 3)));
  CHECK(km_to_point(star).x == std::vector<Rational>{Rational(2, 3), Rational(2, 3), Rational(1, 3)});

  const auto empty = km_partition_bruteforce(graph(3, {{0, -1}}));
  CHECK(empty.blocks.size() == 4);
  CHECK(empty.entropy == doctest::Approx(0.0));
  CHECK(km_to_point(empty).x == std::vector<Rational>{1, 1, 1, 1});

  std::vector<Interval> wide(1, {0, 15});
  CHECK_THROWS_AS(km_partition_bruteforce(graph(16, wide)), TooLargeError);
}

TEST_CASE("block ratios are non-increasing") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto part = km_partition_bruteforce(random_graph(rng, 7, 7));
    for (std::size_t i = 1; i < part.blocks.size(); ++i) {
      const auto& p = part.blocks[i - 1];
      const auto& q = part.blocks[i];
      // |A_p| / |B_p| >= |A_q| / |B_q|, with x/0 treated as infinite
      CHECK(p.a.size() * q.b.size() >= q.a.size() * p.b.size());
    }
  }
}

TEST_CASE("convex entropy examples") {
  CHECK(convex_bipartite_entropy(graph(1, {{0, 0}})).first.entropy == doctest::Approx(1.0));
  CHECK(convex_bipartite_entropy(graph(2, {{0, 1}})).first.entropy == doctest::Approx(binary_entropy(1.0 / 3)));
  const auto [part, x] = convex_bipartite_entropy(graph(3, {{0, -1}, {0, -1}}));
  CHECK(part.entropy == doctest::Approx(0.0));
  CHECK(x.x == std::vector<Rational>(5, Rational(1)));
  CHECK_THROWS_AS(convex_bipartite_entropy(graph(2, {{0, 2}})), std::invalid_argument);
}

TEST_CASE("convex entropy agrees with brute force on random graphs") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto g = random_graph(rng, 12, 12);
    const auto brute = km_partition_bruteforce(g);
    const auto [fast, x] = convex_bipartite_entropy(g);
    REQUIRE(fast.blocks == brute.blocks);
    CHECK(std::abs(fast.entropy - brute.entropy) <= 1e-12);
    CHECK(feasible(g, x));
    CHECK(point_entropy(x) == doctest::Approx(fast.entropy).epsilon(1e-12));
  }
}

TEST_CASE("adding an edge never lowers the entropy") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    auto g = random_graph(rng, 8, 8);
    if (g.side_b.empty()) continue;
    const double before = convex_bipartite_entropy(g).first.entropy;
    const int na = static_cast<int>(g.side_a.size());
    auto& iv = g.nbr[rng() % g.nbr.size()];
    if (iv.empty()) {
      iv = {static_cast<int>(rng() % na), 0};
      iv.last = iv.first;
    } else if (iv.first > 0) {
      --iv.first;
    } else if (iv.last + 1 < na) {
      ++iv.last;
    } else {
      continue;
    }
    CHECK(convex_bipartite_entropy(g).first.entropy >= before - 1e-12);
  }
}

TEST_CASE("greedy entropy bound") {
  CHECK(greedy_entropy_bound_check(ChainDecomposition{{{0, 1, 2}}}, 0.0, 1.0));
  CHECK(greedy_entropy_bound_check(ChainDecomposition{{{0}, {1}, {2}, {3}}}, 2.0, 1.0));
  for (int n = 1; n <= 8; ++n) {
    for_each_width2_poset(n, [&](const Width2Instance& inst) {
      const auto cover = build_two_chain_cover(inst.poset, inst.a, inst.b);
      const double h = convex_bipartite_entropy(cover.graph()).first.entropy;
      const auto d = greedy_chain_decomposition(inst.poset);
      CHECK(greedy_entropy_bound_check(d, h, 0.35));
      CHECK(greedy_entropy_bound_check(d, h, 1.0));
    });
  }
}

TEST_CASE("width-2 entropy against log e(P)") {
  const double log2e = std::log2(std::exp(1.0));
  int checked = 0;
  for (int n = 1; n <= 8; ++n) {
    for_each_width2_poset(n, [&](const Width2Instance& inst) {
      const auto cover = build_two_chain_cover(inst.poset, inst.a, inst.b);
      const double nh = n * convex_bipartite_entropy(cover.graph()).first.entropy;
      const double le = log2_linear_extensions(inst.poset);
      CHECK(le <= nh + 1e-9);
      CHECK(nh <= 2 * le + 1e-9);
      CHECK(nh <= le + n * log2e + 1e-9);
      ++checked;
    });
  }
  CHECK(checked > 3000);

  const Poset anti = make(2, {});
  const auto cover = build_two_chain_cover(anti, {0}, {1});
  CHECK(2 * convex_bipartite_entropy(cover.graph()).first.entropy == doctest::Approx(2.0));
}

TEST_CASE("chain versus rest graph") {
  const Poset p = testing::small_example();
  const auto g = chain_vs_rest_graph(p, {0, 2}, {1, 3});
  CHECK(g.nbr[0] == Interval{0, 0});  // b is incomparable to a only
  CHECK(g.nbr[1] == Interval{0, 1});  // d is incomparable to a and c
}
