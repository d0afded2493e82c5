#pragma once

#include <utility>
#include <vector>

#include "posort/poset.hpp"
#include "posort/types.hpp"

namespace posort {

/// Bipartite graph whose B-side neighbourhoods are intervals of A positions.
struct BipartiteConvexGraph {
  std::vector<Element> side_a;
  std::vector<Element> side_b;
  std::vector<Interval> nbr;  // nbr[j]: positions in side_a adjacent to side_b[j]

  [[nodiscard]] int size() const noexcept { return static_cast<int>(side_a.size() + side_b.size()); }

  friend bool operator==(const BipartiteConvexGraph&, const BipartiteConvexGraph&) = default;
};

/// Throws std::invalid_argument when an interval leaves the A range.
void validate(const BipartiteConvexGraph& g);

/// Point of the stable set polytope. For a bipartite graph the layout is the
/// A positions followed by the B positions.
struct StabPoint {
  std::vector<Rational> x;

  [[nodiscard]] int size() const noexcept { return static_cast<int>(x.size()); }
  Rational& operator[](std::size_t i) { return x[i]; }
  const Rational& operator[](std::size_t i) const { return x[i]; }

  friend bool operator==(const StabPoint&, const StabPoint&) = default;
};

/// 0 < x_v <= 1 everywhere and x_u + x_v <= 1 on every edge.
bool feasible(const BipartiteConvexGraph& g, const StabPoint& x);

struct KMBlock {
  std::vector<int> a;  // positions in side_a
  std::vector<int> b;  // positions in side_b

  friend bool operator==(const KMBlock&, const KMBlock&) = default;
};

struct KMPartition {
  int num_a = 0;
  int num_b = 0;
  std::vector<KMBlock> blocks;
  double entropy = 0.0;
};

/// Binary entropy in bits.
double binary_entropy(double p);

/// -(1/n) sum log2 x_v.
double point_entropy(const StabPoint& x);

/// x_v = |C_i| / n for v in chain C_i; indexed by element id.
StabPoint greedy_point(const ChainDecomposition& d);

/// Shannon entropy of the chain-size distribution.
double chain_size_entropy(const ChainDecomposition& d);

/// Largest A side accepted by km_partition_bruteforce.
inline constexpr int kMaxBruteForceSide = 15;

/// Reference partition: every subset of the residual A side is tried.
/// Throws TooLargeError above kMaxBruteForceSide.
KMPartition km_partition_bruteforce(const BipartiteConvexGraph& g);

StabPoint km_to_point(const KMPartition& part);

/// Exact partition by ratio bisection and b-matching.
std::pair<KMPartition, StabPoint> convex_bipartite_entropy(const BipartiteConvexGraph& g);

/// sum over blocks of (|A_i|+|B_i|)/n * h(|A_i|/(|A_i|+|B_i|)).
double partition_entropy(const KMPartition& part);

/// H(greedy point) <= (1+eps) H_exact + (1+eps) log2(1 + 1/eps), with 1e-9 slack.
bool greedy_entropy_bound_check(const ChainDecomposition& d, double h_exact, double eps);

/// Incomparability graph between chain `a` and the elements of `rest`.
BipartiteConvexGraph chain_vs_rest_graph(const Poset& p, const Chain& a, const std::vector<Element>& rest);

}  // namespace posort
