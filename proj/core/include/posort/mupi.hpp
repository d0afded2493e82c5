#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "posort/entropy.hpp"
#include "posort/oracle.hpp"
#include "posort/poset.hpp"
#include "posort/types.hpp"

namespace posort {

/// A poset of width <= 2 split into chains A and B, with the incomparability
/// interval of every vertex in the opposite chain.
struct TwoChainCover {
  Chain a;
  Chain b;
  std::vector<Interval> inc_a;  // inc_a[i]: positions of B incomparable to a[i]
  std::vector<Interval> inc_b;  // inc_b[j]: positions of A incomparable to b[j]

  [[nodiscard]] int size() const noexcept { return static_cast<int>(a.size() + b.size()); }

  /// Incomparability graph with A as the ordered side.
  [[nodiscard]] BipartiteConvexGraph graph() const;

  /// Same cover with the roles of the chains exchanged.
  [[nodiscard]] TwoChainCover swapped() const;

  friend bool operator==(const TwoChainCover&, const TwoChainCover&) = default;
};

/// Throws InvalidCoverError unless a and b are chains partitioning p.
TwoChainCover build_two_chain_cover(const Poset& p, const Chain& a, const Chain& b);

/// Cover from the per-A bounds: a[i] sits above b[0..lo[i]) and below
/// b[hi[i]..). The bounds must be non-decreasing with lo <= hi.
TwoChainCover cover_from_bounds(Chain a, Chain b, const std::vector<int>& lo, const std::vector<int>& hi);

/// Two chains covering p, or nothing when p has width > 2.
std::optional<std::pair<Chain, Chain>> find_two_chain_cover(const Poset& p);

enum class Color { red, blue };

/// Non-trivial component of the tight-edge graph G(x): intervals in both
/// chains with a common weight per side.
struct TightComponent {
  Interval a;
  Interval b;
  Rational xa;
  Rational xb;
  Color color = Color::red;

  [[nodiscard]] int size() const noexcept { return a.size() + b.size(); }
  [[nodiscard]] bool balanced() const { return xa == Rational(a.size(), size()); }

  friend bool operator==(const TightComponent&, const TightComponent&) = default;
};

struct TightComponents {
  std::vector<TightComponent> comps;  // ordered along P
  std::vector<std::pair<Interval, Interval>> graph_components;  // non-trivial components of G
  std::vector<int> unbalanced;  // indices into comps
  std::vector<int> good;        // red ones first, each group in P order

  friend bool operator==(const TightComponents&, const TightComponents&) = default;
};

/// Point layout for a cover: A positions, then B positions.
/// Throws StructureError on infeasible points, loose vertices, inlays or
/// components whose chain intervals interleave.
TightComponents build_tight_components(const TwoChainCover& g, const StabPoint& x);

/// Every edge leaving the small chain of comps[k] ends in a component of the
/// other colour.
bool is_good(int k, const TightComponents& tc, const TwoChainCover& g);

/// Signed shift of the A-side weight of comps[k] towards balance, capped by
/// the first non-tight edge that would become tight.
Rational slack(int k, const TightComponents& tc, const TwoChainCover& g, const StabPoint& x);

/// Shifts unbalanced components until all are balanced, merging a component
/// with those it becomes tight with.
std::pair<StabPoint, TightComponents> rebalance(const TwoChainCover& g, StabPoint x, TightComponents tc);

/// (red, blue) entropy contributions of the components.
std::pair<double, double> red_contribution(const StabPoint& x, const TightComponents& tc, int n);

struct MupiOptions {
  /// Re-derive the component structure from scratch after every step and
  /// check feasibility, colour consistency, crossing edges, vertex status
  /// and monotone entropy. Throws StructureError on a violation.
  bool check_invariants = false;
};

struct MupiResult {
  LinearOrder order;
  std::int64_t comparisons = 0;
  double initial_entropy = 0.0;  // H(x) of the point the core started from
  int iterations = 0;
  bool swapped = false;
};

/// Places every element comparable to all others at its final rank in `out`
/// (size n, -1 for unknown slots).
void emit_cut_points(const TwoChainCover& g, LinearOrder& out);

/// Merging loop for a locally optimal x whose red contribution does not
/// exceed the blue one.
MupiResult mupi_core(const TwoChainCover& g, const StabPoint& x, ComparisonSource& src, LinearOrder out,
                     const MupiOptions& opts = {});

/// Query-free part of the merge: cover, minimum-entropy point, optional
/// chain exchange.
struct MupiSetup {
  TwoChainCover cover;
  StabPoint x;
  bool swapped = false;
};

MupiSetup prepare_mupi(const Poset& p, const Chain& a, const Chain& b);

MupiResult run_mupi(const MupiSetup& setup, ComparisonSource& src, const MupiOptions& opts = {});

/// Sorts a poset covered by the chains a and b.
MupiResult mupi(const Poset& p, const Chain& a, const Chain& b, ComparisonSource& src,
                const MupiOptions& opts = {});

}  // namespace posort
