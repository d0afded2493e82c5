#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "posort/types.hpp"

namespace posort {

/// A strict partial order on {0, ..., n-1}, stored as a transitively closed
/// dense relation. Instances are immutable once built.
class Poset {
 public:
  using Row = boost::dynamic_bitset<std::uint64_t>;

  Poset() = default;

  /// An antichain on n elements.
  explicit Poset(int n);

  [[nodiscard]] int size() const noexcept { return n_; }

  /// u <_P v.
  [[nodiscard]] bool less(Element u, Element v) const { return succ_[u].test(v); }
  [[nodiscard]] bool comparable(Element u, Element v) const {
    return succ_[u].test(v) || succ_[v].test(u);
  }

  [[nodiscard]] const Row& successors(Element u) const { return succ_[u]; }
  [[nodiscard]] const Row& predecessors(Element u) const { return pred_[u]; }

  [[nodiscard]] int num_predecessors(Element u) const { return static_cast<int>(pred_[u].count()); }

  /// Number of strictly ordered pairs.
  [[nodiscard]] std::size_t relation_count() const;

  /// All pairs (u, v) with u <_P v, lexicographically sorted.
  [[nodiscard]] std::vector<std::pair<Element, Element>> relations() const;

  /// Sub-poset induced on `elems`; element i of the result is elems[i].
  [[nodiscard]] Poset induced(std::span<const Element> elems) const;

  /// Some linear extension (elements sorted by predecessor count).
  [[nodiscard]] LinearOrder topological_order() const;

  /// True when `order` is a permutation of the ground set respecting <_P.
  [[nodiscard]] bool is_linear_extension(std::span<const Element> order) const;

  /// True when the listed elements are strictly increasing under <_P.
  [[nodiscard]] bool is_chain(std::span<const Element> elems) const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  friend Poset transitive_closure(std::span<const std::pair<Element, Element>> pairs, int n);
  friend Poset add_chain_relations(const Poset& p, std::span<const Element> c);

  int n_ = 0;
  std::vector<Row> succ_;
  std::vector<Row> pred_;
};

/// Transitive closure of the relation given by `pairs` on n elements.
/// Throws CycleError when the closure is not antisymmetric.
Poset transitive_closure(std::span<const std::pair<Element, Element>> pairs, int n);

struct LevelDecomposition {
  std::vector<std::vector<Element>> levels;  // levels[0] holds the minimal elements
  std::vector<int> level_of;                 // 0-based level index per element
  std::vector<Element> pred;                 // recorded predecessor one level down, or -1

  [[nodiscard]] int height() const noexcept { return static_cast<int>(levels.size()); }
};

struct ChainDecomposition {
  std::vector<Chain> chains;

  [[nodiscard]] int element_count() const;
  [[nodiscard]] std::vector<int> sizes() const;

  friend bool operator==(const ChainDecomposition&, const ChainDecomposition&) = default;
};

/// Canonical level decomposition. Each element of a level >= 2 records its
/// smallest-id predecessor in the level just below.
LevelDecomposition levels(const Poset& p);

/// A chain of size height(p): start from the smallest id in the top level
/// and follow recorded predecessors. Returned bottom-up.
Chain maximum_chain(const Poset& p);

/// Repeatedly extract a maximum chain. Levels are rebuilt from scratch while
/// the height exceeds ceil(sqrt(n)); after that they are maintained through
/// per-element predecessor tables.
ChainDecomposition greedy_chain_decomposition(const Poset& p);

/// Elements comparable to every other element.
std::vector<Element> cut_points(const Poset& p);

/// Closure of p plus the consecutive relations of `c`.
Poset add_chain_relations(const Poset& p, std::span<const Element> c);

/// Random permutation, each forward pair kept with probability `density`,
/// then closed. Deterministic in `seed`.
Poset random_poset(int n, double density, std::uint64_t seed);

/// Largest n accepted by the linear-extension counter.
inline constexpr int kMaxCountableSize = 24;

/// Exact e(p) by dynamic programming over down-sets. Throws TooLargeError
/// above kMaxCountableSize.
BigInt count_linear_extensions(const Poset& p);

/// log2 e(p).
double log2_linear_extensions(const Poset& p);

/// Memoized down-set table supporting counting and uniform sampling of
/// linear extensions.
class LinearExtensionCounter {
 public:
  explicit LinearExtensionCounter(const Poset& p);

  [[nodiscard]] BigInt total();

  /// A uniformly random linear extension.
  [[nodiscard]] LinearOrder sample(std::mt19937_64& rng);

 private:
  __extension__ using Count = unsigned __int128;
  using Mask = std::uint32_t;

  Count completions(Mask placed);

  const Poset* poset_;
  std::vector<Mask> pred_mask_;
  Mask full_ = 0;
  bool dense_ = false;
  std::vector<Count> dense_memo_;  // 0 marks an unknown entry
  std::unordered_map<Mask, Count> sparse_memo_;
};

/// Calls `visit` once per linear extension of p (no size guard; intended for
/// small posets).
void for_each_linear_extension(const Poset& p, const std::function<void(const LinearOrder&)>& visit);

/// Random linear extension by shuffling among minimal elements; not uniform.
LinearOrder random_topological_order(const Poset& p, std::mt19937_64& rng);

}  // namespace posort
