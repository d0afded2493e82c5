#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "posort/chain_merge.hpp"
#include "posort/entropy.hpp"
#include "posort/mupi.hpp"
#include "posort/oracle.hpp"
#include "posort/poset.hpp"
#include "posort/types.hpp"

namespace posort {

struct PhaseBreakdown {
  std::int64_t preprocessing_queries = 0;
  std::int64_t sorting_queries = 0;
  double preprocessing_ms = 0.0;
  double sorting_ms = 0.0;
};

struct SortResult {
  LinearOrder order;
  std::int64_t comparisons = 0;
  /// Proven comparison bound for this input; infinity when not computed.
  double bound_value = std::numeric_limits<double>::infinity();
  PhaseBreakdown phases;
};

/// Largest n for which the sorters evaluate log2 e(P)-based bounds.
inline constexpr int kBoundEvaluationLimit = 16;

/// factor * log2 e(p), or infinity above kBoundEvaluationLimit.
double extension_bound(const Poset& p, double factor);

/// Binary insertion of every element into a maximum chain.
SortResult insertion_sort_supi(const Poset& p, ComparisonSource& src);

/// Huffman merge of a greedy chain decomposition.
SortResult merge_sort_supi(const Poset& p, ComparisonSource& src);

/// Sorts P - A by merge sort for a maximum chain A, then merges A with the
/// result under the partial information gathered so far.
SortResult cautious_merge_sort(const Poset& p, ComparisonSource& src, const MupiOptions& opts = {});

/// For every interval [c, d] of positions: the maximum weight and the first
/// and last positions attaining it.
class FunctionF {
 public:
  struct Entry {
    Rational max;
    int first = 0;
    int last = -1;
  };

  FunctionF() = default;
  explicit FunctionF(std::vector<Rational> weights);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(weights_.size()); }
  [[nodiscard]] Entry operator()(int c, int d) const;

  friend bool operator==(const FunctionF&, const FunctionF&) = default;

 private:
  [[nodiscard]] std::size_t slot(int c, int d) const;

  std::vector<Rational> weights_;
  std::vector<std::pair<int, int>> table_;  // row c holds d = c..size-1
};

/// f for the weights of the chain positions.
FunctionF function_f(const Chain& a, const StabPoint& x);

/// Query-free artifacts of the preprocessed sorter. Depends on P only.
struct PreprocessedPlan {
  Chain a;                        // maximum chain
  std::vector<Element> rest;      // P - A by increasing id
  BipartiteConvexGraph graph;     // incomparabilities between A and P - A
  StabPoint x;                    // minimum-entropy point of `graph`
  FunctionF f;                    // over the A weights of x
  ChainDecomposition rest_chains; // greedy decomposition of P - A, local ids
  std::vector<HuffmanStep> schedule;

  friend bool operator==(const PreprocessedPlan&, const PreprocessedPlan&) = default;
};

PreprocessedPlan preprocess(const Poset& p);

/// Runs both phases; the plan is built without touching `src`.
SortResult preprocessed_sort(const Poset& p, ComparisonSource& src, const MupiOptions& opts = {});

/// Sorting phase only, reusing a plan built for p.
SortResult preprocessed_sort(const Poset& p, const PreprocessedPlan& plan, ComparisonSource& src,
                             const MupiOptions& opts = {});

enum class Algorithm { insertion, merge, cautious, preprocessed };

/// Parses "insertion", "merge", "cautious" or "preprocessed".
Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm algo);

SortResult run_sorter(Algorithm algo, const Poset& p, ComparisonSource& src);

}  // namespace posort
