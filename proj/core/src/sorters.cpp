#include "posort/sorters.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace posort {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<Element> complement_of(const Chain& c, int n) {
  std::vector<char> in(n, 0);
  for (Element v : c) in[v] = 1;
  std::vector<Element> out;
  for (Element v = 0; v < n; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

// Huffman merge of a greedy decomposition of p restricted to `elems`,
// returned in global ids.
Chain merge_sort_subset(const Poset& p, const std::vector<Element>& elems, ComparisonSource& src) {
  if (elems.empty()) return {};
  const Poset sub = p.induced(elems);
  const ChainDecomposition d = greedy_chain_decomposition(sub);
  RelabelledSource local(src, elems);
  const MergeReport rep = huffman_merge(d.chains, local);
  Chain out;
  out.reserve(rep.merged.size());
  for (Element v : rep.merged) out.push_back(elems[v]);
  return out;
}

SortResult trivial_result(const Poset& p) {
  SortResult res;
  res.order = p.topological_order();
  res.bound_value = 0.0;
  return res;
}

}  // namespace

double extension_bound(const Poset& p, double factor) {
  if (p.size() > kBoundEvaluationLimit) return std::numeric_limits<double>::infinity();
  return factor * log2_linear_extensions(p);
}

SortResult insertion_sort_supi(const Poset& p, ComparisonSource& src) {
  const int n = p.size();
  if (n <= 1) return trivial_result(p);
  const auto t0 = Clock::now();
  const std::int64_t q0 = src.query_count();
  Chain c = maximum_chain(p);
  const auto rest = complement_of(c, n);
  const int chain_size = static_cast<int>(c.size());
  SortResult res;
  res.phases.preprocessing_ms = ms_since(t0);
  const auto t1 = Clock::now();
  for (Element v : rest) c = binary_insert(c, v, src).merged;
  res.order = std::move(c);
  res.comparisons = src.query_count() - q0;
  res.phases.sorting_queries = res.comparisons;
  res.phases.sorting_ms = ms_since(t1);
  int log_n = 0;
  while ((1 << log_n) < n) ++log_n;
  res.bound_value = static_cast<double>(log_n) * (n - chain_size);
  return res;
}

SortResult merge_sort_supi(const Poset& p, ComparisonSource& src) {
  const int n = p.size();
  if (n <= 1) return trivial_result(p);
  const auto t0 = Clock::now();
  const std::int64_t q0 = src.query_count();
  const ChainDecomposition d = greedy_chain_decomposition(p);
  SortResult res;
  res.phases.preprocessing_ms = ms_since(t0);
  const auto t1 = Clock::now();
  res.order = huffman_merge(d.chains, src).merged;
  res.comparisons = src.query_count() - q0;
  res.phases.sorting_queries = res.comparisons;
  res.phases.sorting_ms = ms_since(t1);
  res.bound_value = (chain_size_entropy(d) + 1.0) * n;
  return res;
}

SortResult cautious_merge_sort(const Poset& p, ComparisonSource& src, const MupiOptions& opts) {
  const int n = p.size();
  if (n <= 1) return trivial_result(p);
  const auto t0 = Clock::now();
  const std::int64_t q0 = src.query_count();
  const Chain a = maximum_chain(p);
  const Chain b = merge_sort_subset(p, complement_of(a, n), src);
  const Poset refined = add_chain_relations(p, b);
  SortResult res;
  res.order = mupi(refined, a, b, src, opts).order;
  res.comparisons = src.query_count() - q0;
  res.phases.sorting_queries = res.comparisons;
  res.phases.sorting_ms = ms_since(t0);
  res.bound_value = extension_bound(p, 15.09);
  return res;
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "insertion") return Algorithm::insertion;
  if (name == "merge") return Algorithm::merge;
  if (name == "cautious") return Algorithm::cautious;
  if (name == "preprocessed") return Algorithm::preprocessed;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::string algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::insertion:
      return "insertion";
    case Algorithm::merge:
      return "merge";
    case Algorithm::cautious:
      return "cautious";
    case Algorithm::preprocessed:
      return "preprocessed";
  }
  return "?";
}

SortResult run_sorter(Algorithm algo, const Poset& p, ComparisonSource& src) {
  switch (algo) {
    case Algorithm::insertion:
      return insertion_sort_supi(p, src);
    case Algorithm::merge:
      return merge_sort_supi(p, src);
    case Algorithm::cautious:
      return cautious_merge_sort(p, src);
    case Algorithm::preprocessed:
      return preprocessed_sort(p, src);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace posort
