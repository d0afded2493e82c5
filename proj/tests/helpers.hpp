#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "posort/posort.hpp"

namespace testing {

using posort::Element;
using posort::Poset;

inline Poset make(int n, std::vector<std::pair<Element, Element>> pairs) {
  return posort::transitive_closure(pairs, n);
}

inline Poset chain(int n) {
  std::vector<std::pair<Element, Element>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(i - 1, i);
  return make(n, pairs);
}

// a=0, b=1, c=2, d=3 with a<c, b<c, b<d
inline Poset small_example() { return make(4, {{0, 2}, {1, 2}, {1, 3}}); }

// Longest chain by brute force over subsets (n <= 16).
inline int longest_chain_bruteforce(const Poset& p, const std::vector<Element>& elems) {
  const int m = static_cast<int>(elems.size());
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    std::vector<Element> picked;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1U) picked.push_back(elems[i]);
    }
    bool is_chain = true;
    for (std::size_t i = 0; i < picked.size() && is_chain; ++i) {
      for (std::size_t j = i + 1; j < picked.size(); ++j) {
        if (!p.comparable(picked[i], picked[j])) {
          is_chain = false;
          break;
        }
      }
    }
    if (is_chain) best = std::max(best, static_cast<int>(picked.size()));
  }
  return best;
}

inline std::uint64_t count_by_permutations(const Poset& p) {
  std::vector<Element> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    if (p.is_linear_extension(perm)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Oracle answering from a rank table without checking any poset.
class RankOracle final : public posort::ComparisonSource {
 public:
  explicit RankOracle(std::vector<int> rank) : rank_(std::move(rank)) {}

 protected:
  bool decide(Element u, Element v) override { return rank_[u] <= rank_[v]; }

 private:
  std::vector<int> rank_;
};

inline std::vector<int> ranks_of(const std::vector<Element>& order) {
  std::vector<int> r(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) r[order[i]] = static_cast<int>(i);
  return r;
}

}  // namespace testing
