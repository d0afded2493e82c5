#include "posort/chain_merge.hpp"

#include <queue>
#include <stdexcept>
#include <utility>

namespace posort {

MergeReport linear_merge(const Chain& x, const Chain& y, ComparisonSource& src) {
  MergeReport r;
  r.merged.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    ++r.comparisons;
    if (src.answer(x[i], y[j])) {
      r.merged.push_back(x[i++]);
    } else {
      r.merged.push_back(y[j++]);
    }
  }
  r.merged.insert(r.merged.end(), x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
  r.merged.insert(r.merged.end(), y.begin() + static_cast<std::ptrdiff_t>(j), y.end());
  return r;
}

MergeReport binary_insert(const Chain& c, Element v, ComparisonSource& src) {
  MergeReport r;
  std::size_t lo = 0;
  std::size_t hi = c.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    ++r.comparisons;
    if (src.answer(v, c[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  r.merged.reserve(c.size() + 1);
  r.merged.insert(r.merged.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lo));
  r.merged.push_back(v);
  r.merged.insert(r.merged.end(), c.begin() + static_cast<std::ptrdiff_t>(lo), c.end());
  return r;
}

std::vector<HuffmanStep> huffman_schedule(std::span<const int> sizes) {
  using Key = std::pair<int, int>;  // (size, number)
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
  int next = 0;
  for (int s : sizes) queue.emplace(s, next++);
  std::vector<HuffmanStep> steps;
  while (queue.size() > 1) {
    const Key first = queue.top();
    queue.pop();
    const Key second = queue.top();
    queue.pop();
    steps.push_back({first.second, second.second});
    queue.emplace(first.first + second.first, next++);
  }
  return steps;
}

MergeReport huffman_merge(const std::vector<Chain>& chains, ComparisonSource& src) {
  std::vector<int> sizes;
  sizes.reserve(chains.size());
  for (const auto& c : chains) sizes.push_back(static_cast<int>(c.size()));
  return huffman_merge(chains, huffman_schedule(sizes), src);
}

MergeReport huffman_merge(const std::vector<Chain>& chains, std::span<const HuffmanStep> schedule,
                          ComparisonSource& src) {
  MergeReport r;
  if (chains.empty()) return r;
  if (schedule.size() + 1 != chains.size()) {
    throw std::invalid_argument("huffman_merge: schedule does not match the chain count");
  }
  std::vector<Chain> slots(chains.begin(), chains.end());
  slots.reserve(chains.size() + schedule.size());
  for (const auto& step : schedule) {
    MergeReport part = linear_merge(slots[step.first], slots[step.second], src);
    r.comparisons += part.comparisons;
    slots[step.first].clear();
    slots[step.second].clear();
    slots.push_back(std::move(part.merged));
  }
  r.merged = std::move(slots.back());
  return r;
}

MergeReport hwang_lin_merge(const Chain& x, const Chain& y, ComparisonSource& src) {
  const bool swapped = x.size() < y.size();
  const Chain& big = swapped ? y : x;
  const Chain& small = swapped ? x : y;
  MergeReport r;
  if (small.empty()) {
    r.merged = big;
    return r;
  }
  const std::size_t nx = big.size();
  std::size_t block = 1;
  while (block * 2 <= nx / small.size()) block *= 2;

  // before[p] lists the small-chain elements placed right before big[p].
  std::vector<std::vector<Element>> before(nx + 1);
  std::size_t start = 0;
  for (Element v : small) {
    for (;;) {
      if (start >= nx) {
        before[nx].push_back(v);
        break;
      }
      const std::size_t last = std::min(start + block, nx) - 1;
      ++r.comparisons;
      if (!src.answer(v, big[last])) {
        start = last + 1;
        continue;
      }
      std::size_t lo = start;
      std::size_t hi = last;
      while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        ++r.comparisons;
        if (src.answer(v, big[mid])) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      before[lo].push_back(v);
      start = lo;
      break;
    }
  }
  r.merged.reserve(nx + small.size());
  for (std::size_t p = 0; p <= nx; ++p) {
    r.merged.insert(r.merged.end(), before[p].begin(), before[p].end());
    if (p < nx) r.merged.push_back(big[p]);
  }
  return r;
}

}  // namespace posort
