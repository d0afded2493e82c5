#include <cmath>
#include <limits>
#include <string>

#include "posort/poset.hpp"

namespace posort {
namespace {

constexpr int kDenseLimit = 20;

__extension__ using U128 = unsigned __int128;

BigInt to_big(U128 v) {
  const auto hi = static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64));
  const auto lo = static_cast<unsigned long>(static_cast<std::uint64_t>(v));
  BigInt out = hi;
  out <<= 64;
  out += lo;
  return out;
}

}  // namespace

LinearExtensionCounter::LinearExtensionCounter(const Poset& p) : poset_(&p) {
  const int n = p.size();
  if (n > kMaxCountableSize) {
    throw TooLargeError("linear-extension counting is limited to n <= " +
                        std::to_string(kMaxCountableSize) + " (got " + std::to_string(n) + ")");
  }
  pred_mask_.assign(n, 0);
  for (Element v = 0; v < n; ++v) {
    const auto& preds = p.predecessors(v);
    for (auto u = preds.find_first(); u != Poset::Row::npos; u = preds.find_next(u)) {
      pred_mask_[v] |= Mask{1} << u;
    }
  }
  full_ = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  dense_ = n <= kDenseLimit;
  if (dense_) dense_memo_.assign(std::size_t{1} << n, 0);
}

LinearExtensionCounter::Count LinearExtensionCounter::completions(Mask placed) {
  if (placed == full_) return 1;
  if (dense_) {
    if (dense_memo_[placed] != 0) return dense_memo_[placed];
  } else if (auto it = sparse_memo_.find(placed); it != sparse_memo_.end()) {
    return it->second;
  }
  Count total = 0;
  const int n = poset_->size();
  for (int v = 0; v < n; ++v) {
    const Mask bit = Mask{1} << v;
    if ((placed & bit) == 0 && (pred_mask_[v] & ~placed) == 0) total += completions(placed | bit);
  }
  if (dense_) {
    dense_memo_[placed] = total;
  } else {
    sparse_memo_.emplace(placed, total);
  }
  return total;
}

BigInt LinearExtensionCounter::total() { return to_big(completions(0)); }

LinearOrder LinearExtensionCounter::sample(std::mt19937_64& rng) {
  const int n = poset_->size();
  LinearOrder order;
  order.reserve(n);
  Mask placed = 0;
  while (placed != full_) {
    const Count total = completions(placed);
    // Uniform draw in [0, total) by rejection from 128 random bits.
    const Count limit = std::numeric_limits<Count>::max() - std::numeric_limits<Count>::max() % total;
    Count r;
    do {
      r = (static_cast<Count>(rng()) << 64) | static_cast<Count>(rng());
    } while (r >= limit);
    r %= total;
    for (int v = 0; v < n; ++v) {
      const Mask bit = Mask{1} << v;
      if ((placed & bit) != 0 || (pred_mask_[v] & ~placed) != 0) continue;
      const Count here = completions(placed | bit);
      if (r < here) {
        order.push_back(v);
        placed |= bit;
        break;
      }
      r -= here;
    }
  }
  return order;
}

BigInt count_linear_extensions(const Poset& p) {
  LinearExtensionCounter counter(p);
  return counter.total();
}

double log2_linear_extensions(const Poset& p) {
  const BigInt e = count_linear_extensions(p);
  return std::log2(e.get_d());
}

namespace {

void extend(const Poset& p, std::vector<int>& missing_preds, std::vector<char>& used, LinearOrder& prefix,
            const std::function<void(const LinearOrder&)>& visit) {
  const int n = p.size();
  if (static_cast<int>(prefix.size()) == n) {
    visit(prefix);
    return;
  }
  for (Element v = 0; v < n; ++v) {
    if (used[v] || missing_preds[v] != 0) continue;
    used[v] = 1;
    prefix.push_back(v);
    const auto& succ = p.successors(v);
    for (auto w = succ.find_first(); w != Poset::Row::npos; w = succ.find_next(w)) --missing_preds[w];
    extend(p, missing_preds, used, prefix, visit);
    for (auto w = succ.find_first(); w != Poset::Row::npos; w = succ.find_next(w)) ++missing_preds[w];
    prefix.pop_back();
    used[v] = 0;
  }
}

}  // namespace

void for_each_linear_extension(const Poset& p, const std::function<void(const LinearOrder&)>& visit) {
  std::vector<int> missing(p.size());
  for (Element v = 0; v < p.size(); ++v) missing[v] = p.num_predecessors(v);
  std::vector<char> used(p.size(), 0);
  LinearOrder prefix;
  prefix.reserve(p.size());
  extend(p, missing, used, prefix, visit);
}

}  // namespace posort
