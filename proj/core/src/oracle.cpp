#include "posort/oracle.hpp"

#include <stdexcept>

namespace posort {

HiddenOrderOracle::HiddenOrderOracle(LinearOrder order, const Poset& p) : order_(std::move(order)) {
  if (!p.is_linear_extension(order_)) {
    throw NotAnExtensionError("hidden order is not a linear extension of the poset");
  }
  rank_.assign(order_.size(), 0);
  for (std::size_t i = 0; i < order_.size(); ++i) rank_[order_[i]] = static_cast<int>(i);
}

IntervalCollection level_intervals(const Poset& p) {
  const int n = p.size();
  IntervalCollection out(n);
  const auto lv = levels(p);
  long below = 0;
  for (const auto& level : lv.levels) {
    const long upto = below + static_cast<long>(level.size());
    for (Element v : level) {
      out[v].lo = BigRational(below, n);
      out[v].hi = BigRational(upto, n);
      out[v].lo.canonicalize();
      out[v].hi.canonicalize();
    }
    below = upto;
  }
  return out;
}

bool intervals_consistent(const Poset& p, const IntervalCollection& ivs) {
  if (static_cast<int>(ivs.size()) != p.size()) return false;
  for (const auto& iv : ivs) {
    if (iv.lo < 0 || iv.hi > 1 || !(iv.lo < iv.hi)) return false;
  }
  for (const auto& [u, v] : p.relations()) {
    if (ivs[u].hi > ivs[v].lo) return false;
  }
  return true;
}

AdversaryOracle::AdversaryOracle(const Poset& p, IntervalCollection ivs) : base_(&p), ivs_(std::move(ivs)) {
  if (!intervals_consistent(p, ivs_)) {
    throw std::invalid_argument("AdversaryOracle: interval collection inconsistent with the poset");
  }
}

bool AdversaryOracle::decide(Element u, Element v) {
  if (u == v) return true;
  const BigRational mu = ivs_[u].midpoint();
  const BigRational mv = ivs_[v].midpoint();
  if (mu <= mv) {
    ivs_[u].hi = mu;
    ivs_[v].lo = mv;
    answered_.emplace_back(u, v);
    return true;
  }
  ivs_[u].lo = mu;
  ivs_[v].hi = mv;
  answered_.emplace_back(v, u);
  return false;
}

bool AdversaryOracle::consistent() const {
  auto pairs = base_->relations();
  pairs.insert(pairs.end(), answered_.begin(), answered_.end());
  try {
    return intervals_consistent(transitive_closure(pairs, base_->size()), ivs_);
  } catch (const CycleError&) {
    return false;
  }
}

}  // namespace posort
