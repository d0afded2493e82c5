#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "posort/poset.hpp"
#include "posort/types.hpp"

namespace posort {

/// Answers "is u <= v in the hidden total order?" and counts every answer.
class ComparisonSource {
 public:
  virtual ~ComparisonSource() = default;

  bool answer(Element u, Element v) {
    ++queries_;
    return decide(u, v);
  }

  [[nodiscard]] std::int64_t query_count() const noexcept { return queries_; }

 protected:
  virtual bool decide(Element u, Element v) = 0;

 private:
  std::int64_t queries_ = 0;
};

/// Oracle backed by a fixed linear extension of the initial poset.
class HiddenOrderOracle final : public ComparisonSource {
 public:
  /// Throws NotAnExtensionError when `order` is not a linear extension of p.
  HiddenOrderOracle(LinearOrder order, const Poset& p);

  [[nodiscard]] const LinearOrder& order() const noexcept { return order_; }
  [[nodiscard]] int rank(Element v) const { return rank_[v]; }

 protected:
  bool decide(Element u, Element v) override { return rank_[u] <= rank_[v]; }

 private:
  LinearOrder order_;
  std::vector<int> rank_;
};

/// Forwards queries on local ids 0..k-1 to `inner` through `to_global`.
class RelabelledSource final : public ComparisonSource {
 public:
  RelabelledSource(ComparisonSource& inner, std::vector<Element> to_global)
      : inner_(inner), to_global_(std::move(to_global)) {}

 protected:
  bool decide(Element u, Element v) override { return inner_.answer(to_global_[u], to_global_[v]); }

 private:
  ComparisonSource& inner_;
  std::vector<Element> to_global_;
};

/// Open interval (lo, hi) inside [0, 1].
struct OpenInterval {
  BigRational lo;
  BigRational hi;

  [[nodiscard]] BigRational midpoint() const { return (lo + hi) / 2; }

  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

using IntervalCollection = std::vector<OpenInterval>;

/// Element on level i (0-based) gets (|L_0|+..+|L_{i-1}|)/n, (|L_0|+..+|L_i|)/n).
IntervalCollection level_intervals(const Poset& p);

/// 0 <= lo < hi <= 1 for every interval and hi_u <= lo_v whenever u <_P v.
bool intervals_consistent(const Poset& p, const IntervalCollection& ivs);

/// Interval adversary: answers by comparing midpoints, then halves both
/// intervals so that the answer stays forced.
class AdversaryOracle final : public ComparisonSource {
 public:
  /// Throws std::invalid_argument when `ivs` is not consistent with p.
  AdversaryOracle(const Poset& p, IntervalCollection ivs);

  [[nodiscard]] const IntervalCollection& intervals() const noexcept { return ivs_; }

  /// Strict relations (u, v) meaning u < v, one per answered query on
  /// distinct elements.
  [[nodiscard]] const std::vector<std::pair<Element, Element>>& answered() const noexcept {
    return answered_;
  }

  /// Consistency of the current intervals with the closure of the base
  /// poset plus every answer given so far.
  [[nodiscard]] bool consistent() const;

 protected:
  bool decide(Element u, Element v) override;

 private:
  const Poset* base_;
  IntervalCollection ivs_;
  std::vector<std::pair<Element, Element>> answered_;
};

}  // namespace posort
