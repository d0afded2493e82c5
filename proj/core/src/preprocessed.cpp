#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "posort/sorters.hpp"

namespace posort {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct TightSpan {
  int first;  // A positions
  int last;
  int b;      // B position owning the span
};

// Raises weights so that the non-trivial components of G(x) become interval
// pairs: tight spans of B vertices are united, and each union is levelled to
// the weights at its ends.
void eliminate_inlays(const TwoChainCover& g, const FunctionF& f, std::vector<Rational>& xa,
                      std::vector<Rational>& xb) {
  std::vector<TightSpan> spans;
  for (int j = 0; j < static_cast<int>(g.b.size()); ++j) {
    const Interval inc = g.inc_b[j];
    if (inc.empty()) continue;
    const auto e = f(inc.first, inc.last);
    if (xb[j] + e.max == 1) spans.push_back({e.first, e.last, j});
  }
  std::stable_sort(spans.begin(), spans.end(), [](const TightSpan& l, const TightSpan& r) { return l.first < r.first; });

  std::size_t k = 0;
  while (k < spans.size()) {
    int u = spans[k].first;
    int u2 = spans[k].last;
    int v = spans[k].b;
    int v2 = spans[k].b;
    std::size_t m = k + 1;
    while (m < spans.size() && spans[m].first <= u2) {
      u2 = std::max(u2, spans[m].last);
      v = std::min(v, spans[m].b);
      v2 = std::max(v2, spans[m].b);
      ++m;
    }
    const Rational wb = xb[v];
    if (xb[v2] != wb || xa[u] != 1 - wb || xa[u2] != 1 - wb) {
      throw StructureError("united tight spans have unequal end weights");
    }
    for (int j = v; j <= v2; ++j) {
      if (xb[j] > wb) throw StructureError("B weight above the level of its tight span");
      xb[j] = wb;
    }
    for (int i = u; i <= u2; ++i) {
      if (xa[i] > 1 - wb) throw StructureError("A weight above the level of its tight span");
      xa[i] = 1 - wb;
    }
    k = m;
  }
}

bool has_tight_edge(const Interval& inc, const Rational& own, const std::vector<Rational>& other) {
  for (int w = inc.first; w <= inc.last; ++w) {
    if (own + other[w] == 1) return true;
  }
  return false;
}

// Loose vertices (no tight edge, not a cut-point) are raised until tight;
// cut-points get weight 1. B is handled first, bottom-up, then A.
void raise_loose(const std::vector<Interval>& inc, std::vector<Rational>& own, const std::vector<Rational>& other) {
  for (std::size_t v = 0; v < own.size(); ++v) {
    if (inc[v].empty()) {
      own[v] = 1;
      continue;
    }
    if (has_tight_edge(inc[v], own[v], other)) continue;
    Rational heaviest = 0;
    for (int w = inc[v].first; w <= inc[v].last; ++w) heaviest = std::max(heaviest, other[w]);
    own[v] = 1 - heaviest;
  }
}

}  // namespace

FunctionF::FunctionF(std::vector<Rational> weights) : weights_(std::move(weights)) {
  const int k = size();
  table_.resize(static_cast<std::size_t>(k) * (k + 1) / 2);
  for (int c = 0; c < k; ++c) {
    int first = c;
    int last = c;
    table_[slot(c, c)] = {c, c};
    for (int d = c + 1; d < k; ++d) {
      if (weights_[d] > weights_[first]) {
        first = last = d;
      } else if (weights_[d] == weights_[first]) {
        last = d;
      }
      table_[slot(c, d)] = {first, last};
    }
  }
}

std::size_t FunctionF::slot(int c, int d) const {
  const auto k = static_cast<std::size_t>(size());
  const auto row = static_cast<std::size_t>(c);
  return row * k - row * (row - 1) / 2 + static_cast<std::size_t>(d - c);
}

FunctionF::Entry FunctionF::operator()(int c, int d) const {
  if (c < 0 || d >= size() || c > d) throw std::out_of_range("FunctionF: bad interval");
  const auto [first, last] = table_[slot(c, d)];
  return {weights_[first], first, last};
}

FunctionF function_f(const Chain& a, const StabPoint& x) {
  if (x.size() < static_cast<int>(a.size())) throw std::invalid_argument("function_f: point too short");
  return FunctionF(std::vector<Rational>(x.x.begin(), x.x.begin() + static_cast<std::ptrdiff_t>(a.size())));
}

PreprocessedPlan preprocess(const Poset& p) {
  PreprocessedPlan plan;
  const int n = p.size();
  if (n == 0) return plan;
  plan.a = maximum_chain(p);
  std::vector<char> in_a(n, 0);
  for (Element v : plan.a) in_a[v] = 1;
  for (Element v = 0; v < n; ++v) {
    if (!in_a[v]) plan.rest.push_back(v);
  }
  plan.graph = chain_vs_rest_graph(p, plan.a, plan.rest);
  plan.x = convex_bipartite_entropy(plan.graph).second;
  plan.f = function_f(plan.a, plan.x);
  if (!plan.rest.empty()) {
    plan.rest_chains = greedy_chain_decomposition(p.induced(plan.rest));
    plan.schedule = huffman_schedule(plan.rest_chains.sizes());
  }
  return plan;
}

SortResult preprocessed_sort(const Poset& p, ComparisonSource& src, const MupiOptions& opts) {
  const auto t0 = Clock::now();
  const std::int64_t q0 = src.query_count();
  const PreprocessedPlan plan = preprocess(p);
  if (src.query_count() != q0) throw std::logic_error("preprocessing issued oracle queries");
  const double prep_ms = ms_since(t0);
  SortResult res = preprocessed_sort(p, plan, src, opts);
  res.phases.preprocessing_ms = prep_ms;
  return res;
}

SortResult preprocessed_sort(const Poset& p, const PreprocessedPlan& plan, ComparisonSource& src,
                             const MupiOptions& opts) {
  const int n = p.size();
  SortResult res;
  if (n <= 1) {
    res.order = p.topological_order();
    res.bound_value = 0.0;
    return res;
  }
  const auto t0 = Clock::now();
  const std::int64_t q0 = src.query_count();

  Chain b;
  if (!plan.rest.empty()) {
    RelabelledSource local(src, plan.rest);
    for (Element v : huffman_merge(plan.rest_chains.chains, plan.schedule, local).merged) {
      b.push_back(plan.rest[v]);
    }
  }
  const Poset refined = add_chain_relations(p, b);
  TwoChainCover cover = build_two_chain_cover(refined, plan.a, b);

  const int na = static_cast<int>(plan.a.size());
  std::vector<int> rest_slot(n, -1);
  for (int j = 0; j < static_cast<int>(plan.rest.size()); ++j) rest_slot[plan.rest[j]] = j;
  std::vector<Rational> xa(plan.x.x.begin(), plan.x.x.begin() + na);
  std::vector<Rational> xb;
  xb.reserve(b.size());
  for (Element v : b) xb.push_back(plan.x.x[na + rest_slot[v]]);

  eliminate_inlays(cover, plan.f, xa, xb);
  raise_loose(cover.inc_b, xb, xa);
  raise_loose(cover.inc_a, xa, xb);

  StabPoint x;
  x.x = xa;
  x.x.insert(x.x.end(), xb.begin(), xb.end());
  auto [balanced, tc] = rebalance(cover, x, build_tight_components(cover, x));
  const auto [red, blue] = red_contribution(balanced, tc, n);
  if (red > blue) {
    StabPoint swapped;
    swapped.x.assign(balanced.x.begin() + na, balanced.x.end());
    swapped.x.insert(swapped.x.end(), balanced.x.begin(), balanced.x.begin() + na);
    balanced = std::move(swapped);
    cover = cover.swapped();
  }
  LinearOrder out(n, -1);
  emit_cut_points(cover, out);
  res.order = mupi_core(cover, balanced, src, std::move(out), opts).order;
  res.comparisons = src.query_count() - q0;
  res.phases.sorting_queries = res.comparisons;
  res.phases.sorting_ms = ms_since(t0);
  res.bound_value = extension_bound(p, 15.09);
  return res;
}

}  // namespace posort
