#include <algorithm>
#include <cmath>
#include <numeric>

#include "posort/mupi.hpp"

namespace posort {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(int u, int v) { parent_[find(u)] = find(v); }

 private:
  std::vector<int> parent_;
};

Color color_of(int a_count, int b_count) { return a_count >= b_count ? Color::red : Color::blue; }

}  // namespace

TightComponents build_tight_components(const TwoChainCover& g, const StabPoint& x) {
  const int na = static_cast<int>(g.a.size());
  const int nb = static_cast<int>(g.b.size());
  const int n = na + nb;
  if (x.size() != n) throw StructureError("point size does not match the cover");
  for (const auto& w : x.x) {
    if (w <= 0 || w > 1) throw StructureError("weight outside (0, 1]");
  }

  DisjointSets tight(n);
  DisjointSets graph(n);
  std::vector<char> has_edge(n, 0);
  for (int i = 0; i < na; ++i) {
    for (int j = g.inc_a[i].first; j <= g.inc_a[i].last; ++j) {
      const Rational sum = x[i] + x[na + j];
      if (sum > 1) throw StructureError("point violates an edge constraint");
      if (sum == 1) tight.unite(i, na + j);
      graph.unite(i, na + j);
      has_edge[i] = has_edge[na + j] = 1;
    }
  }

  // Per root: position ranges and counts on both sides.
  struct Span {
    int a_min = 1 << 30, a_max = -1, a_count = 0;
    int b_min = 1 << 30, b_max = -1, b_count = 0;
  };
  std::vector<Span> span(n);
  for (int i = 0; i < na; ++i) {
    Span& sp = span[tight.find(i)];
    sp.a_min = std::min(sp.a_min, i);
    sp.a_max = i;
    ++sp.a_count;
  }
  for (int j = 0; j < nb; ++j) {
    Span& sp = span[tight.find(na + j)];
    sp.b_min = std::min(sp.b_min, j);
    sp.b_max = j;
    ++sp.b_count;
  }

  TightComponents tc;
  for (int r = 0; r < n; ++r) {
    const Span& sp = span[r];
    const int members = sp.a_count + sp.b_count;
    if (members == 0) continue;
    if (members == 1) {
      const int v = sp.a_count == 0 ? na + sp.b_min : sp.a_min;
      if (x[v] != 1) throw StructureError("loose vertex in G(x)");
      continue;
    }
    TightComponent k;
    k.a = sp.a_count == 0 ? Interval{} : Interval{sp.a_min, sp.a_max};
    k.b = sp.b_count == 0 ? Interval{} : Interval{sp.b_min, sp.b_max};
    if (k.a.size() != sp.a_count) throw StructureError("inlay: component is not an interval of A");
    if (k.b.size() != sp.b_count) throw StructureError("inlay: component is not an interval of B");
    k.xa = x[k.a.first];
    k.xb = x[na + k.b.first];
    k.color = color_of(k.a.size(), k.b.size());
    tc.comps.push_back(k);
  }
  std::sort(tc.comps.begin(), tc.comps.end(),
            [](const TightComponent& l, const TightComponent& r) { return l.a.first < r.a.first; });
  for (std::size_t t = 1; t < tc.comps.size(); ++t) {
    const auto& k = tc.comps[t - 1];
    const auto& l = tc.comps[t];
    // Tight edges of different components never cross.
    if (k.a.last >= l.a.first || k.b.last >= l.b.first) {
      throw StructureError("components of G(x) are not ordered along both chains");
    }
  }

  std::vector<Span> gspan(n);
  for (int i = 0; i < na; ++i) {
    if (!has_edge[i]) continue;
    Span& sp = gspan[graph.find(i)];
    sp.a_min = std::min(sp.a_min, i);
    sp.a_max = i;
    ++sp.a_count;
  }
  for (int j = 0; j < nb; ++j) {
    if (!has_edge[na + j]) continue;
    Span& sp = gspan[graph.find(na + j)];
    sp.b_min = std::min(sp.b_min, j);
    sp.b_max = j;
    ++sp.b_count;
  }
  for (int r = 0; r < n; ++r) {
    if (gspan[r].a_count == 0) continue;
    tc.graph_components.emplace_back(Interval{gspan[r].a_min, gspan[r].a_max}, Interval{gspan[r].b_min, gspan[r].b_max});
  }
  std::sort(tc.graph_components.begin(), tc.graph_components.end(),
            [](const auto& l, const auto& r) { return l.first.first < r.first.first; });

  for (int k = 0; k < static_cast<int>(tc.comps.size()); ++k) {
    if (!tc.comps[k].balanced()) tc.unbalanced.push_back(k);
  }
  for (Color c : {Color::red, Color::blue}) {
    for (int k = 0; k < static_cast<int>(tc.comps.size()); ++k) {
      if (tc.comps[k].color == c && is_good(k, tc, g)) tc.good.push_back(k);
    }
  }
  return tc;
}

bool is_good(int k, const TightComponents& tc, const TwoChainCover& g) {
  const auto& comp = tc.comps[k];
  auto owner = [&](bool side_a, int pos) {
    for (std::size_t t = 0; t < tc.comps.size(); ++t) {
      if ((side_a ? tc.comps[t].a : tc.comps[t].b).contains(pos)) return static_cast<int>(t);
    }
    return -1;
  };
  // Red components have B as small chain, blue ones A.
  const bool small_is_b = comp.color == Color::red;
  const Interval small = small_is_b ? comp.b : comp.a;
  const Interval own_other = small_is_b ? comp.a : comp.b;
  const auto& inc = small_is_b ? g.inc_b : g.inc_a;
  for (int v = small.first; v <= small.last; ++v) {
    for (int w = inc[v].first; w <= inc[v].last; ++w) {
      if (own_other.contains(w)) continue;
      const int t = owner(small_is_b, w);
      if (t < 0 || tc.comps[t].color == comp.color) return false;
    }
  }
  return true;
}

std::pair<double, double> red_contribution(const StabPoint& x, const TightComponents& tc, int n) {
  double red = 0.0;
  double blue = 0.0;
  auto lg = [](const Rational& r) {
    return std::log2(static_cast<double>(r.numerator())) - std::log2(static_cast<double>(r.denominator()));
  };
  for (const auto& k : tc.comps) {
    // Tight components: the B weight is the complement of the A weight.
    const Rational wa = x[k.a.first];
    const double c = -(k.a.size() * lg(wa) + k.b.size() * lg(1 - wa)) / n;
    (k.color == Color::red ? red : blue) += c;
  }
  return {red, blue};
}

}  // namespace posort
