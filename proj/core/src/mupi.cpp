#include "posort/mupi.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "posort/chain_merge.hpp"

namespace posort {
namespace {

const Rational kHalf(1, 2);

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

bool color_consistent(const TightComponent& k) {
  if (k.color == Color::red) return k.xa >= kHalf && k.xb <= kHalf;
  return k.xa < kHalf && k.xb > kHalf;
}

StabPoint exchange_sides(const StabPoint& x, int na) {
  StabPoint s;
  s.x.assign(x.x.begin() + na, x.x.end());
  s.x.insert(s.x.end(), x.x.begin(), x.x.begin() + na);
  return s;
}

// Dynamic state of the merging loop. A vertices are a[0..na), B vertices
// b[0..nb); a[i] lies above b[0..lo[i]) and below b[hi[i]..).
class Engine {
 public:
  Engine(const TwoChainCover& g, const StabPoint& x, std::vector<TightComponent> comps, MupiOptions opts)
      : a_(g.a), b_(g.b), na_(static_cast<int>(g.a.size())), nb_(static_cast<int>(g.b.size())), opts_(opts) {
    lo_.resize(na_);
    hi_.resize(na_);
    for (int i = 0; i < na_; ++i) {
      lo_[i] = g.inc_a[i].first;
      hi_[i] = g.inc_a[i].last + 1;
    }
    refresh_b_ranges();
    xa_.assign(x.x.begin(), x.x.begin() + na_);
    xb_.assign(x.x.begin() + na_, x.x.end());
    comps_ = std::move(comps);
    reindex();
    eps_ = Rational(1, 2 * std::max(1, na_ + nb_));
    entropy_ = point_entropy(point());
  }

  [[nodiscard]] StabPoint point() const {
    StabPoint x;
    x.x = xa_;
    x.x.insert(x.x.end(), xb_.begin(), xb_.end());
    return x;
  }

  [[nodiscard]] TwoChainCover cover() const { return cover_from_bounds(a_, b_, lo_, hi_); }
  [[nodiscard]] const std::vector<TightComponent>& comps() const { return comps_; }
  [[nodiscard]] std::int64_t comparisons() const { return comparisons_; }
  [[nodiscard]] int iterations() const { return iterations_; }

  // Signed slack of comps_[k]; fills `merge_with` with the components that
  // become tight with it when the cap is reached.
  Rational slack_of(int k, std::vector<int>* merge_with) const {
    const TightComponent& comp = comps_[k];
    const Rational delta = Rational(comp.a.size(), comp.size()) - comp.xa;
    if (delta == 0) return delta;
    const bool raise_a = delta > 0;
    Rational need = raise_a ? delta : -delta;
    const Interval range = raise_a ? Interval{lo_[comp.a.first], hi_[comp.a.last] - 1}
                                   : Interval{s_[comp.b.first], e_[comp.b.last] - 1};
    const Interval own = raise_a ? comp.b : comp.a;
    const auto& weight = raise_a ? xb_ : xa_;
    const auto& owner = raise_a ? comp_b_ : comp_a_;
    std::optional<Rational> heaviest;
    for (int w = range.first; w <= range.last; ++w) {
      if (own.contains(w)) continue;
      if (owner[w] < 0) throw StructureError("neighbour of a component lies in no component");
      if (!heaviest || weight[w] > *heaviest) heaviest = weight[w];
    }
    if (heaviest) {
      const Rational cap = 1 - (raise_a ? comp.xa : comp.xb) - *heaviest;
      if (cap <= 0) throw StructureError("non-tight edge without room");
      if (cap <= need) {
        need = cap;
        if (merge_with != nullptr) {
          for (int w = range.first; w <= range.last; ++w) {
            if (!own.contains(w) && weight[w] == *heaviest) merge_with->push_back(owner[w]);
          }
        }
      }
    }
    return raise_a ? need : -need;
  }

  void rebalance_all() {
    for (;;) {
      int k = -1;
      for (int t = 0; t < static_cast<int>(comps_.size()); ++t) {
        if (!comps_[t].balanced()) {
          k = t;
          break;
        }
      }
      if (k < 0) return;
      std::vector<int> with;
      const Rational sigma = slack_of(k, &with);
      TightComponent& comp = comps_[k];
      comp.xa += sigma;
      comp.xb -= sigma;
      for (int i = comp.a.first; i <= comp.a.last; ++i) xa_[i] = comp.xa;
      for (int j = comp.b.first; j <= comp.b.last; ++j) xb_[j] = comp.xb;
      if (!with.empty()) merge_run(k, with);
      if (opts_.check_invariants) check_step();
    }
  }

  void run(ComparisonSource& src, LinearOrder& out) {
    for (int i = 0; i < na_; ++i) {
      if (lo_[i] == hi_[i]) place_a(i, out);
    }
    for (int j = 0; j < nb_; ++j) {
      if (s_[j] == e_[j]) place_b(j, out);
    }
    if (opts_.check_invariants) check_structure();
    while (!comps_.empty()) iterate(src, out);
    for (Element v : out) {
      if (v < 0) throw StructureError("merging loop ended with unplaced elements");
    }
  }

 private:
  void refresh_b_ranges() {
    s_.resize(nb_);
    e_.resize(nb_);
    int s = 0;
    int e = 0;
    for (int j = 0; j < nb_; ++j) {
      while (s < na_ && hi_[s] <= j) ++s;
      while (e < na_ && lo_[e] <= j) ++e;
      s_[j] = s;
      e_[j] = e;
    }
  }

  void reindex() {
    comp_a_.assign(na_, -1);
    comp_b_.assign(nb_, -1);
    for (int t = 0; t < static_cast<int>(comps_.size()); ++t) {
      for (int i = comps_[t].a.first; i <= comps_[t].a.last; ++i) comp_a_[i] = t;
      for (int j = comps_[t].b.first; j <= comps_[t].b.last; ++j) comp_b_[j] = t;
    }
  }

  void place(int rank, Element v, LinearOrder& out) {
    if (out[rank] != -1 && out[rank] != v) throw StructureError("two elements claim the same rank");
    out[rank] = v;
  }
  void place_a(int i, LinearOrder& out) { place(i + lo_[i], a_[i], out); }
  void place_b(int j, LinearOrder& out) { place(j + s_[j], b_[j], out); }

  void merge_run(int k, std::vector<int> with) {
    with.push_back(k);
    std::sort(with.begin(), with.end());
    with.erase(std::unique(with.begin(), with.end()), with.end());
    const int first = with.front();
    const int last = with.back();
    if (last - first + 1 != static_cast<int>(with.size())) {
      throw StructureError("merge skips over a component");
    }
    TightComponent merged;
    merged.a = {comps_[first].a.first, comps_[last].a.last};
    merged.b = {comps_[first].b.first, comps_[last].b.last};
    merged.xa = comps_[k].xa;
    merged.xb = comps_[k].xb;
    int a_count = 0;
    int b_count = 0;
    for (int t = first; t <= last; ++t) {
      if (comps_[t].xa != merged.xa) throw StructureError("merged components disagree on weights");
      a_count += comps_[t].a.size();
      b_count += comps_[t].b.size();
    }
    if (a_count != merged.a.size() || b_count != merged.b.size()) {
      throw StructureError("merged component is not an interval pair");
    }
    merged.color = color_of(a_count, b_count);
    comps_.erase(comps_.begin() + first + 1, comps_.begin() + last + 1);
    comps_[first] = merged;
    reindex();
  }

  bool good(int k) const {
    const TightComponent& comp = comps_[k];
    const bool small_is_b = comp.color == Color::red;
    const Interval range = small_is_b ? Interval{s_[comp.b.first], e_[comp.b.last] - 1}
                                      : Interval{lo_[comp.a.first], hi_[comp.a.last] - 1};
    const Interval own = small_is_b ? comp.a : comp.b;
    const auto& owner = small_is_b ? comp_a_ : comp_b_;
    for (int w = range.first; w <= range.last; ++w) {
      if (own.contains(w)) continue;
      if (owner[w] < 0) throw StructureError("neighbour of a component lies in no component");
      if (comps_[owner[w]].color == comp.color) return false;
    }
    return true;
  }

  int pick_good() const {
    bool any_red = false;
    for (int k = 0; k < static_cast<int>(comps_.size()); ++k) {
      if (comps_[k].color != Color::red) continue;
      any_red = true;
      if (good(k)) return k;
    }
    if (any_red) throw StructureError("no good red component");
    for (int k = 0; k < static_cast<int>(comps_.size()); ++k) {
      if (good(k)) return k;
    }
    throw StructureError("no good component");
  }

  // -1: in no component, 0: small, 1: big.
  std::vector<int> statuses() const {
    std::vector<int> st(na_ + nb_, -1);
    for (const auto& comp : comps_) {
      const int a_status = comp.color == Color::red ? 1 : 0;
      for (int i = comp.a.first; i <= comp.a.last; ++i) st[i] = a_status;
      for (int j = comp.b.first; j <= comp.b.last; ++j) st[na_ + j] = 1 - a_status;
    }
    return st;
  }

  void iterate(ComparisonSource& src, LinearOrder& out) {
    const int k = pick_good();
    const TightComponent comp = comps_[k];
    const Chain xs(a_.begin() + comp.a.first, a_.begin() + comp.a.last + 1);
    const Chain ys(b_.begin() + comp.b.first, b_.begin() + comp.b.last + 1);
    const MergeReport merged = hwang_lin_merge(xs, ys, src);
    comparisons_ += merged.comparisons;

    std::unordered_map<Element, int> a_slot;
    for (int i = comp.a.first; i <= comp.a.last; ++i) a_slot.emplace(a_[i], i);
    int b_seen = 0;
    for (Element v : merged.merged) {
      const auto it = a_slot.find(v);
      if (it == a_slot.end()) {
        ++b_seen;
        continue;
      }
      const int i = it->second;
      if (b_seen > 0) lo_[i] = std::max(lo_[i], comp.b.first + b_seen);
      if (b_seen < comp.b.size()) hi_[i] = std::min(hi_[i], comp.b.first + b_seen);
    }
    for (int i = 1; i < na_; ++i) lo_[i] = std::max(lo_[i], lo_[i - 1]);
    for (int i = na_ - 2; i >= 0; --i) hi_[i] = std::min(hi_[i], hi_[i + 1]);
    for (int i = 0; i < na_; ++i) {
      if (lo_[i] > hi_[i]) throw StructureError("oracle answers contradict the partial order");
    }
    refresh_b_ranges();
    comps_.erase(comps_.begin() + k);
    reindex();

    std::vector<int> before;
    if (opts_.check_invariants) {
      before = statuses();
      for (int i = comp.a.first; i <= comp.a.last; ++i) before[i] = 1;
      for (int j = comp.b.first; j <= comp.b.last; ++j) before[na_ + j] = 1;
    }

    for (int i = comp.a.first; i <= comp.a.last; ++i) xa_[i] = std::max(xa_[i], kHalf);
    for (int j = comp.b.first; j <= comp.b.last; ++j) xb_[j] = std::max(xb_[j], kHalf + eps_);
    if (opts_.check_invariants) check_entropy();

    absorb(comp, out);
    rebalance_all();
    ++iterations_;

    if (opts_.check_invariants) {
      check_structure();
      const auto after = statuses();
      for (int v = 0; v < na_ + nb_; ++v) {
        if (after[v] != -1 && after[v] != before[v]) throw StructureError("a vertex changed small/big status");
      }
    }
  }

  // Vertices of the merged component: each either becomes a cut-point or is
  // raised until it is tight with its heaviest neighbours and joins them.
  void absorb(const TightComponent& comp, LinearOrder& out) {
    struct Joiner {
      bool side_a;
      int pos;
      int target;
    };
    const int count = static_cast<int>(comps_.size());
    DisjointSets groups(std::max(count, 1));
    std::vector<Joiner> joiners;

    auto settle = [&](bool side_a, int pos) {
      const Interval range = side_a ? Interval{lo_[pos], hi_[pos] - 1} : Interval{s_[pos], e_[pos] - 1};
      auto& own = side_a ? xa_ : xb_;
      const auto& weight = side_a ? xb_ : xa_;
      const auto& owner = side_a ? comp_b_ : comp_a_;
      if (range.empty()) {
        own[pos] = 1;
        side_a ? place_a(pos, out) : place_b(pos, out);
        return;
      }
      Rational heaviest = 0;
      for (int w = range.first; w <= range.last; ++w) {
        if (owner[w] < 0) throw StructureError("neighbour of a merged vertex lies in no component");
        heaviest = std::max(heaviest, weight[w]);
      }
      const Rational raised = 1 - heaviest;
      if (raised < own[pos]) throw StructureError("lifted point is infeasible");
      own[pos] = raised;
      int target = -1;
      for (int w = range.first; w <= range.last; ++w) {
        if (weight[w] != heaviest) continue;
        if (target < 0) {
          target = owner[w];
        } else {
          groups.unite(owner[w], target);
        }
      }
      joiners.push_back({side_a, pos, target});
    };
    for (int i = comp.a.first; i <= comp.a.last; ++i) settle(true, i);
    for (int j = comp.b.first; j <= comp.b.last; ++j) settle(false, j);
    if (joiners.empty()) return;

    struct Group {
      int a_min = 1 << 30, a_max = -1, b_min = 1 << 30, b_max = -1;
      int a_count = 0, b_count = 0;
      std::optional<Rational> xa, xb;
    };
    std::vector<Group> acc(count);
    auto add_weights = [](Group& grp, const Rational& xa, const Rational& xb) {
      if (grp.xa && (*grp.xa != xa || *grp.xb != xb)) throw StructureError("joined vertices disagree on weights");
      grp.xa = xa;
      grp.xb = xb;
    };
    for (int t = 0; t < count; ++t) {
      Group& grp = acc[groups.find(t)];
      const auto& c = comps_[t];
      grp.a_min = std::min(grp.a_min, c.a.first);
      grp.a_max = std::max(grp.a_max, c.a.last);
      grp.b_min = std::min(grp.b_min, c.b.first);
      grp.b_max = std::max(grp.b_max, c.b.last);
      grp.a_count += c.a.size();
      grp.b_count += c.b.size();
      add_weights(grp, c.xa, c.xb);
    }
    for (const auto& jn : joiners) {
      Group& grp = acc[groups.find(jn.target)];
      if (jn.side_a) {
        grp.a_min = std::min(grp.a_min, jn.pos);
        grp.a_max = std::max(grp.a_max, jn.pos);
        ++grp.a_count;
        add_weights(grp, xa_[jn.pos], 1 - xa_[jn.pos]);
      } else {
        grp.b_min = std::min(grp.b_min, jn.pos);
        grp.b_max = std::max(grp.b_max, jn.pos);
        ++grp.b_count;
        add_weights(grp, 1 - xb_[jn.pos], xb_[jn.pos]);
      }
    }
    std::vector<TightComponent> rebuilt;
    for (int t = 0; t < count; ++t) {
      if (groups.find(t) != t) continue;
      const Group& grp = acc[t];
      TightComponent c;
      c.a = {grp.a_min, grp.a_max};
      c.b = {grp.b_min, grp.b_max};
      if (c.a.size() != grp.a_count || c.b.size() != grp.b_count) {
        throw StructureError("absorbed component is not an interval pair");
      }
      c.xa = *grp.xa;
      c.xb = *grp.xb;
      c.color = color_of(grp.a_count, grp.b_count);
      rebuilt.push_back(c);
    }
    std::sort(rebuilt.begin(), rebuilt.end(),
              [](const TightComponent& l, const TightComponent& r) { return l.a.first < r.a.first; });
    comps_ = std::move(rebuilt);
    reindex();
  }

  void check_entropy() {
    const double h = point_entropy(point());
    if (h > entropy_ + 1e-12) throw StructureError("entropy of the point increased");
    entropy_ = h;
  }

  void check_step() {
    for (const auto& c : comps_) {
      if (!color_consistent(c)) throw StructureError("point is not colour consistent");
    }
    check_entropy();
  }

  void check_structure() {
    const TwoChainCover g = cover();
    const StabPoint x = point();
    const TightComponents fresh = build_tight_components(g, x);
    if (fresh.comps != comps_) throw StructureError("incremental components differ from a rebuild");
    for (const auto& c : comps_) {
      if (!color_consistent(c)) throw StructureError("point is not colour consistent");
      if (!c.balanced()) throw StructureError("component left unbalanced");
    }
    check_entropy();
    if (na_ + nb_ > 64) return;
    std::vector<std::pair<int, int>> tight;
    for (int i = 0; i < na_; ++i) {
      for (int j = lo_[i]; j < hi_[i]; ++j) {
        if (xa_[i] + xb_[j] == 1) tight.emplace_back(i, j);
      }
    }
    auto tight_edge = [&](int i, int j) { return lo_[i] <= j && j < hi_[i] && xa_[i] + xb_[j] == 1; };
    for (const auto& [i, j] : tight) {
      for (const auto& [k, l] : tight) {
        if (i < k && l < j && !(tight_edge(i, l) && tight_edge(k, j))) {
          throw StructureError("crossing tight edges without tight induced edges");
        }
      }
    }
  }

  Chain a_;
  Chain b_;
  int na_;
  int nb_;
  MupiOptions opts_;
  std::vector<int> lo_, hi_;  // per A vertex
  std::vector<int> s_, e_;    // per B vertex: A-neighbours are [s, e)
  std::vector<Rational> xa_, xb_;
  std::vector<TightComponent> comps_;
  std::vector<int> comp_a_, comp_b_;
  Rational eps_;
  double entropy_ = 0.0;
  std::int64_t comparisons_ = 0;
  int iterations_ = 0;
};

}  // namespace

Rational slack(int k, const TightComponents& tc, const TwoChainCover& g, const StabPoint& x) {
  const Engine engine(g, x, tc.comps, {});
  return engine.slack_of(k, nullptr);
}

std::pair<StabPoint, TightComponents> rebalance(const TwoChainCover& g, StabPoint x, TightComponents tc) {
  Engine engine(g, x, std::move(tc.comps), {});
  engine.rebalance_all();
  StabPoint y = engine.point();
  TightComponents out = build_tight_components(g, y);
  return {std::move(y), std::move(out)};
}

void emit_cut_points(const TwoChainCover& g, LinearOrder& out) {
  const int na = static_cast<int>(g.a.size());
  for (int i = 0; i < na; ++i) {
    if (g.inc_a[i].empty()) out[i + g.inc_a[i].first] = g.a[i];
  }
  for (int j = 0; j < static_cast<int>(g.b.size()); ++j) {
    if (g.inc_b[j].empty()) out[j + g.inc_b[j].first] = g.b[j];
  }
}

MupiResult mupi_core(const TwoChainCover& g, const StabPoint& x, ComparisonSource& src, LinearOrder out,
                     const MupiOptions& opts) {
  if (static_cast<int>(out.size()) != g.size()) throw std::invalid_argument("mupi_core: output size mismatch");
  TightComponents tc = build_tight_components(g, x);
  if (!tc.unbalanced.empty()) throw std::invalid_argument("mupi_core: point is not locally optimal");
  MupiResult res;
  res.initial_entropy = point_entropy(x);
  Engine engine(g, x, std::move(tc.comps), opts);
  engine.run(src, out);
  res.order = std::move(out);
  res.comparisons = engine.comparisons();
  res.iterations = engine.iterations();
  return res;
}

MupiSetup prepare_mupi(const Poset& p, const Chain& a, const Chain& b) {
  MupiSetup setup;
  setup.cover = build_two_chain_cover(p, a, b);
  setup.x = convex_bipartite_entropy(setup.cover.graph()).second;
  const TightComponents tc = build_tight_components(setup.cover, setup.x);
  const auto [red, blue] = red_contribution(setup.x, tc, setup.cover.size());
  if (red > blue) {
    setup.x = exchange_sides(setup.x, static_cast<int>(setup.cover.a.size()));
    setup.cover = setup.cover.swapped();
    setup.swapped = true;
  }
  return setup;
}

MupiResult run_mupi(const MupiSetup& setup, ComparisonSource& src, const MupiOptions& opts) {
  LinearOrder out(setup.cover.size(), -1);
  emit_cut_points(setup.cover, out);
  MupiResult res = mupi_core(setup.cover, setup.x, src, std::move(out), opts);
  res.swapped = setup.swapped;
  return res;
}

MupiResult mupi(const Poset& p, const Chain& a, const Chain& b, ComparisonSource& src, const MupiOptions& opts) {
  return run_mupi(prepare_mupi(p, a, b), src, opts);
}

}  // namespace posort
