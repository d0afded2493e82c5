#include "posort/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "posort/convex_flow.hpp"

namespace posort {
namespace {

double log2_of(const Rational& r) {
  return std::log2(static_cast<double>(r.numerator())) - std::log2(static_cast<double>(r.denominator()));
}

// The graph left after removing earlier blocks, with A positions renumbered
// 0..|A'|-1.
struct Residual {
  std::vector<int> a_pos;         // compressed index -> original position
  std::vector<int> b_idx;         // alive, non-isolated B vertices
  std::vector<Interval> b_nbr;    // their neighbourhoods in compressed indices
  std::vector<int> isolated_b;    // alive B vertices without neighbours
  int first_isolated_a = -1;      // compressed index of an isolated A vertex
};

Residual residual_graph(const BipartiteConvexGraph& g, const std::vector<char>& alive_a,
                        const std::vector<char>& alive_b) {
  Residual r;
  for (int i = 0; i < static_cast<int>(g.side_a.size()); ++i) {
    if (alive_a[i]) r.a_pos.push_back(i);
  }
  const int k = static_cast<int>(r.a_pos.size());
  std::vector<int> cover(k + 1, 0);
  for (int j = 0; j < static_cast<int>(g.side_b.size()); ++j) {
    if (!alive_b[j]) continue;
    const Interval& iv = g.nbr[j];
    const int f = static_cast<int>(std::lower_bound(r.a_pos.begin(), r.a_pos.end(), iv.first) - r.a_pos.begin());
    const int l = static_cast<int>(std::upper_bound(r.a_pos.begin(), r.a_pos.end(), iv.last) - r.a_pos.begin()) - 1;
    if (iv.empty() || f > l) {
      r.isolated_b.push_back(j);
      continue;
    }
    r.b_idx.push_back(j);
    r.b_nbr.push_back({f, l});
    ++cover[f];
    --cover[l + 1];
  }
  int running = 0;
  for (int i = 0; i < k; ++i) {
    running += cover[i];
    if (running == 0) {
      r.first_isolated_a = i;
      break;
    }
  }
  return r;
}

struct Fraction {
  std::int64_t num;
  std::int64_t den;
};

bool less_fraction(const Fraction& l, const Fraction& r) { return l.num * r.den < r.num * l.den; }

// Does some S within the residual A side have |S|/|N(S)| > num/den?
bool ratio_exceeded(const Residual& r, const Fraction& f) {
  const auto k = static_cast<std::int64_t>(r.a_pos.size());
  const BMatching m = convex_b_matching(static_cast<int>(k), r.b_nbr, f.den, f.num);
  return m.value < f.den * k;
}

// Appends block and removes its vertices.
void take_block(KMPartition& part, KMBlock block, std::vector<char>& alive_a, std::vector<char>& alive_b) {
  for (int i : block.a) alive_a[i] = 0;
  for (int j : block.b) alive_b[j] = 0;
  part.blocks.push_back(std::move(block));
}

// Residual neighbourhood of a set of compressed A indices, as original B positions.
std::vector<int> neighbourhood(const Residual& r, const std::vector<char>& in_set) {
  const int k = static_cast<int>(r.a_pos.size());
  std::vector<int> prefix(k + 1, 0);
  for (int i = 0; i < k; ++i) prefix[i + 1] = prefix[i] + (in_set[i] ? 1 : 0);
  std::vector<int> out;
  for (std::size_t t = 0; t < r.b_idx.size(); ++t) {
    if (prefix[r.b_nbr[t].last + 1] - prefix[r.b_nbr[t].first] > 0) out.push_back(r.b_idx[t]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Shared driver: `choose` returns the maximizer (compressed indices) for a
// residual graph with no isolated A vertex and at least one A vertex.
template <class Choose>
KMPartition km_iterate(const BipartiteConvexGraph& g, Choose choose) {
  validate(g);
  KMPartition part;
  part.num_a = static_cast<int>(g.side_a.size());
  part.num_b = static_cast<int>(g.side_b.size());
  std::vector<char> alive_a(part.num_a, 1);
  std::vector<char> alive_b(part.num_b, 1);
  for (;;) {
    Residual r = residual_graph(g, alive_a, alive_b);
    if (r.a_pos.empty()) {
      std::vector<int> rest = r.isolated_b;
      for (int j : r.b_idx) rest.push_back(j);
      std::sort(rest.begin(), rest.end());
      for (int j : rest) take_block(part, KMBlock{{}, {j}}, alive_a, alive_b);
      break;
    }
    if (r.first_isolated_a >= 0) {
      take_block(part, KMBlock{{r.a_pos[r.first_isolated_a]}, {}}, alive_a, alive_b);
      continue;
    }
    const std::vector<int> chosen = choose(r);
    std::vector<char> in_set(r.a_pos.size(), 0);
    KMBlock block;
    for (int i : chosen) {
      in_set[i] = 1;
      block.a.push_back(r.a_pos[i]);
    }
    block.b = neighbourhood(r, in_set);
    take_block(part, std::move(block), alive_a, alive_b);
  }
  part.entropy = partition_entropy(part);
  return part;
}

}  // namespace

void validate(const BipartiteConvexGraph& g) {
  if (g.nbr.size() != g.side_b.size()) {
    throw std::invalid_argument("BipartiteConvexGraph: one interval per B vertex required");
  }
  const int na = static_cast<int>(g.side_a.size());
  for (const auto& iv : g.nbr) {
    if (iv.empty()) {
      if (iv.last != iv.first - 1) throw std::invalid_argument("BipartiteConvexGraph: malformed empty interval");
      continue;
    }
    if (iv.first < 0 || iv.last >= na) throw std::invalid_argument("BipartiteConvexGraph: interval out of range");
  }
}

bool feasible(const BipartiteConvexGraph& g, const StabPoint& x) {
  const int na = static_cast<int>(g.side_a.size());
  if (x.size() != g.size()) return false;
  for (const auto& w : x.x) {
    if (w <= 0 || w > 1) return false;
  }
  for (int j = 0; j < static_cast<int>(g.side_b.size()); ++j) {
    for (int i = g.nbr[j].first; i <= g.nbr[j].last; ++i) {
      if (x[i] + x[na + j] > 1) return false;
    }
  }
  return true;
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double point_entropy(const StabPoint& x) {
  if (x.x.empty()) return 0.0;
  double total = 0.0;
  for (const auto& w : x.x) total -= log2_of(w);
  return total / static_cast<double>(x.size());
}

StabPoint greedy_point(const ChainDecomposition& d) {
  const int n = d.element_count();
  StabPoint x;
  x.x.assign(n, Rational(0));
  for (const auto& c : d.chains) {
    for (Element v : c) x[v] = Rational(static_cast<std::int64_t>(c.size()), n);
  }
  return x;
}

double chain_size_entropy(const ChainDecomposition& d) {
  const double n = d.element_count();
  double h = 0.0;
  for (const auto& c : d.chains) {
    if (c.empty()) continue;
    const double p = static_cast<double>(c.size()) / n;
    h -= p * std::log2(p);
  }
  return h;
}

double partition_entropy(const KMPartition& part) {
  const double n = part.num_a + part.num_b;
  if (n == 0) return 0.0;
  double h = 0.0;
  for (const auto& blk : part.blocks) {
    const double size = static_cast<double>(blk.a.size() + blk.b.size());
    h += size / n * binary_entropy(static_cast<double>(blk.a.size()) / size);
  }
  return h;
}

KMPartition km_partition_bruteforce(const BipartiteConvexGraph& g) {
  if (static_cast<int>(g.side_a.size()) > kMaxBruteForceSide) {
    throw TooLargeError("km_partition_bruteforce: A side limited to " + std::to_string(kMaxBruteForceSide));
  }
  return km_iterate(g, [](const Residual& r) {
    const int k = static_cast<int>(r.a_pos.size());
    std::vector<std::uint32_t> range_mask;
    for (const auto& iv : r.b_nbr) {
      range_mask.push_back(((std::uint32_t{1} << (iv.last + 1)) - 1) & ~((std::uint32_t{1} << iv.first) - 1));
    }
    std::uint32_t best = 0;
    std::int64_t best_num = 0;
    std::int64_t best_den = 1;
    auto lex_less = [](std::uint32_t l, std::uint32_t r_) {
      // Compare as sorted index lists.
      while (l != 0 && r_ != 0) {
        const int bl = __builtin_ctz(l);
        const int br = __builtin_ctz(r_);
        if (bl != br) return bl < br;
        l &= l - 1;
        r_ &= r_ - 1;
      }
      return l == 0 && r_ != 0;
    };
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << k); ++s) {
      std::int64_t nb = 0;
      for (auto m : range_mask) nb += (s & m) != 0 ? 1 : 0;
      const std::int64_t na = __builtin_popcount(s);
      const std::int64_t lhs = na * best_den;
      const std::int64_t rhs = best_num * nb;
      bool better = best == 0 || lhs > rhs;
      if (!better && lhs == rhs) {
        better = na > best_num || (na == best_num && lex_less(s, best));
      }
      if (better) {
        best = s;
        best_num = na;
        best_den = nb;
      }
    }
    std::vector<int> out;
    for (int i = 0; i < k; ++i) {
      if ((best >> i) & 1U) out.push_back(i);
    }
    return out;
  });
}

StabPoint km_to_point(const KMPartition& part) {
  StabPoint x;
  x.x.assign(part.num_a + part.num_b, Rational(0));
  for (const auto& blk : part.blocks) {
    const auto na = static_cast<std::int64_t>(blk.a.size());
    const auto nb = static_cast<std::int64_t>(blk.b.size());
    for (int i : blk.a) x[i] = Rational(na, na + nb);
    for (int j : blk.b) x[part.num_a + j] = Rational(nb, na + nb);
  }
  return x;
}

std::pair<KMPartition, StabPoint> convex_bipartite_entropy(const BipartiteConvexGraph& g) {
  KMPartition part = km_iterate(g, [](const Residual& r) {
    const auto k = static_cast<std::int64_t>(r.a_pos.size());
    const auto m = static_cast<std::int64_t>(r.b_idx.size());
    // The whole residual side has ratio k/m, a lower bound on the maximum.
    const Fraction floor_ratio{k, m};
    std::vector<Fraction> cand;
    for (std::int64_t num = 1; num <= k; ++num) {
      for (std::int64_t den = 1; den <= m; ++den) {
        if (std::gcd(num, den) != 1) continue;
        if (less_fraction(Fraction{num, den}, floor_ratio)) break;
        cand.push_back({num, den});
      }
    }
    std::sort(cand.begin(), cand.end(), less_fraction);
    // Smallest candidate that no subset exceeds is the maximum ratio.
    std::size_t lo = 0;
    std::size_t hi = cand.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (ratio_exceeded(r, cand[mid])) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    const Fraction best = cand[lo];
    const BMatching flow = convex_b_matching(static_cast<int>(k), r.b_nbr, best.den, best.num);
    return unreachable_from_sink(static_cast<int>(k), r.b_nbr, flow, best.num);
  });
  StabPoint x = km_to_point(part);
  return {std::move(part), std::move(x)};
}

bool greedy_entropy_bound_check(const ChainDecomposition& d, double h_exact, double eps) {
  const double h_greedy = point_entropy(greedy_point(d));
  return h_greedy <= (1.0 + eps) * h_exact + (1.0 + eps) * std::log2(1.0 + 1.0 / eps) + 1e-9;
}

BipartiteConvexGraph chain_vs_rest_graph(const Poset& p, const Chain& a, const std::vector<Element>& rest) {
  BipartiteConvexGraph g;
  g.side_a = a;
  g.side_b = rest;
  const int na = static_cast<int>(a.size());
  for (Element v : rest) {
    int below = 0;
    while (below < na && p.less(a[below], v)) ++below;
    int above = below;
    while (above < na && !p.less(v, a[above])) ++above;
    g.nbr.push_back({below, above - 1});
  }
  return g;
}

}  // namespace posort
