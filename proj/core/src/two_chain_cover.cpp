#include <algorithm>
#include <queue>

#include "posort/mupi.hpp"

namespace posort {

BipartiteConvexGraph TwoChainCover::graph() const {
  BipartiteConvexGraph g;
  g.side_a = a;
  g.side_b = b;
  g.nbr = inc_b;
  return g;
}

TwoChainCover TwoChainCover::swapped() const {
  TwoChainCover s;
  s.a = b;
  s.b = a;
  s.inc_a = inc_b;
  s.inc_b = inc_a;
  return s;
}

TwoChainCover cover_from_bounds(Chain a, Chain b, const std::vector<int>& lo, const std::vector<int>& hi) {
  TwoChainCover g;
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  g.a = std::move(a);
  g.b = std::move(b);
  g.inc_a.resize(na);
  for (int i = 0; i < na; ++i) g.inc_a[i] = {lo[i], hi[i] - 1};
  g.inc_b.resize(nb);
  int s = 0;
  int e = 0;
  for (int j = 0; j < nb; ++j) {
    while (s < na && hi[s] <= j) ++s;
    while (e < na && lo[e] <= j) ++e;
    g.inc_b[j] = {s, e - 1};
  }
  return g;
}

TwoChainCover build_two_chain_cover(const Poset& p, const Chain& a, const Chain& b) {
  const int n = p.size();
  if (static_cast<int>(a.size() + b.size()) != n) throw InvalidCoverError("chains do not cover the poset");
  std::vector<char> seen(n, 0);
  for (const Chain* c : {&a, &b}) {
    for (Element v : *c) {
      if (v < 0 || v >= n || seen[v]) throw InvalidCoverError("chains are not a partition of the ground set");
      seen[v] = 1;
    }
    if (!p.is_chain(*c)) throw InvalidCoverError("listed elements do not form a chain");
  }
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  std::vector<int> lo(na);
  std::vector<int> hi(na);
  int j = 0;
  for (int i = 0; i < na; ++i) {
    while (j < nb && p.less(b[j], a[i])) ++j;
    lo[i] = j;
  }
  j = nb;
  for (int i = na - 1; i >= 0; --i) {
    while (j > 0 && p.less(a[i], b[j - 1])) --j;
    hi[i] = j;
  }
  return cover_from_bounds(a, b, lo, hi);
}

std::optional<std::pair<Chain, Chain>> find_two_chain_cover(const Poset& p) {
  const int n = p.size();
  std::vector<int> side(n, -1);
  for (Element s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Element> todo;
    todo.push(s);
    while (!todo.empty()) {
      const Element u = todo.front();
      todo.pop();
      for (Element w = 0; w < n; ++w) {
        if (w == u || p.comparable(u, w)) continue;
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          todo.push(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<Chain, Chain> out;
  for (Element v : p.topological_order()) (side[v] == 0 ? out.first : out.second).push_back(v);
  return out;
}

}  // namespace posort
