#include "posort/convex_flow.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace posort {

BMatching convex_b_matching(int num_a, std::span<const Interval> b_nbr, std::int64_t alpha, std::int64_t beta) {
  const int nb = static_cast<int>(b_nbr.size());
  BMatching m;
  m.b_load.assign(nb, 0);
  m.edge_start.assign(num_a + 1, 0);
  m.edges.reserve(static_cast<std::size_t>(num_a + nb));

  std::vector<int> by_first;
  by_first.reserve(nb);
  for (int j = 0; j < nb; ++j) {
    if (!b_nbr[j].empty()) by_first.push_back(j);
  }
  std::sort(by_first.begin(), by_first.end(), [&](int l, int r) {
    return b_nbr[l].first != b_nbr[r].first ? b_nbr[l].first < b_nbr[r].first : l < r;
  });

  using Key = std::pair<int, int>;  // (interval end, b index)
  std::vector<Key> heap_store;
  heap_store.reserve(nb);
  std::priority_queue<Key, std::vector<Key>, std::greater<>> pending(std::greater<>{}, std::move(heap_store));
  std::size_t next = 0;
  for (int pos = 0; pos < num_a; ++pos) {
    while (next < by_first.size() && b_nbr[by_first[next]].first == pos) {
      const int j = by_first[next++];
      pending.emplace(b_nbr[j].last, j);
    }
    while (!pending.empty() && pending.top().first < pos) pending.pop();
    m.edge_start[pos] = static_cast<int>(m.edges.size());
    std::int64_t cap = alpha;
    while (cap > 0 && !pending.empty()) {
      const int j = pending.top().second;
      const std::int64_t take = std::min(cap, beta - m.b_load[j]);
      m.edges.push_back({j, take});
      m.b_load[j] += take;
      cap -= take;
      if (m.b_load[j] == beta) pending.pop();
    }
    m.value += alpha - cap;
  }
  m.edge_start[num_a] = static_cast<int>(m.edges.size());
  return m;
}

std::vector<int> unreachable_from_sink(int num_a, std::span<const Interval> b_nbr, const BMatching& m,
                                       std::int64_t beta) {
  const int nb = static_cast<int>(b_nbr.size());
  // skip[i] is the smallest unvisited A position >= i (num_a when none).
  std::vector<int> skip(num_a + 1);
  std::iota(skip.begin(), skip.end(), 0);
  auto find = [&](int i) {
    int root = i;
    while (skip[root] != root) root = skip[root];
    while (skip[i] != root) {
      const int up = skip[i];
      skip[i] = root;
      i = up;
    }
    return root;
  };

  std::vector<char> seen_a(num_a, 0);
  std::vector<char> seen_b(nb, 0);
  std::queue<int> todo;
  for (int j = 0; j < nb; ++j) {
    if (m.b_load[j] < beta) {
      seen_b[j] = 1;
      todo.push(j);
    }
  }
  while (!todo.empty()) {
    const int j = todo.front();
    todo.pop();
    if (b_nbr[j].empty()) continue;
    for (int u = find(b_nbr[j].first); u <= b_nbr[j].last; u = find(u)) {
      seen_a[u] = 1;
      skip[u] = u + 1;
      for (const auto& e : m.support(u)) {
        if (e.amount > 0 && !seen_b[e.b]) {
          seen_b[e.b] = 1;
          todo.push(e.b);
        }
      }
    }
  }
  std::vector<int> out;
  for (int u = 0; u < num_a; ++u) {
    if (!seen_a[u]) out.push_back(u);
  }
  return out;
}

}  // namespace posort
