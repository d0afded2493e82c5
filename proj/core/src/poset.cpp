#include "posort/poset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace posort {

Poset::Poset(int n) : n_(n), succ_(n, Row(n)), pred_(n, Row(n)) {
  if (n < 0) throw std::invalid_argument("Poset: negative size");
}

std::size_t Poset::relation_count() const {
  std::size_t total = 0;
  for (const auto& row : succ_) total += row.count();
  return total;
}

std::vector<std::pair<Element, Element>> Poset::relations() const {
  std::vector<std::pair<Element, Element>> out;
  out.reserve(relation_count());
  for (Element u = 0; u < n_; ++u) {
    for (auto v = succ_[u].find_first(); v != Row::npos; v = succ_[u].find_next(v)) {
      out.emplace_back(u, static_cast<Element>(v));
    }
  }
  return out;
}

Poset Poset::induced(std::span<const Element> elems) const {
  const int m = static_cast<int>(elems.size());
  Poset sub(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (less(elems[i], elems[j])) {
        sub.succ_[i].set(j);
        sub.pred_[j].set(i);
      }
    }
  }
  return sub;
}

LinearOrder Poset::topological_order() const {
  LinearOrder order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> npred(n_);
  for (Element v = 0; v < n_; ++v) npred[v] = num_predecessors(v);
  // In a closed relation u < v forces |pred(u)| < |pred(v)|.
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return npred[a] < npred[b]; });
  return order;
}

bool Poset::is_linear_extension(std::span<const Element> order) const {
  if (static_cast<int>(order.size()) != n_) return false;
  std::vector<int> rank(n_, -1);
  for (int i = 0; i < n_; ++i) {
    const Element v = order[i];
    if (v < 0 || v >= n_ || rank[v] != -1) return false;
    rank[v] = i;
  }
  for (Element u = 0; u < n_; ++u) {
    for (auto v = succ_[u].find_first(); v != Row::npos; v = succ_[u].find_next(v)) {
      if (rank[u] > rank[v]) return false;
    }
  }
  return true;
}

bool Poset::is_chain(std::span<const Element> elems) const {
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (!less(elems[i - 1], elems[i])) return false;
  }
  return true;
}

Poset transitive_closure(std::span<const std::pair<Element, Element>> pairs, int n) {
  Poset p(n);
  // Direct predecessors and successors in CSR form.
  std::vector<int> pred_start(n + 1, 0);
  std::vector<int> succ_start(n + 1, 0);
  for (const auto& [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::out_of_range("transitive_closure: element out of range");
    }
    if (u == v) throw CycleError("transitive_closure: self-relation on " + std::to_string(u));
    ++pred_start[v + 1];
    ++succ_start[u + 1];
  }
  std::partial_sum(pred_start.begin(), pred_start.end(), pred_start.begin());
  std::partial_sum(succ_start.begin(), succ_start.end(), succ_start.begin());
  std::vector<Element> preds(pairs.size());
  std::vector<Element> succs(pairs.size());
  {
    std::vector<int> pf(pred_start.begin(), pred_start.end() - 1);
    std::vector<int> sf(succ_start.begin(), succ_start.end() - 1);
    for (const auto& [u, v] : pairs) {
      preds[pf[v]++] = u;
      succs[sf[u]++] = v;
    }
  }

  // Kahn's algorithm; whatever is left unprocessed lies on a cycle.
  std::vector<int> indegree(n);
  std::vector<Element> order;
  order.reserve(n);
  for (Element v = 0; v < n; ++v) {
    indegree[v] = pred_start[v + 1] - pred_start[v];
    if (indegree[v] == 0) order.push_back(v);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Element u = order[head];
    for (int t = succ_start[u]; t < succ_start[u + 1]; ++t) {
      if (--indegree[succs[t]] == 0) order.push_back(succs[t]);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw CycleError("transitive_closure: relation contains a cycle");
  }

  for (Element v : order) {
    for (int t = pred_start[v]; t < pred_start[v + 1]; ++t) {
      p.pred_[v] |= p.pred_[preds[t]];
      p.pred_[v].set(preds[t]);
    }
  }
  for (Element v = 0; v < n; ++v) {
    for (auto u = p.pred_[v].find_first(); u != Poset::Row::npos; u = p.pred_[v].find_next(u)) {
      p.succ_[u].set(v);
    }
  }
  return p;
}

int ChainDecomposition::element_count() const {
  int total = 0;
  for (const auto& c : chains) total += static_cast<int>(c.size());
  return total;
}

std::vector<int> ChainDecomposition::sizes() const {
  std::vector<int> out;
  out.reserve(chains.size());
  for (const auto& c : chains) out.push_back(static_cast<int>(c.size()));
  return out;
}

std::vector<Element> cut_points(const Poset& p) {
  std::vector<Element> out;
  const int n = p.size();
  for (Element v = 0; v < n; ++v) {
    if (static_cast<int>((p.successors(v) | p.predecessors(v)).count()) == n - 1) out.push_back(v);
  }
  return out;
}

Poset add_chain_relations(const Poset& p, std::span<const Element> c) {
  for (Element v : c) {
    if (v < 0 || v >= p.size()) throw std::out_of_range("add_chain_relations: element out of range");
  }
  Poset q = p;
  for (std::size_t i = 1; i < c.size(); ++i) {
    const Element u = c[i - 1];
    const Element v = c[i];
    if (u == v || q.less(v, u)) throw CycleError("add_chain_relations: chain contradicts the order");
    if (q.less(u, v)) continue;
    Poset::Row below = q.pred_[u];
    below.set(u);
    Poset::Row above = q.succ_[v];
    above.set(v);
    for (auto x = below.find_first(); x != Poset::Row::npos; x = below.find_next(x)) q.succ_[x] |= above;
    for (auto y = above.find_first(); y != Poset::Row::npos; y = above.find_next(y)) q.pred_[y] |= below;
  }
  return q;
}

Poset random_poset(int n, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("random_poset: density must lie in [0,1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution keep(density);
  std::vector<std::pair<Element, Element>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (keep(rng)) pairs.emplace_back(perm[i], perm[j]);
    }
  }
  return transitive_closure(pairs, n);
}

LinearOrder random_topological_order(const Poset& p, std::mt19937_64& rng) {
  const int n = p.size();
  std::vector<int> remaining_preds(n);
  std::vector<Element> ready;
  for (Element v = 0; v < n; ++v) {
    remaining_preds[v] = p.num_predecessors(v);
    if (remaining_preds[v] == 0) ready.push_back(v);
  }
  LinearOrder order;
  order.reserve(n);
  while (!ready.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const std::size_t k = pick(rng);
    const Element v = ready[k];
    ready[k] = ready.back();
    ready.pop_back();
    order.push_back(v);
    const auto& succ = p.successors(v);
    for (auto w = succ.find_first(); w != Poset::Row::npos; w = succ.find_next(w)) {
      if (--remaining_preds[w] == 0) ready.push_back(static_cast<Element>(w));
    }
  }
  return order;
}

}  // namespace posort
