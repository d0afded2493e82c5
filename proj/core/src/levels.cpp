#include <algorithm>
#include <cmath>

#include "posort/poset.hpp"

namespace posort {
namespace {

// Level decomposition of the sub-poset on the alive elements.
LevelDecomposition levels_of_alive(const Poset& p, const std::vector<char>& alive) {
  const int n = p.size();
  LevelDecomposition out;
  out.level_of.assign(n, -1);
  out.pred.assign(n, -1);
  for (Element v : p.topological_order()) {
    if (!alive[v]) continue;
    int lvl = 0;
    Element best = -1;
    const auto& preds = p.predecessors(v);
    for (auto u = preds.find_first(); u != Poset::Row::npos; u = preds.find_next(u)) {
      if (!alive[u]) continue;
      const int cand = out.level_of[u] + 1;
      if (cand > lvl) {
        lvl = cand;
        best = static_cast<Element>(u);
      } else if (cand == lvl && static_cast<Element>(u) < best) {
        best = static_cast<Element>(u);
      }
    }
    out.level_of[v] = lvl;
    out.pred[v] = best;
    if (lvl >= out.height()) out.levels.resize(lvl + 1);
    out.levels[lvl].push_back(v);
  }
  for (auto& level : out.levels) std::sort(level.begin(), level.end());
  return out;
}

Chain chain_from_levels(const LevelDecomposition& lv) {
  Chain c;
  if (lv.levels.empty()) return c;
  Element v = lv.levels.back().front();
  while (v != -1) {
    c.push_back(v);
    v = lv.pred[v];
  }
  std::reverse(c.begin(), c.end());
  return c;
}

// Incrementally maintained levels for the second phase. For an element v on
// level i (0-based), table[v][j-1] lists its alive predecessors on level i-j.
class LevelTables {
 public:
  LevelTables(const Poset& p, const std::vector<char>& alive) : p_(p), alive_(alive) {
    const auto lv = levels_of_alive(p, alive);
    level_of_ = lv.level_of;
    levels_ = lv.levels;
    const int n = p.size();
    table_.resize(n);
    marked_.assign(n, 0);
    for (Element v = 0; v < n; ++v) {
      if (!alive_[v]) continue;
      table_[v].resize(level_of_[v]);
      const auto& preds = p.predecessors(v);
      for (auto u = preds.find_first(); u != Poset::Row::npos; u = preds.find_next(u)) {
        if (!alive_[u]) continue;
        table_[v][level_of_[v] - level_of_[u] - 1].push_back(static_cast<Element>(u));
      }
    }
  }

  [[nodiscard]] int height() const { return static_cast<int>(levels_.size()); }

  [[nodiscard]] Chain maximum_chain() const {
    Chain c;
    if (levels_.empty()) return c;
    Element v = *std::min_element(levels_.back().begin(), levels_.back().end());
    c.push_back(v);
    while (level_of_[v] > 0) {
      const auto& below = table_[v][0];
      v = *std::min_element(below.begin(), below.end());
      c.push_back(v);
    }
    std::reverse(c.begin(), c.end());
    return c;
  }

  void remove(const Chain& c) {
    for (Element u : c) {
      alive_[u] = 0;
      erase_from(levels_[level_of_[u]], u);
    }
    for (Element u : c) {
      const auto& succ = p_.successors(u);
      for (auto s = succ.find_first(); s != Poset::Row::npos; s = succ.find_next(s)) {
        const auto v = static_cast<Element>(s);
        if (!alive_[v]) continue;
        const int j = level_of_[v] - level_of_[u];
        erase_from(table_[v][j - 1], u);
        if (j == 1 && table_[v][0].empty()) marked_[v] = 1;
      }
      table_[u].clear();
      level_of_[u] = -1;
    }

    for (int i = 0; i < height(); ++i) {
      std::vector<Element> todo;
      for (Element v : levels_[i]) {
        if (marked_[v]) todo.push_back(v);
      }
      for (Element u : todo) {
        marked_[u] = 0;
        auto& tab = table_[u];
        std::size_t skip = 0;
        while (skip < tab.size() && tab[skip].empty()) ++skip;
        // The highest non-empty entry sits `skip + 1` levels down; u settles
        // right above it (or on the bottom level when it has no predecessor).
        const int new_level = i - static_cast<int>(skip);
        tab.erase(tab.begin(), tab.begin() + static_cast<std::ptrdiff_t>(skip));
        erase_from(levels_[i], u);
        levels_[new_level].push_back(u);
        level_of_[u] = new_level;

        const auto& succ = p_.successors(u);
        for (auto s = succ.find_first(); s != Poset::Row::npos; s = succ.find_next(s)) {
          const auto v = static_cast<Element>(s);
          if (!alive_[v]) continue;
          const int old_j = level_of_[v] - i;
          const int new_j = level_of_[v] - new_level;
          erase_from(table_[v][old_j - 1], u);
          table_[v][new_j - 1].push_back(u);
          if (old_j == 1 && table_[v][0].empty()) marked_[v] = 1;
        }
      }
    }
    while (!levels_.empty() && levels_.back().empty()) levels_.pop_back();
  }

 private:
  static void erase_from(std::vector<Element>& xs, Element v) {
    auto it = std::find(xs.begin(), xs.end(), v);
    *it = xs.back();
    xs.pop_back();
  }

  const Poset& p_;
  std::vector<char> alive_;
  std::vector<int> level_of_;
  std::vector<std::vector<Element>> levels_;
  std::vector<std::vector<std::vector<Element>>> table_;
  std::vector<char> marked_;
};

}  // namespace

LevelDecomposition levels(const Poset& p) {
  return levels_of_alive(p, std::vector<char>(p.size(), 1));
}

Chain maximum_chain(const Poset& p) {
  return chain_from_levels(levels(p));
}

ChainDecomposition greedy_chain_decomposition(const Poset& p) {
  const int n = p.size();
  ChainDecomposition out;
  std::vector<char> alive(n, 1);
  int remaining = n;
  const int threshold = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));

  while (remaining > 0) {
    const auto lv = levels_of_alive(p, alive);
    if (lv.height() <= threshold) break;
    Chain c = chain_from_levels(lv);
    for (Element v : c) alive[v] = 0;
    remaining -= static_cast<int>(c.size());
    out.chains.push_back(std::move(c));
  }

  if (remaining > 0) {
    LevelTables tables(p, alive);
    while (remaining > 0) {
      Chain c = tables.maximum_chain();
      tables.remove(c);
      remaining -= static_cast<int>(c.size());
      out.chains.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace posort
