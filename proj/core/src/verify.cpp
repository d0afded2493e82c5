#include "posort/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "posort/entropy.hpp"
#include "posort/mupi.hpp"
#include "posort/oracle.hpp"
#include "posort/sorters.hpp"

namespace posort {
namespace {

Poset width2_poset(const std::vector<Element>& a, const std::vector<Element>& b, const std::vector<int>& lo,
                   const std::vector<int>& hi) {
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 1; i < a.size(); ++i) pairs.emplace_back(a[i - 1], a[i]);
  for (std::size_t j = 1; j < b.size(); ++j) pairs.emplace_back(b[j - 1], b[j]);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (lo[i] > 0) pairs.emplace_back(b[lo[i] - 1], a[i]);
    if (hi[i] < static_cast<int>(b.size())) pairs.emplace_back(a[i], b[hi[i]]);
  }
  return transitive_closure(pairs, static_cast<int>(a.size() + b.size()));
}

void enumerate_bounds(int i, int p, int q, std::vector<int>& lo, std::vector<int>& hi,
                      const std::function<void()>& visit) {
  if (i == p) {
    visit();
    return;
  }
  const int lo_min = i == 0 ? 0 : lo[i - 1];
  for (int l = lo_min; l <= q; ++l) {
    lo[i] = l;
    const int hi_min = std::max(l, i == 0 ? 0 : hi[i - 1]);
    for (int h = hi_min; h <= q; ++h) {
      hi[i] = h;
      enumerate_bounds(i + 1, p, q, lo, hi, visit);
    }
  }
}

// Colour refinement by predecessor/successor colour multisets.
std::vector<int> refine(const Poset& p) {
  const int n = p.size();
  std::vector<int> color(n, 0);
  for (int round = 0; round <= n; ++round) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig(n);
    for (Element v = 0; v < n; ++v) {
      std::vector<int> below;
      std::vector<int> above;
      for (Element u = 0; u < n; ++u) {
        if (p.less(u, v)) below.push_back(color[u]);
        if (p.less(v, u)) above.push_back(color[u]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      sig[v] = {color[v], static_cast<int>(below.size()), static_cast<int>(above.size())};
      sig[v].insert(sig[v].end(), below.begin(), below.end());
      sig[v].push_back(-1);
      sig[v].insert(sig[v].end(), above.begin(), above.end());
      ids.emplace(sig[v], 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<int> fresh(n);
    for (Element v = 0; v < n; ++v) fresh[v] = ids[sig[v]];
    const bool stable = fresh == color;
    color = std::move(fresh);
    if (stable) break;
  }
  return color;
}

class Checker {
 public:
  CheckSummary& check(const std::string& name) {
    for (auto& c : checks_) {
      if (c.name == name) return c;
    }
    checks_.push_back({name, 0, 0, {}});
    return checks_.back();
  }

  void record(const std::string& name, bool ok, const std::string& detail) {
    CheckSummary& c = check(name);
    ++c.instances;
    if (!ok) {
      if (c.violations == 0) c.first_violation = detail;
      ++c.violations;
    }
  }

  std::vector<CheckSummary> take() { return std::move(checks_); }

 private:
  std::vector<CheckSummary> checks_;
};

constexpr double kTol = 1e-9;
const double kLog2E = std::log2(std::exp(1.0));

std::string describe(const Poset& p) {
  std::ostringstream os;
  os << "n=" << p.size() << " relations:";
  for (const auto& [u, v] : p.relations()) os << ' ' << u << '<' << v;
  return os.str();
}

// Every linear extension, or `cap` uniform samples when there are more.
std::vector<LinearOrder> hidden_orders(const Poset& p, int cap, std::mt19937_64& rng) {
  std::vector<LinearOrder> out;
  LinearExtensionCounter counter(p);
  if (counter.total() <= cap) {
    for_each_linear_extension(p, [&](const LinearOrder& o) { out.push_back(o); });
  } else {
    for (int k = 0; k < cap; ++k) out.push_back(counter.sample(rng));
  }
  return out;
}

void check_sorters(const Poset& p, const std::vector<LinearOrder>& orders, double log_e, Checker& chk) {
  const int n = p.size();
  const ChainDecomposition d = greedy_chain_decomposition(p);
  const double g = chain_size_entropy(d);
  const int chain = static_cast<int>(maximum_chain(p).size());
  int log_n = 0;
  while ((1 << log_n) < n) ++log_n;
  const PreprocessedPlan plan = preprocess(p);
  for (const auto& order : orders) {
    const std::string where = describe(p);
    {
      HiddenOrderOracle o(order, p);
      const auto r = insertion_sort_supi(p, o);
      chk.record("correct: insertion", r.order == order, where);
      chk.record("insertion <= ceil(log n)(n-|C|)", r.comparisons <= static_cast<std::int64_t>(log_n) * (n - chain),
                 where);
    }
    {
      HiddenOrderOracle o(order, p);
      const auto r = merge_sort_supi(p, o);
      const auto q = static_cast<double>(r.comparisons);
      chk.record("correct: merge", r.order == order, where);
      chk.record("merge <= (g+1)n", q <= (g + 1) * n + kTol, where);
      for (double eps : {0.35, 1.0}) {
        const double bound = (1 + eps) * log_e + ((1 + eps) * (kLog2E + std::log2(1 + 1 / eps)) + 1) * n;
        chk.record(eps < 0.5 ? "merge <= (1+eps)log e(P) + c n, eps=0.35" : "merge <= (1+eps)log e(P) + c n, eps=1",
                   q <= bound + kTol, where);
      }
    }
    {
      HiddenOrderOracle o(order, p);
      const auto r = cautious_merge_sort(p, o);
      chk.record("correct: cautious", r.order == order, where);
      chk.record("cautious <= 15.09 log e(P)", r.comparisons <= 15.09 * log_e + kTol, where);
    }
    {
      HiddenOrderOracle o(order, p);
      const auto r = preprocessed_sort(p, plan, o);
      chk.record("correct: preprocessed", r.order == order, where);
      chk.record("preprocessed <= 15.09 log e(P)", r.comparisons <= 15.09 * log_e + kTol, where);
    }
  }
}

void check_width2(const Width2Instance& inst, const VerifyOptions& opts, std::mt19937_64& rng, Checker& chk) {
  const Poset& p = inst.poset;
  const int n = p.size();
  const double log_e = log2_linear_extensions(p);
  const TwoChainCover cover = build_two_chain_cover(p, inst.a, inst.b);
  const double nh = n * convex_bipartite_entropy(cover.graph()).first.entropy;
  const std::string where = describe(p);
  chk.record("log e(P) <= nH <= 2 log e(P)", log_e <= nh + kTol && nh <= 2 * log_e + kTol, where);
  chk.record("nH <= log e(P) + n log e", nh <= log_e + n * kLog2E + kTol, where);

  const MupiSetup setup = prepare_mupi(p, inst.a, inst.b);
  for (const auto& order : hidden_orders(p, opts.extensions_per_poset, rng)) {
    HiddenOrderOracle o(order, p);
    const MupiResult r = run_mupi(setup, o);
    chk.record("correct: mupi", r.order == order, where);
    chk.record("mupi core <= 3nH(x)", r.comparisons <= 3.0 * n * r.initial_entropy + kTol, where);
    chk.record("mupi <= 6 log e(P)", r.comparisons <= 6.0 * log_e + kTol, where);
  }
}

}  // namespace

void for_each_width2_poset(int n, const std::function<void(const Width2Instance&)>& visit) {
  for (int p = (n + 1) / 2; p <= n; ++p) {
    const int q = n - p;
    Chain a(p);
    Chain b(q);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), p);
    std::vector<int> lo(p);
    std::vector<int> hi(p);
    enumerate_bounds(0, p, q, lo, hi, [&] { visit({width2_poset(a, b, lo, hi), a, b}); });
  }
}

Width2Instance random_width2_poset(int n, std::mt19937_64& rng) {
  const int p = std::uniform_int_distribution<int>(0, n)(rng);
  const int q = n - p;
  std::uniform_int_distribution<int> pos(0, q);
  std::vector<int> lo(p);
  std::vector<int> hi(p);
  for (int i = 0; i < p; ++i) {
    lo[i] = pos(rng);
    hi[i] = pos(rng);
  }
  std::sort(lo.begin(), lo.end());
  std::sort(hi.begin(), hi.end());
  for (int i = 0; i < p; ++i) hi[i] = std::max(hi[i], lo[i]);
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Chain a(perm.begin(), perm.begin() + p);
  Chain b(perm.begin() + p, perm.end());
  Poset poset = width2_poset(a, b, lo, hi);
  return {std::move(poset), std::move(a), std::move(b)};
}

std::uint64_t canonical_code(const Poset& p) {
  const int n = p.size();
  if (n > kMaxEnumeratedSize) throw TooLargeError("canonical_code: n too large");
  const std::vector<int> color = refine(p);
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Element u, Element v) { return color[u] < color[v]; });

  // Try every relabelling that keeps the colour classes in place.
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<Element> perm(n);
  std::vector<char> used(n, 0);
  std::function<void(int)> place = [&](int pos) {
    if (pos == n) {
      std::uint64_t code = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (p.less(perm[i], perm[j])) code |= std::uint64_t{1} << (i * n + j);
        }
      }
      best = std::min(best, code);
      return;
    }
    for (Element v : order) {
      if (used[v] || color[v] != color[order[pos]]) continue;
      used[v] = 1;
      perm[pos] = v;
      place(pos + 1);
      used[v] = 0;
    }
  };
  place(0);
  return best;
}

std::vector<Poset> nonisomorphic_posets(int n) {
  if (n > kMaxEnumeratedSize) throw TooLargeError("nonisomorphic_posets: n too large");
  if (n < 0) throw std::invalid_argument("nonisomorphic_posets: negative n");
  std::vector<Poset> current{Poset(0)};
  for (int m = 1; m <= n; ++m) {
    std::vector<Poset> next;
    std::unordered_set<std::uint64_t> seen;
    for (const Poset& q : current) {
      const int k = m - 1;
      // Every down-set of q becomes the predecessor set of a new maximal element.
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        bool closed = true;
        for (Element v = 0; v < k && closed; ++v) {
          if (!(mask >> v & 1U)) continue;
          const auto& preds = q.predecessors(v);
          for (auto u = preds.find_first(); u != Poset::Row::npos; u = preds.find_next(u)) {
            if (!(mask >> u & 1U)) {
              closed = false;
              break;
            }
          }
        }
        if (!closed) continue;
        auto pairs = q.relations();
        for (Element v = 0; v < k; ++v) {
          if (mask >> v & 1U) pairs.emplace_back(v, k);
        }
        Poset cand = transitive_closure(pairs, m);
        if (seen.insert(canonical_code(cand)).second) next.push_back(std::move(cand));
      }
    }
    current = std::move(next);
  }
  return current;
}

LinearOrder sample_linear_extension(const Poset& p, std::mt19937_64& rng) {
  if (p.size() <= 20) {
    LinearExtensionCounter counter(p);
    return counter.sample(rng);
  }
  return random_topological_order(p, rng);
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckSummary& c) { return c.violations == 0; });
}

VerifyReport verify_bounds(const VerifyOptions& opts) {
  if (opts.max_n > kMaxVerifySize) {
    throw std::invalid_argument("verify: max_n must be at most " + std::to_string(kMaxVerifySize));
  }
  std::mt19937_64 rng(opts.seed);
  Checker chk;
  for (int n = 2; n <= opts.max_n; ++n) {
    for_each_width2_poset(n, [&](const Width2Instance& inst) { check_width2(inst, opts, rng, chk); });

    std::vector<Poset> posets;
    if (n <= std::min(opts.exhaustive_general_n, kMaxEnumeratedSize)) {
      posets = nonisomorphic_posets(n);
    } else {
      std::uniform_real_distribution<double> density(0.05, 0.6);
      for (int k = 0; k < opts.random_posets_per_n; ++k) posets.push_back(random_poset(n, density(rng), rng()));
    }
    for (const Poset& p : posets) {
      check_sorters(p, hidden_orders(p, opts.extensions_per_poset, rng), log2_linear_extensions(p), chk);
    }
  }
  return {chk.take()};
}

}  // namespace posort
