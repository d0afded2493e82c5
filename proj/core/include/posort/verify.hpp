#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "posort/poset.hpp"
#include "posort/types.hpp"

namespace posort {

/// A width-2 poset with the two chains that generated it.
struct Width2Instance {
  Poset poset;
  Chain a;
  Chain b;
};

/// Every width-2 poset on n elements given as chains a = 0..p-1 and
/// b = p..n-1 with p >= n - p and monotone comparability bounds. Posets with
/// several such covers are visited once per cover.
void for_each_width2_poset(int n, const std::function<void(const Width2Instance&)>& visit);

/// Random monotone bounds, random chain sizes and random labels.
Width2Instance random_width2_poset(int n, std::mt19937_64& rng);

/// Largest n accepted by nonisomorphic_posets.
inline constexpr int kMaxEnumeratedSize = 8;

/// One representative per isomorphism class of posets on n elements.
/// Throws TooLargeError above kMaxEnumeratedSize.
std::vector<Poset> nonisomorphic_posets(int n);

/// Isomorphism-invariant code of a poset with at most 8 elements.
std::uint64_t canonical_code(const Poset& p);

/// Uniform linear extension when n <= 20, otherwise a random topological
/// order (not uniform).
LinearOrder sample_linear_extension(const Poset& p, std::mt19937_64& rng);

struct VerifyOptions {
  int max_n = 5;
  /// Posets with more extensions are checked on this many sampled ones.
  int extensions_per_poset = 64;
  /// Above this size general posets are sampled instead of enumerated.
  int exhaustive_general_n = 6;
  int random_posets_per_n = 100;
  std::uint64_t seed = 1;
};

struct CheckSummary {
  std::string name;
  std::int64_t instances = 0;
  std::int64_t violations = 0;
  std::string first_violation;
};

struct VerifyReport {
  std::vector<CheckSummary> checks;

  [[nodiscard]] bool ok() const;
};

/// Largest max_n accepted by verify_bounds.
inline constexpr int kMaxVerifySize = 10;

/// Sweeps the comparison and entropy inequalities over small posets.
/// Throws std::invalid_argument when max_n exceeds kMaxVerifySize.
VerifyReport verify_bounds(const VerifyOptions& opts);

}  // namespace posort
