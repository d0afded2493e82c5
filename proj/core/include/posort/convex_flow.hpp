#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "posort/types.hpp"

namespace posort {

struct FlowEdge {
  int b = 0;
  std::int64_t amount = 0;
};

/// Maximum b-matching in a convex bipartite graph where every A vertex has
/// capacity alpha and every B vertex capacity beta.
struct BMatching {
  std::int64_t value = 0;
  std::vector<std::int64_t> b_load;
  std::vector<FlowEdge> edges;        // grouped by A vertex
  std::vector<int> edge_start;        // edges of A vertex u: [edge_start[u], edge_start[u + 1])

  [[nodiscard]] std::span<const FlowEdge> support(int u) const {
    return {edges.data() + edge_start[u], edges.data() + edge_start[u + 1]};
  }
};

/// Left-to-right greedy over A; at each position the pending B intervals
/// are served earliest end first.
BMatching convex_b_matching(int num_a, std::span<const Interval> b_nbr, std::int64_t alpha, std::int64_t beta);

/// A vertices that cannot reach the sink in the residual network of `m`.
/// With a saturated source side this is the largest maximizer of |S|/|N(S)|.
std::vector<int> unreachable_from_sink(int num_a, std::span<const Interval> b_nbr, const BMatching& m,
                                       std::int64_t beta);

}  // namespace posort
