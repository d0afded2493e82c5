#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "posort/oracle.hpp"
#include "posort/types.hpp"

namespace posort {

struct MergeReport {
  Chain merged;
  std::int64_t comparisons = 0;
};

/// Repeatedly moves the smaller head to the output.
MergeReport linear_merge(const Chain& x, const Chain& y, ComparisonSource& src);

/// Binary search for v's slot in c.
MergeReport binary_insert(const Chain& c, Element v, ComparisonSource& src);

/// One merge of a Huffman schedule. Inputs are numbered 0..k-1 and every
/// step's result takes the next free number.
struct HuffmanStep {
  int first = 0;
  int second = 0;

  friend bool operator==(const HuffmanStep&, const HuffmanStep&) = default;
};

/// Merge order that always combines the two smallest chains, ties broken by
/// the smaller number.
std::vector<HuffmanStep> huffman_schedule(std::span<const int> sizes);

MergeReport huffman_merge(const std::vector<Chain>& chains, ComparisonSource& src);
MergeReport huffman_merge(const std::vector<Chain>& chains, std::span<const HuffmanStep> schedule,
                          ComparisonSource& src);

/// Hwang-Lin merge: the longer chain is cut into blocks of
/// 2^floor(log2(|X|/|Y|)) elements; each element of the shorter chain is
/// placed by a linear scan over blocks followed by a bisection inside one.
MergeReport hwang_lin_merge(const Chain& x, const Chain& y, ComparisonSource& src);

}  // namespace posort
