#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <gmpxx.h>

namespace boost {

// Boost 1.74 mixed-integer equality recurses under C++20 reversed
// candidates when the integer is not exactly the component type.
inline bool operator==(const rational<std::int64_t>& a, int b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) { return a.denominator() == 1 && a.numerator() == b; }

}  // namespace boost

namespace posort {

/// Ground-set element id, 0-based.
using Element = int;

/// A sequence of element ids, listed in increasing order of whatever order
/// the context fixes (the partial order for a chain of P, the hidden order
/// for a merge result).
using Chain = std::vector<Element>;

/// A total order on the ground set, smallest element first.
using LinearOrder = std::vector<Element>;

/// Vertex weights of stable-set points. Every weight the algorithms produce
/// has a denominator dividing 2n, so 64-bit components never overflow at the
/// sizes this library accepts.
using Rational = boost::rational<std::int64_t>;

/// Unbounded rationals for the interval adversary, whose endpoints halve on
/// every answer.
using BigRational = mpq_class;

/// Exact linear-extension counts.
using BigInt = mpz_class;

/// Closed interval [first, last] of positions in a chain; empty iff
/// last == first - 1.
struct Interval {
  int first = 0;
  int last = -1;

  [[nodiscard]] bool empty() const noexcept { return last < first; }
  [[nodiscard]] int size() const noexcept { return empty() ? 0 : last - first + 1; }
  [[nodiscard]] bool contains(int pos) const noexcept { return first <= pos && pos <= last; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

class CycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAnExtensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCoverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The tight-edge graph violates a structural precondition (loose
/// components, inlays, or an internal consistency check of the merging
/// engine).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace posort
