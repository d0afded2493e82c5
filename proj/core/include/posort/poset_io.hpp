#pragma once

#include <iosfwd>
#include <string>

#include "posort/poset.hpp"

namespace posort {

/// Text format: first non-comment line "n <count>", then one "<u> <v>" line
/// per relation u < v (0-based). Lines starting with '#' and blank lines are
/// ignored. The relation is transitively closed on load.
Poset read_poset(std::istream& in);
Poset read_poset_file(const std::string& path);

/// Writes every pair of the closed relation in lexicographic order.
void write_poset(std::ostream& out, const Poset& p);
void write_poset_file(const std::string& path, const Poset& p);

}  // namespace posort
