#include "posort/poset_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace posort {
namespace {

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Poset read_poset(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<Element, Element>> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      if (!(fields >> tag >> n) || tag != "n" || n < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": expected \"n <count>\"");
      }
    } else {
      Element u = 0;
      Element v = 0;
      if (!(fields >> u >> v)) {
        throw ParseError("line " + std::to_string(line_no) + ": expected \"<u> <v>\"");
      }
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw ParseError("line " + std::to_string(line_no) + ": element out of range");
      }
      pairs.emplace_back(u, v);
    }
    std::string rest;
    if (fields >> rest) throw ParseError("line " + std::to_string(line_no) + ": trailing input");
  }
  if (n < 0) throw ParseError("missing \"n <count>\" header");
  return transitive_closure(pairs, n);
}

Poset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_poset(in);
}

void write_poset(std::ostream& out, const Poset& p) {
  out << "n " << p.size() << '\n';
  for (const auto& [u, v] : p.relations()) out << u << ' ' << v << '\n';
}

void write_poset_file(const std::string& path, const Poset& p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_poset(out, p);
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace posort
