#include "isolat/dot.hpp"

#include <map>
#include <sstream>

namespace isolat {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Poset& p, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << quote(graph_name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < p.size(); ++i) out << "  n" << i << " [label=" << quote(p.label(i)) << "];\n";
  std::map<std::size_t, std::vector<std::size_t>> levels;
  auto ranks = p.ranks();
  for (std::size_t i = 0; i < p.size(); ++i) levels[ranks[i]].push_back(i);
  for (const auto& [rank, nodes] : levels) {
    if (nodes.size() < 2) continue;
    out << "  { rank=same;";
    for (auto n : nodes) out << " n" << n << ";";
    out << " }\n";
  }
  for (const auto& [a, b] : p.hasse()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace isolat
