#pragma once

#include <deque>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "vglcs/instance.hpp"
#include "vglcs/stategraph.hpp"
#include "vglcs/succ.hpp"

namespace vglcs {

namespace detail {

inline std::string dot_label(const StateNode& v) {
  std::string out = "((";
  for (std::size_t i = 0; i < v.ptrs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v.ptrs[i]);
  }
  out += ")," + std::to_string(v.len) + ")";
  return out;
}

}  // namespace detail

// breadth first dump of the rooted reachable subgraph, capped at max_nodes
// discovered states; terminal states fill gray, roots fill light blue
inline void write_dot(std::ostream& os, const Instance& inst,
                      int max_nodes = 200) {
  const SuccTable succ = SuccTable::build(inst);
  const PlainNextTable plain = PlainNextTable::build(inst);
  const auto roots = initial_roots(plain);

  using Key = std::pair<std::vector<int>, int>;
  std::map<Key, int> id;
  std::deque<StateNode> queue;
  std::vector<StateNode> nodes;

  auto discover = [&](const StateNode& v) {
    const Key key{v.ptrs, v.len};
    auto it = id.find(key);
    if (it != id.end()) return it->second;
    if (static_cast<int>(nodes.size()) >= max_nodes) return -1;
    const int at = static_cast<int>(nodes.size());
    id.emplace(key, at);
    nodes.push_back(v);
    queue.push_back(v);
    return at;
  };

  std::vector<std::pair<std::pair<int, int>, char>> edges;  // (from, to), letter
  std::vector<bool> terminal;
  for (const auto& r : roots) discover(r);
  std::size_t processed = 0;
  while (processed < queue.size()) {
    const StateNode v = queue[processed++];
    const int from = id.at({v.ptrs, v.len});
    const auto children = expand_state(v, succ);
    if (static_cast<int>(terminal.size()) <= from)
      terminal.resize(from + 1, false);
    terminal[from] = children.empty();
    for (const auto& c : children) {
      const int to = discover(c);
      if (to >= 0) edges.push_back({{from, to}, c.prefix.back()});
    }
  }
  terminal.resize(nodes.size(), false);

  std::vector<bool> is_root(nodes.size(), false);
  for (const auto& r : roots) {
    auto it = id.find({r.ptrs, r.len});
    if (it != id.end()) is_root[it->second] = true;
  }

  os << "digraph vglcs {\n";
  os << "  node [shape=ellipse];\n";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    os << "  n" << k << " [label=\"" << detail::dot_label(nodes[k]) << "\"";
    if (terminal[k])
      os << ", style=filled, fillcolor=gray";
    else if (is_root[k])
      os << ", style=filled, fillcolor=lightblue";
    os << "];\n";
  }
  for (const auto& [ft, letter] : edges)
    os << "  n" << ft.first << " -> n" << ft.second << " [label=\"" << letter
       << "\"];\n";
  os << "}\n";
}

}  // namespace vglcs
