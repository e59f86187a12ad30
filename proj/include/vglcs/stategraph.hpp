#pragma once

// Search states and their expansion.
//
// A state holds one pointer per sequence (next unread position), the number of
// characters matched so far and the matched prefix itself. Expanding a state
// tries every alphabet letter through the gap-aware successor table; a child
// exists only if the letter is reachable in every sequence. Siblings are then
// thinned by componentwise pointer dominance: a child whose pointers are all <=
// another's can reach everything the other can.

#include <algorithm>
#include <string>
#include <vector>

#include "vglcs/succ.hpp"

namespace vglcs {

struct StateNode {
  std::vector<int> ptrs;  // 1-based; len(i) + 1 means sequence i is exhausted
  int len = 0;
  std::string prefix;

  friend bool operator==(const StateNode& a, const StateNode& b) {
    return a.ptrs == b.ptrs && a.len == b.len && a.prefix == b.prefix;
  }
};

inline bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// canonical order: pointer vector, then length, then prefix
inline bool state_before(const StateNode& a, const StateNode& b) {
  if (a.ptrs != b.ptrs) return a.ptrs < b.ptrs;
  if (a.len != b.len) return a.len < b.len;
  return a.prefix < b.prefix;
}

// assumes uniform length (siblings of one expansion, or bare roots); nodes with
// equal pointers collapse to the alphabetically-first prefix
inline std::vector<StateNode> dominance_filter(std::vector<StateNode> nodes) {
  std::sort(nodes.begin(), nodes.end(), state_before);
  std::vector<StateNode> kept;
  for (auto& cand : nodes) {
    bool dropped = false;
    for (const auto& k : kept)
      if (dominates(k.ptrs, cand.ptrs)) {
        dropped = true;
        break;
      }
    if (!dropped) kept.push_back(std::move(cand));
  }
  return kept;
}

// cross-parent variant for whole beam levels; lengths may differ there, so a
// node only dominates when it is at least as long as well
inline std::vector<StateNode> dominance_filter_level(std::vector<StateNode> nodes) {
  std::sort(nodes.begin(), nodes.end(), state_before);
  std::vector<StateNode> kept;
  for (auto& cand : nodes) {
    bool dropped = false;
    for (const auto& k : kept)
      if (!(k == cand) && k.len >= cand.len && dominates(k.ptrs, cand.ptrs)) {
        dropped = true;
        break;
      }
    if (!dropped) kept.push_back(std::move(cand));
  }
  return kept;
}

inline std::vector<StateNode> expand_state(const StateNode& v, const SuccTable& succ) {
  const int m = succ.num_seqs();
  const int sigma = succ.sigma();
  std::vector<StateNode> children;
  std::vector<int> next(m);
  for (int a = 0; a < sigma; ++a) {
    bool all = true;
    for (int i = 0; i < m && all; ++i) {
      int q = succ.at(i, v.ptrs[i], a);
      if (q < 0)
        all = false;
      else
        next[i] = q + 1;
    }
    if (!all) continue;
    StateNode child;
    child.ptrs = next;
    child.len = v.len + 1;
    child.prefix = v.prefix;
    child.prefix.push_back(succ.letter(a));
    children.push_back(std::move(child));
  }
  return dominance_filter(std::move(children));
}

// One root candidate per letter that occurs in every sequence: the leading
// occurrence positions themselves (gap bounds never constrain a leading match).
inline std::vector<StateNode> initial_roots(const PlainNextTable& plain) {
  std::vector<StateNode> roots;
  std::vector<int> pos(plain.num_seqs());
  for (int a = 0; a < plain.sigma(); ++a) {
    bool all = true;
    for (int i = 0; i < plain.num_seqs() && all; ++i) {
      pos[i] = plain.at(i, 1, a);
      if (pos[i] < 0) all = false;
    }
    if (all) roots.push_back({pos, 0, ""});
  }
  return dominance_filter(std::move(roots));
}

// Restart candidates beyond a complete node: next occurrence of each letter at
// or after the node's pointers, gap bounds deliberately ignored. No dominance
// filtering here; the pool ranks them instead.
inline std::vector<StateNode> roots_from_complete(const StateNode& v,
                                                  const PlainNextTable& plain) {
  std::vector<StateNode> roots;
  std::vector<int> pos(plain.num_seqs());
  for (int a = 0; a < plain.sigma(); ++a) {
    bool all = true;
    for (int i = 0; i < plain.num_seqs() && all; ++i) {
      pos[i] = plain.at(i, v.ptrs[i], a);
      if (pos[i] < 0) all = false;
    }
    if (all) roots.push_back({pos, 0, ""});
  }
  return roots;
}

}  // namespace vglcs
