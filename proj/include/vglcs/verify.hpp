#pragma once

// Feasibility checking for a candidate text against an instance.
//
// leftmost: per sequence, pick any occurrence of text[1] as the leading match,
// then follow the deterministic earliest-feasible successor chain; feasible if
// some leading choice consumes the whole text. The leading match is exempt
// from gap bounds, every later match q must satisfy q - prev <= G(q) + 1.
//
// existential: feasible if any embedding exists; computed per sequence with a
// reachable-set sweep over text positions, witness recovered through
// smallest-position back-pointers.

#include <string>
#include <string_view>
#include <vector>

#include "vglcs/instance.hpp"
#include "vglcs/succ.hpp"

namespace vglcs {

enum class Semantics { leftmost, existential };

inline const char* to_string(Semantics s) {
  return s == Semantics::leftmost ? "leftmost" : "existential";
}

struct Solution {
  std::string text;
  // embeddings[i]: one 1-based position per text character, strictly increasing
  std::vector<std::vector<int>> embeddings;
  int length() const { return static_cast<int>(text.size()); }
};

struct SequenceCheck {
  bool ok = false;
  std::vector<int> embedding;  // filled when ok
  int stuck_at = 0;            // first text index that could not be placed, when !ok
};

struct VerifyReport {
  bool feasible = false;
  std::vector<SequenceCheck> per_sequence;
};

namespace detail {

inline std::vector<std::vector<int>> occurrence_lists(const Instance& inst, int i,
                                                      std::string_view text) {
  // positions of text[x] in sequence i, per text index; foreign characters get
  // an empty list and the chain dies there on its own
  std::vector<std::vector<int>> occ(text.size());
  for (std::size_t x = 0; x < text.size(); ++x)
    for (int q = 1; q <= inst.len(i); ++q)
      if (inst.at(i, q) == text[x]) occ[x].push_back(q);
  return occ;
}

// longest prefix of text consumable in sequence i by a leftmost chain, over all
// leading occurrences; when full and require_end >= 0 the chain must land there
inline SequenceCheck leftmost_check(const Instance& inst, int i, std::string_view text,
                                    const std::vector<int>& succ_row, int require_end = -1) {
  SequenceCheck out;
  if (text.empty()) {
    out.ok = true;
    return out;
  }
  const int sigma = inst.sigma();
  int best_progress = 0;
  std::vector<int> chain;
  for (int p = 1; p <= inst.len(i); ++p) {
    if (inst.at(i, p) != text[0]) continue;
    chain.assign(1, p);
    int ptr = p + 1;
    for (std::size_t x = 1; x < text.size(); ++x) {
      int a = inst.letter(text[x]);
      int q = (a < 0 || ptr > inst.len(i) + 1) ? -1 : succ_row[ptr * sigma + a];
      if (q < 0) break;
      chain.push_back(q);
      ptr = q + 1;
    }
    best_progress = std::max(best_progress, static_cast<int>(chain.size()));
    if (chain.size() == text.size() && (require_end < 0 || chain.back() == require_end)) {
      out.ok = true;
      out.embedding = chain;
      return out;
    }
  }
  out.stuck_at = best_progress + 1;
  if (require_end >= 0 && out.stuck_at > static_cast<int>(text.size()))
    out.stuck_at = static_cast<int>(text.size());
  return out;
}

inline SequenceCheck existential_check(const Instance& inst, int i, std::string_view text,
                                       int require_end = -1) {
  SequenceCheck out;
  if (text.empty()) {
    out.ok = true;
    return out;
  }
  auto occ = occurrence_lists(inst, i, text);
  struct Entry {
    int pos;
    int back;  // index into previous level
  };
  std::vector<std::vector<Entry>> levels(text.size());
  for (int q : occ[0]) levels[0].push_back({q, -1});
  std::size_t reached = levels[0].empty() ? 0 : 1;
  for (std::size_t x = 1; x < text.size() && !levels[x - 1].empty(); ++x) {
    const auto& prev = levels[x - 1];
    for (int q : occ[x]) {
      int lo = q - inst.gap(i, q) - 1;
      // prev is ascending in pos; smallest reachable predecessor keeps the
      // witness deterministic
      int l = 0, r = static_cast<int>(prev.size());
      while (l < r) {
        int mid = (l + r) / 2;
        if (prev[mid].pos < lo)
          l = mid + 1;
        else
          r = mid;
      }
      if (l < static_cast<int>(prev.size()) && prev[l].pos < q)
        levels[x].push_back({q, l});
    }
    if (!levels[x].empty()) reached = x + 1;
  }
  const auto& last = levels[text.size() - 1];
  int pick = -1;
  if (!last.empty()) {
    if (require_end < 0)
      pick = 0;
    else
      for (std::size_t k = 0; k < last.size(); ++k)
        if (last[k].pos == require_end) {
          pick = static_cast<int>(k);
          break;
        }
  }
  if (pick < 0) {
    out.stuck_at = static_cast<int>(reached) + 1;
    if (out.stuck_at > static_cast<int>(text.size()))
      out.stuck_at = static_cast<int>(text.size());
    return out;
  }
  out.ok = true;
  out.embedding.resize(text.size());
  int idx = pick;
  for (int x = static_cast<int>(text.size()) - 1; x >= 0; --x) {
    out.embedding[x] = levels[x][idx].pos;
    idx = levels[x][idx].back;
  }
  return out;
}

}  // namespace detail

inline VerifyReport verify_solution(const Instance& inst, std::string_view text,
                                    Semantics sem) {
  VerifyReport rep;
  rep.per_sequence.resize(inst.num_seqs());
  rep.feasible = true;
  for (int i = 0; i < inst.num_seqs(); ++i) {
    if (sem == Semantics::leftmost) {
      rep.per_sequence[i] = detail::leftmost_check(
          inst, i, text, detail::succ_rows(inst.seqs[i], inst.gaps[i], inst));
    } else {
      rep.per_sequence[i] = detail::existential_check(inst, i, text);
    }
    rep.feasible = rep.feasible && rep.per_sequence[i].ok;
  }
  return rep;
}

// Does text embed into every sequence with its last character landing exactly at
// end_pos[i]? Used when splicing a refined prefix onto a fixed root position.
inline bool anchored_feasible(const Instance& inst, std::string_view text,
                              const std::vector<int>& end_pos, Semantics sem) {
  for (int i = 0; i < inst.num_seqs(); ++i) {
    SequenceCheck chk;
    if (sem == Semantics::leftmost)
      chk = detail::leftmost_check(inst, i, text,
                                   detail::succ_rows(inst.seqs[i], inst.gaps[i], inst),
                                   end_pos[i]);
    else
      chk = detail::existential_check(inst, i, text, end_pos[i]);
    if (!chk.ok) return false;
  }
  return true;
}

inline Solution make_solution(const Instance& inst, std::string text,
                              const VerifyReport& rep) {
  Solution s;
  s.text = std::move(text);
  s.embeddings.resize(inst.num_seqs());
  for (int i = 0; i < inst.num_seqs(); ++i) s.embeddings[i] = rep.per_sequence[i].embedding;
  return s;
}

inline Solution empty_solution(const Instance& inst) {
  Solution s;
  s.embeddings.resize(inst.num_seqs());
  return s;
}

}  // namespace vglcs
