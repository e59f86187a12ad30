#pragma once

// Ground-truth engines: tiny-instance brute force under both feasibility
// readings, and the two-sequence dynamic programs over the match lattice.

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vglcs/instance.hpp"
#include "vglcs/stategraph.hpp"
#include "vglcs/succ.hpp"
#include "vglcs/verify.hpp"

namespace vglcs {

namespace detail {

inline void check_brute_cap(const Instance& inst, int cap) {
  if (inst.num_seqs() * inst.max_len() > cap)
    throw std::invalid_argument("instance too large for brute force cap");
}

inline std::vector<std::vector<std::vector<int>>> letter_occurrences(
    const Instance& inst) {
  std::vector<std::vector<std::vector<int>>> occ(
      inst.num_seqs(), std::vector<std::vector<int>>(inst.sigma()));
  for (int i = 0; i < inst.num_seqs(); ++i)
    for (int q = 1; q <= inst.len(i); ++q)
      occ[i][inst.letter(inst.at(i, q))].push_back(q);
  return occ;
}

// DFS over tuples of last-used positions; the all-zero tuple is the start and
// is exempt from gap checks
class ExistentialBrute {
 public:
  explicit ExistentialBrute(const Instance& inst)
      : inst_(inst), occ_(letter_occurrences(inst)) {}

  Solution solve() {
    const int m = inst_.num_seqs();
    std::vector<int> start(m, 0);
    extend(start);

    Solution sol = empty_solution(inst_);
    std::vector<int> p = start;
    for (;;) {
      const Step& st = memo_.at(p);
      if (st.letter < 0) break;
      sol.text.push_back(inst_.alphabet[st.letter]);
      for (int i = 0; i < m; ++i) sol.embeddings[i].push_back(st.next[i]);
      p = st.next;
    }
    return sol;
  }

 private:
  struct Step {
    int ext = 0;
    int letter = -1;
    std::vector<int> next;
  };

  int extend(const std::vector<int>& p) {
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second.ext;
    Step best;
    std::vector<int> q(inst_.num_seqs());
    for (int a = 0; a < inst_.sigma(); ++a) product(0, a, p, q, best);
    memo_[p] = best;
    return best.ext;
  }

  void product(int i, int a, const std::vector<int>& p, std::vector<int>& q,
               Step& best) {
    if (i == inst_.num_seqs()) {
      int v = 1 + extend(q);
      if (v > best.ext) best = Step{v, a, q};
      return;
    }
    const bool lead = p[0] == 0;
    for (int pos : occ_[i][a]) {
      if (pos <= p[i]) continue;
      if (!lead && pos - p[i] > inst_.gap(i, pos) + 1) continue;
      q[i] = pos;
      product(i + 1, a, p, q, best);
    }
  }

  const Instance& inst_;
  std::vector<std::vector<std::vector<int>>> occ_;
  std::map<std::vector<int>, Step> memo_;
};

}  // namespace detail

inline Solution brute_force_existential(const Instance& inst, int cap = 36) {
  detail::check_brute_cap(inst, cap);
  return detail::ExistentialBrute(inst).solve();
}

// Exhaustive walk of the rooted chain graph: every matching tuple may lead, the
// rest follows expansion (with its sibling pruning) to the end.
inline Solution brute_force_leftmost(const Instance& inst, int cap = 36) {
  detail::check_brute_cap(inst, cap);
  const int m = inst.num_seqs();
  auto succ = SuccTable::build(inst);
  auto occ = detail::letter_occurrences(inst);

  struct Edge {
    int ext = 0;
    int letter = -1;  // alphabet index of the best outgoing edge
  };
  std::map<std::vector<int>, Edge> memo;
  std::function<int(const std::vector<int>&)> extend =
      [&](const std::vector<int>& ptrs) -> int {
    auto it = memo.find(ptrs);
    if (it != memo.end()) return it->second.ext;
    Edge best;
    for (const auto& c : expand_state(StateNode{ptrs, 0, ""}, succ)) {
      int e = 1 + extend(c.ptrs);
      if (e > best.ext) best = Edge{e, inst.letter(c.prefix[0])};
    }
    memo[ptrs] = best;
    return best.ext;
  };

  int best_len = 0, best_letter = -1;
  std::vector<int> best_start;
  std::vector<int> tuple(m);
  std::function<void(int, int)> starts = [&](int i, int a) {
    if (i == m) {
      std::vector<int> after = tuple;
      for (int& p : after) ++p;
      int v = 1 + extend(after);
      if (v > best_len) {
        best_len = v;
        best_letter = a;
        best_start = tuple;
      }
      return;
    }
    for (int pos : occ[i][a]) {
      tuple[i] = pos;
      starts(i + 1, a);
    }
  };
  for (int a = 0; a < inst.sigma(); ++a) starts(0, a);

  Solution sol = empty_solution(inst);
  if (best_len == 0) return sol;
  sol.text.push_back(inst.alphabet[best_letter]);
  for (int i = 0; i < m; ++i) sol.embeddings[i].push_back(best_start[i]);
  std::vector<int> u = best_start;
  for (int& p : u) ++p;
  for (;;) {
    const Edge& e = memo.at(u);
    if (e.letter < 0) break;
    sol.text.push_back(inst.alphabet[e.letter]);
    for (int i = 0; i < m; ++i) {
      int q = succ.at(i, u[i], e.letter);
      sol.embeddings[i].push_back(q);
      u[i] = q + 1;
    }
  }
  return sol;
}

struct MatchLattice {
  std::vector<std::pair<int, int>> matches;  // ascending (i, j)
  std::vector<int> value;
  std::vector<int> pred;  // index into matches, -1 at chain starts
};

namespace detail {

inline std::vector<std::pair<int, int>> match_pairs(const Instance& inst) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= inst.len(0); ++i)
    for (int j = 1; j <= inst.len(1); ++j)
      if (inst.at(0, i) == inst.at(1, j)) out.emplace_back(i, j);
  return out;
}

inline void require_pair(const Instance& inst) {
  if (inst.num_seqs() != 2)
    throw std::invalid_argument("dp solvers need exactly two sequences");
}

inline Solution lattice_solution(const Instance& inst, const MatchLattice& lat) {
  Solution sol = empty_solution(inst);
  int best = -1;
  for (std::size_t k = 0; k < lat.matches.size(); ++k)
    if (best < 0 || lat.value[k] > lat.value[best]) best = static_cast<int>(k);
  if (best < 0) return sol;

  std::vector<int> chain;
  for (int k = best; k >= 0; k = lat.pred[k]) chain.push_back(k);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    auto [i, j] = lat.matches[*it];
    sol.text.push_back(inst.at(0, i));
    sol.embeddings[0].push_back(i);
    sol.embeddings[1].push_back(j);
  }
  return sol;
}

}  // namespace detail

inline MatchLattice dp_lattice(const Instance& inst) {
  detail::require_pair(inst);
  MatchLattice lat;
  lat.matches = detail::match_pairs(inst);
  lat.value.assign(lat.matches.size(), 1);
  lat.pred.assign(lat.matches.size(), -1);
  for (std::size_t k = 0; k < lat.matches.size(); ++k) {
    auto [i, j] = lat.matches[k];
    int bestv = 0, bestp = -1;
    for (std::size_t t = 0; t < k; ++t) {
      auto [pi, pj] = lat.matches[t];
      if (pi >= i || pj >= j) continue;
      if (i - pi > inst.gap(0, i) + 1 || j - pj > inst.gap(1, j) + 1) continue;
      if (lat.value[t] > bestv) {
        bestv = lat.value[t];
        bestp = static_cast<int>(t);
      }
    }
    lat.value[k] = 1 + bestv;
    lat.pred[k] = bestp;
  }
  return lat;
}

inline Solution dp_basic(const Instance& inst) {
  return detail::lattice_solution(inst, dp_lattice(inst));
}

// Row-sweep rewrite of the same recurrence. Column bests over the active row
// window are kept incrementally (epoch-stamped, rebuilt when the window's lower
// edge rises) and each row's queries ride a sliding-window maximum deque.
inline MatchLattice dp_ismq_lattice(const Instance& inst) {
  detail::require_pair(inst);
  const int n2 = inst.len(1);
  MatchLattice lat;
  lat.matches = detail::match_pairs(inst);
  lat.value.assign(lat.matches.size(), 1);
  lat.pred.assign(lat.matches.size(), -1);

  std::vector<std::vector<std::pair<int, int>>> row(inst.len(0) + 1);  // (j, idx)
  for (std::size_t k = 0; k < lat.matches.size(); ++k)
    row[lat.matches[k].first].emplace_back(lat.matches[k].second,
                                           static_cast<int>(k));

  std::vector<int> colval(n2 + 1, 0), colsrc(n2 + 1, -1), colstamp(n2 + 1, -1);
  int epoch = 0;
  int lo = 1, hi = 0;  // rows currently folded into the column bests

  auto add_row = [&](int r) {
    for (auto [j, idx] : row[r]) {
      if (colstamp[j] != epoch) {
        colstamp[j] = epoch;
        colval[j] = lat.value[idx];
        colsrc[j] = idx;
      } else if (lat.value[idx] > colval[j]) {
        colval[j] = lat.value[idx];
        colsrc[j] = idx;
      }
    }
  };
  auto live = [&](int j) { return colstamp[j] == epoch; };

  for (int i = 1; i <= inst.len(0); ++i) {
    if (row[i].empty()) continue;
    int tlo = std::max(1, i - inst.gap(0, i) - 1), thi = i - 1;
    if (thi < tlo) {
      ++epoch;
      lo = 1;
      hi = 0;
    } else if (hi < lo || tlo > lo) {
      ++epoch;
      for (int r = tlo; r <= thi; ++r) add_row(r);
      lo = tlo;
      hi = thi;
    } else {
      for (int r = tlo; r < lo; ++r) add_row(r);
      for (int r = hi + 1; r <= thi; ++r) add_row(r);
      lo = tlo;
      hi = thi;
    }

    std::deque<int> dq;  // column indices, values non-increasing front to back
    int rp = 0;          // columns folded into the deque so far
    int prev_left = 1;
    for (auto [j, idx] : row[i]) {
      int left = std::max(1, j - inst.gap(1, j) - 1);
      if (left < prev_left) {
        dq.clear();
        rp = left - 1;
      }
      prev_left = left;
      for (int c = rp + 1; c <= j - 1; ++c) {
        if (!live(c)) continue;
        while (!dq.empty() && colval[dq.back()] < colval[c]) dq.pop_back();
        dq.push_back(c);
      }
      rp = j - 1;
      while (!dq.empty() && dq.front() < left) dq.pop_front();

      if (!dq.empty()) {
        lat.value[idx] = 1 + colval[dq.front()];
        lat.pred[idx] = colsrc[dq.front()];
      }
#ifdef VGLCS_ISMQ_SHADOW
      {
        int naive = 0;
        for (std::size_t t = 0; t < lat.matches.size(); ++t) {
          auto [pi, pj] = lat.matches[t];
          if (pi >= i || pj >= j) continue;
          if (i - pi > inst.gap(0, i) + 1 || j - pj > inst.gap(1, j) + 1) continue;
          naive = std::max(naive, lat.value[t]);
        }
        assert(lat.value[idx] == 1 + naive);
      }
#endif
    }
  }
  return lat;
}

inline Solution dp_ismq(const Instance& inst) {
  return detail::lattice_solution(inst, dp_ismq_lattice(inst));
}

}  // namespace vglcs
