#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "vglcs/heuristics.hpp"
#include "vglcs/instance.hpp"
#include "vglcs/stategraph.hpp"
#include "vglcs/succ.hpp"
#include "vglcs/verify.hpp"

namespace vglcs {

struct BeamResult {
  Solution best;
  std::vector<StateNode> complete_nodes;
};

namespace detail {

// expand every beam node, keeping one child list per node so callers can tell
// complete nodes (empty list) apart; order is the beam order regardless of jobs
inline std::vector<std::vector<StateNode>> expand_nodes(const std::vector<StateNode>& beam,
                                                        const SuccTable& succ, int jobs) {
  std::vector<std::vector<StateNode>> kids(beam.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) kids[k] = expand_state(beam[k], succ);
  };
  if (jobs <= 1 || beam.size() < 64) {
    work(0, beam.size());
    return kids;
  }
  std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(jobs), beam.size());
  std::size_t chunk = (beam.size() + nw - 1) / nw;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < nw; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(beam.size(), lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(work, lo, hi);
  }
  for (auto& t : pool) t.join();
  return kids;
}

// one node per (pointer vector, length); the smallest prefix survives
inline void collapse_duplicates(std::vector<StateNode>& nodes) {
  std::sort(nodes.begin(), nodes.end(), state_before);
  auto same = [](const StateNode& a, const StateNode& b) {
    return a.ptrs == b.ptrs && a.len == b.len;
  };
  nodes.erase(std::unique(nodes.begin(), nodes.end(), same), nodes.end());
}

// score descending; ties fall back to the incoming order, which collapse_duplicates
// left sorted by pointer vector then prefix
inline void rank_and_truncate(std::vector<StateNode>& nodes, const HeuristicEval& h,
                              int beta) {
  std::vector<double> score(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) score[k] = h.score(nodes[k]);
  std::vector<std::size_t> idx(nodes.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return a < b;
  });
  std::size_t keep = std::min(nodes.size(), static_cast<std::size_t>(beta));
  std::vector<StateNode> out;
  out.reserve(keep);
  for (std::size_t k = 0; k < keep; ++k) out.push_back(std::move(nodes[idx[k]]));
  nodes = std::move(out);
}

}  // namespace detail

// Beam search over the pointer-state graph starting from the given roots. Each
// root is a match node: its pointers sit on occurrences of one common letter and
// its prefix (possibly refined, possibly empty) ends at those occurrences. The
// first beam level consumes the root letter, then levels expand until every
// surviving line completes. Returns the longest completed text plus all complete
// nodes encountered; the winning text is verified under witness_sem to attach
// embeddings.
inline BeamResult rooted_beam_search(const std::vector<StateNode>& roots,
                                     const Instance& inst, const SuccTable& succ,
                                     int beta, const HeuristicEval& h,
                                     Semantics witness_sem = Semantics::leftmost,
                                     int jobs = 1, bool level_dominance = false) {
  if (beta < 1) throw std::invalid_argument("beam width must be positive");
  BeamResult res;
  res.best = empty_solution(inst);
  if (roots.empty()) return res;

  const int m = inst.num_seqs();
  std::vector<StateNode> beam;
  beam.reserve(roots.size());
  for (const auto& r : roots) {
    if (static_cast<int>(r.ptrs.size()) != m)
      throw std::invalid_argument("root arity does not match instance");
    char c = 0;
    for (int i = 0; i < m; ++i) {
      if (r.ptrs[i] < 1 || r.ptrs[i] > inst.len(i))
        throw std::invalid_argument("root pointer out of range");
      char ci = inst.at(i, r.ptrs[i]);
      if (i == 0)
        c = ci;
      else if (ci != c)
        throw std::invalid_argument("root match letters differ across sequences");
    }
    StateNode child;
    child.ptrs = r.ptrs;
    for (int& p : child.ptrs) ++p;
    child.len = r.len + 1;
    child.prefix = r.prefix + c;
    beam.push_back(std::move(child));
  }
  detail::collapse_duplicates(beam);

  std::string best_text;
  bool have_best = false;
  while (!beam.empty()) {
    auto kids = detail::expand_nodes(beam, succ, jobs);
    std::vector<StateNode> pool;
    for (std::size_t k = 0; k < beam.size(); ++k) {
      if (kids[k].empty()) {
        if (!have_best || beam[k].len > static_cast<int>(best_text.size())) {
          best_text = beam[k].prefix;
          have_best = true;
        }
        res.complete_nodes.push_back(std::move(beam[k]));
      } else {
        for (auto& ch : kids[k]) pool.push_back(std::move(ch));
      }
    }
    detail::collapse_duplicates(pool);
    if (level_dominance) pool = dominance_filter_level(std::move(pool));
    detail::rank_and_truncate(pool, h, beta);
    beam = std::move(pool);
  }

  auto rep = verify_solution(inst, best_text, witness_sem);
  if (!rep.feasible)
    throw std::logic_error("beam search produced an unverifiable text: " + best_text);
  res.best = make_solution(inst, best_text, rep);
  return res;
}

// Grow the best suffix-side extension of root w by running a beam on the
// reversed instance from the mirrored position, then keep the longest reversed
// candidate that still lands exactly on w's pointers. The returned node carries
// the refined prefix with its final letter stripped, so feeding it back into
// rooted_beam_search re-consumes the root letter.
inline StateNode backward_refine(const StateNode& w, const Instance& inst,
                                 const Instance& rev, const SuccTable& rev_succ,
                                 const HeuristicEval& h_rev, int beta_bwd,
                                 Semantics sem) {
  const int m = inst.num_seqs();
  StateNode root;
  root.ptrs.resize(m);
  for (int i = 0; i < m; ++i) root.ptrs[i] = inst.len(i) - w.ptrs[i] + 1;
  root.len = 0;

  BeamResult back = rooted_beam_search({root}, rev, rev_succ, beta_bwd, h_rev);
  std::string cand(back.best.text.rbegin(), back.best.text.rend());

  while (cand.size() > 1 && !anchored_feasible(inst, cand, w.ptrs, sem))
    cand.erase(cand.begin());

  StateNode out;
  out.ptrs = w.ptrs;
  out.len = static_cast<int>(cand.size()) - 1;
  out.prefix = cand.substr(0, cand.size() - 1);
  return out;
}

// convenience form that builds the reversed tables on the fly
inline StateNode backward_refine(const StateNode& w, const Instance& inst,
                                 int beta_bwd, Heuristic h_prime,
                                 Semantics sem = Semantics::leftmost,
                                 int k_divisor = 0) {
  Instance rev = reverse_instance(inst);
  SuccTable rs = SuccTable::build(rev);
  HeuristicEval he = HeuristicEval::make(rev, h_prime, k_divisor);
  return backward_refine(w, inst, rev, rs, he, beta_bwd, sem);
}

}  // namespace vglcs
