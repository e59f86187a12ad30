#pragma once

#include <chrono>
#include <cstddef>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vglcs/beam.hpp"
#include "vglcs/config.hpp"
#include "vglcs/stategraph.hpp"

namespace vglcs {

// Max-priority pool of restart roots. A position vector enters at most once over
// the whole run, no matter how often the regeneration step rediscovers it.
class RootPool {
 public:
  bool push(StateNode r, double score) {
    if (!seen_.insert(r.ptrs).second) return false;
    heap_.push(Entry{score, std::move(r)});
    return true;
  }
  StateNode pop() {
    Entry e = heap_.top();
    heap_.pop();
    return std::move(e.node);
  }
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  bool known(const std::vector<int>& ptrs) const { return seen_.count(ptrs) > 0; }

 private:
  struct Entry {
    double score;
    StateNode node;
  };
  struct Worse {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.score != b.score) return a.score < b.score;
      return b.node.ptrs < a.node.ptrs;  // equal scores: smaller vector wins
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, Worse> heap_;
  std::set<std::vector<int>> seen_;
};

struct IterRecord {
  int iteration = 0;  // 1-based
  int pool_size = 0;  // before popping
  std::vector<StateNode> selected;
  int forward_best = 0;
  int incumbent = 0;
  double elapsed_s = 0.0;
};

struct RunTrace {
  std::vector<IterRecord> iterations;
};

struct SolveResult {
  Solution solution;
  RunTrace trace;
};

// Multi-source driver: pop the most promising roots, refine them backwards, run
// one forward beam, keep the best text seen, and reseed the pool from wherever
// the beam completed. The time limit is only consulted between iterations.
inline SolveResult imsbs_solve(const Instance& inst, const SolverConfig& cfg) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  auto elapsed = [&t0] {
    return std::chrono::duration<double>(clock::now() - t0).count();
  };

  auto succ = SuccTable::build(inst);
  auto plain = PlainNextTable::build(inst);
  auto eval = HeuristicEval::make(inst, cfg.guide, cfg.prob_k_divisor);
  auto root_eval = HeuristicEval::make(inst, cfg.root_guide, cfg.prob_k_divisor);

  Instance rev = reverse_instance(inst);
  auto rev_succ = SuccTable::build(rev);
  auto rev_eval = HeuristicEval::make(rev, cfg.root_guide, cfg.prob_k_divisor);

  RootPool pool;
  for (auto& r : initial_roots(plain)) {
    double sc = root_eval.score(r);
    pool.push(std::move(r), sc);
  }

  SolveResult out;
  out.solution = empty_solution(inst);

  int iter = 0;
  while (!pool.empty() && iter < cfg.beam_iters && elapsed() < cfg.time_limit_s) {
    ++iter;
    IterRecord rec;
    rec.iteration = iter;
    rec.pool_size = static_cast<int>(pool.size());

    for (int k = 0; k < cfg.sources_per_iter && !pool.empty(); ++k)
      rec.selected.push_back(pool.pop());

    std::vector<StateNode> roots = rec.selected;
    if (cfg.refine_roots)
      for (auto& w : roots)
        w = backward_refine(w, inst, rev, rev_succ, rev_eval,
                            cfg.backward_beam_width, cfg.semantics);

    BeamResult res = rooted_beam_search(roots, inst, succ, cfg.beam_width, eval,
                                        cfg.semantics, cfg.jobs,
                                        cfg.beam_wide_dominance);
    rec.forward_best = res.best.length();
    if (res.best.length() > out.solution.length()) out.solution = std::move(res.best);
    rec.incumbent = out.solution.length();

    for (const auto& v : res.complete_nodes)
      for (auto& nr : roots_from_complete(v, plain)) {
        double sc = root_eval.score(nr);
        pool.push(std::move(nr), sc);
      }

    rec.elapsed_s = elapsed();
    out.trace.iterations.push_back(std::move(rec));
  }

  auto rep = verify_solution(inst, out.solution.text, cfg.semantics);
  if (!rep.feasible)
    throw std::logic_error("solver returned an infeasible text: " + out.solution.text);
  return out;
}

// single wide pass from the initial roots, no refinement
inline SolveResult bs_baseline(const Instance& inst, SolverConfig cfg = SolverConfig{}) {
  cfg.beam_iters = 1;
  cfg.beam_width = 10000;
  cfg.guide = Heuristic::hprob;
  cfg.refine_roots = false;
  return imsbs_solve(inst, cfg);
}

}  // namespace vglcs
