#pragma once

// Solver knobs shared by the beam search, the iterative driver and the CLI.

#include <stdexcept>

#include "vglcs/heuristics.hpp"
#include "vglcs/verify.hpp"

namespace vglcs {

struct SolverConfig {
  int beam_width = 500;           // forward beam size
  int backward_beam_width = 100;  // refinement beam size
  int sources_per_iter = 10;      // roots popped per iteration
  int beam_iters = 100;           // outer iteration budget
  Heuristic guide = Heuristic::ub2;       // forward beam ranking
  Heuristic root_guide = Heuristic::ub2;  // root-pool and backward ranking
  double time_limit_s = 1800.0;
  Semantics semantics = Semantics::leftmost;
  bool refine_roots = true;         // backward refinement of popped roots
  bool beam_wide_dominance = false;  // cross-parent pruning per level
  int prob_k_divisor = 0;            // 0: alphabet size
  int jobs = 1;
};

enum class Preset { bs, imsbs, imsbs_greedy };

inline SolverConfig preset(Preset p) {
  SolverConfig cfg;  // defaults above are the iterative configuration
  switch (p) {
    case Preset::bs:
      cfg.beam_width = 10000;
      cfg.guide = Heuristic::hprob;
      cfg.beam_iters = 1;
      cfg.refine_roots = false;
      break;
    case Preset::imsbs:
      break;
    case Preset::imsbs_greedy:
      cfg.beam_width = 1;
      cfg.beam_iters = 10000;
      break;
  }
  return cfg;
}

}  // namespace vglcs
