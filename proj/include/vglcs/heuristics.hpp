#pragma once

// Guidance functions for ranking search nodes: two optimistic length bounds and
// a subsequence-probability score. All three ignore gap constraints, so the
// bounds stay valid for the gap-restricted problem.

#include <cmath>
#include <limits>
#include <vector>

#include "vglcs/instance.hpp"
#include "vglcs/stategraph.hpp"

namespace vglcs {

enum class Heuristic { ub1, ub2, hprob };

inline const char* to_string(Heuristic h) {
  switch (h) {
    case Heuristic::ub1: return "ub1";
    case Heuristic::ub2: return "ub2";
    default: return "hprob";
  }
}

class SuffixCounts {
 public:
  static SuffixCounts build(const Instance& inst) {
    SuffixCounts t;
    t.sigma_ = inst.sigma();
    for (int i = 0; i < inst.num_seqs(); ++i) {
      const int n = inst.len(i);
      std::vector<int> rows((n + 2) * t.sigma_, 0);
      for (int j = n; j >= 1; --j)
        for (int a = 0; a < t.sigma_; ++a)
          rows[j * t.sigma_ + a] =
              rows[(j + 1) * t.sigma_ + a] + (inst.at(i, j) == inst.alphabet[a] ? 1 : 0);
      t.rows_.push_back(std::move(rows));
    }
    return t;
  }

  // occurrences of letter a in s_i[j..n_i]
  int at(int i, int j, int a) const { return rows_[i][j * sigma_ + a]; }
  int sigma() const { return sigma_; }

 private:
  int sigma_ = 0;
  std::vector<std::vector<int>> rows_;
};

inline int ub1(const StateNode& v, const Instance& inst) {
  int shortest = std::numeric_limits<int>::max();
  for (int i = 0; i < inst.num_seqs(); ++i)
    shortest = std::min(shortest, std::max(0, inst.len(i) - v.ptrs[i] + 1));
  return v.len + shortest;
}

inline int ub2(const StateNode& v, const SuffixCounts& counts) {
  int sum = 0;
  for (int a = 0; a < counts.sigma(); ++a) {
    int least = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < v.ptrs.size(); ++i)
      least = std::min(least, counts.at(static_cast<int>(i), v.ptrs[i], a));
    sum += least;
  }
  return v.len + sum;
}

inline int ub2(const StateNode& v, const Instance& inst) {
  return ub2(v, SuffixCounts::build(inst));
}

// P(k, r): probability that a uniform random string of length k over the
// alphabet is a subsequence of an independent uniform random string of length r
class ProbMatrix {
 public:
  static ProbMatrix build(int sigma_size, int n, int K) {
    ProbMatrix pm;
    pm.K_ = K;
    pm.R_ = n;
    pm.p_.assign((K + 1) * (n + 1), 0.0);
    for (int r = 0; r <= n; ++r) pm.p_[r] = 1.0;
    const double hit = 1.0 / sigma_size, miss = 1.0 - hit;
    for (int k = 1; k <= K; ++k)
      for (int r = k; r <= n; ++r)
        pm.p_[k * (n + 1) + r] =
            hit * pm.p_[(k - 1) * (n + 1) + (r - 1)] + miss * pm.p_[k * (n + 1) + (r - 1)];
    pm.logp_.resize(pm.p_.size());
    for (std::size_t idx = 0; idx < pm.p_.size(); ++idx)
      pm.logp_[idx] = pm.p_[idx] > 0.0 ? std::log(pm.p_[idx])
                                       : -std::numeric_limits<double>::infinity();
    return pm;
  }

  double at(int k, int r) const { return p_[k * (R_ + 1) + r]; }
  double log_at(int k, int r) const { return logp_[k * (R_ + 1) + r]; }
  int max_k() const { return K_; }
  int max_r() const { return R_; }

 private:
  int K_ = 0, R_ = 0;
  std::vector<double> p_, logp_;
};

inline ProbMatrix build_prob_matrix(int sigma_size, int n, int K) {
  return ProbMatrix::build(sigma_size, n, K);
}

// log of prod_i P(k, r_i) with k = ceil(min_i r_i / divisor); divisor 0 means
// the alphabet size
inline double h_prob_log(const StateNode& v, const Instance& inst, const ProbMatrix& pm,
                         int k_divisor = 0) {
  int min_r = std::numeric_limits<int>::max();
  for (int i = 0; i < inst.num_seqs(); ++i)
    min_r = std::min(min_r, std::max(0, inst.len(i) - v.ptrs[i] + 1));
  const int d = k_divisor > 0 ? k_divisor : inst.sigma();
  const int k = (min_r + d - 1) / d;
  double sum = 0.0;
  for (int i = 0; i < inst.num_seqs(); ++i) {
    int r = std::max(0, inst.len(i) - v.ptrs[i] + 1);
    sum += pm.log_at(k, r);
  }
  return sum;
}

inline double h_prob(const StateNode& v, const Instance& inst, const ProbMatrix& pm,
                     int k_divisor = 0) {
  return std::exp(h_prob_log(v, inst, pm, k_divisor));
}

// One heuristic bound with its precomputed tables, ready for bulk scoring.
class HeuristicEval {
 public:
  static HeuristicEval make(const Instance& inst, Heuristic kind, int k_divisor = 0) {
    HeuristicEval e;
    e.inst_ = &inst;
    e.kind_ = kind;
    e.k_divisor_ = k_divisor;
    if (kind == Heuristic::ub2) e.counts_ = SuffixCounts::build(inst);
    if (kind == Heuristic::hprob)
      e.pm_ = ProbMatrix::build(inst.sigma(), inst.max_len(), inst.max_len());
    return e;
  }

  double score(const StateNode& v) const {
    switch (kind_) {
      case Heuristic::ub1: return ub1(v, *inst_);
      case Heuristic::ub2: return ub2(v, counts_);
      default: return h_prob_log(v, *inst_, pm_, k_divisor_);
    }
  }

  Heuristic kind() const { return kind_; }

 private:
  const Instance* inst_ = nullptr;
  Heuristic kind_ = Heuristic::ub2;
  int k_divisor_ = 0;
  SuffixCounts counts_;
  ProbMatrix pm_;
};

}  // namespace vglcs
