#pragma once

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vglcs/exact.hpp"
#include "vglcs/instance.hpp"

namespace vglcs {

struct IlpTerm {
  int coef = 0;
  int var = -1;
};

struct IlpConstraint {
  std::string name;
  std::vector<IlpTerm> terms;  // sum coef*var <= bound
  int bound = 0;
};

struct IlpModel {
  std::vector<std::string> var_names;
  std::vector<int> objective;  // coefficient per variable
  std::vector<IlpConstraint> constraints;

  int num_vars() const { return static_cast<int>(var_names.size()); }
};

// Binary model over the two-sequence match lattice. Variables are one
// selection bit x and one start bit s per matching position pair; a
// feasible assignment selects a strictly increasing chain whose steps fit
// both gap windows, with the chain minimum marked as the single start.
inline IlpModel build_ilp_model(const Instance& inst) {
  if (inst.num_seqs() != 2)
    throw std::invalid_argument("ilp model needs exactly two sequences");

  const auto matches = detail::match_pairs(inst);
  const int m = static_cast<int>(matches.size());

  IlpModel mod;
  mod.var_names.reserve(2 * m);
  auto coord_tag = [&](int k) {
    return std::to_string(matches[k].first) + "_" +
           std::to_string(matches[k].second);
  };
  for (int k = 0; k < m; ++k) mod.var_names.push_back("x_" + coord_tag(k));
  for (int k = 0; k < m; ++k) mod.var_names.push_back("s_" + coord_tag(k));
  mod.objective.assign(2 * m, 0);
  for (int k = 0; k < m; ++k) mod.objective[k] = 1;

  auto windowed_pred = [&](int t, int k) {
    auto [pi, pj] = matches[t];
    auto [i, j] = matches[k];
    return pi < i && pj < j && i - pi <= inst.gap(0, i) + 1 &&
           j - pj <= inst.gap(1, j) + 1;
  };

  // a selected match needs a selected windowed predecessor or its start bit
  for (int k = 0; k < m; ++k) {
    IlpConstraint c;
    c.name = "act_" + coord_tag(k);
    c.terms.push_back({1, k});
    for (int t = 0; t < k; ++t)
      if (windowed_pred(t, k)) c.terms.push_back({-1, t});
    c.terms.push_back({-1, m + k});
    c.bound = 0;
    mod.constraints.push_back(std::move(c));
  }

  {
    IlpConstraint c;
    c.name = "start";
    for (int k = 0; k < m; ++k) c.terms.push_back({1, m + k});
    c.bound = 1;
    mod.constraints.push_back(std::move(c));
  }

  // matches not strictly ordered in both coordinates cannot coexist
  for (int k = 0; k < m; ++k)
    for (int t = k + 1; t < m; ++t) {
      auto [ik, jk] = matches[k];
      auto [it, jt] = matches[t];
      if (ik < it && jk < jt) continue;
      IlpConstraint c;
      c.name = "conf_" + coord_tag(k) + "_" + coord_tag(t);
      c.terms.push_back({1, k});
      c.terms.push_back({1, t});
      c.bound = 1;
      mod.constraints.push_back(std::move(c));
    }

  // a start forbids any selected match strictly south-west of it
  for (int k = 0; k < m; ++k) {
    auto [i, j] = matches[k];
    IlpConstraint c;
    c.name = "region_" + coord_tag(k);
    int sw = 0;
    for (int t = 0; t < k; ++t) {
      auto [pi, pj] = matches[t];
      if (pi < i && pj < j) {
        c.terms.push_back({1, t});
        ++sw;
      }
    }
    if (sw == 0) {
      c.terms.push_back({1, m + k});
      c.bound = 1;
    } else {
      c.terms.push_back({sw, m + k});
      c.bound = sw;
    }
    mod.constraints.push_back(std::move(c));
  }

  return mod;
}

namespace detail {

inline void render_terms(std::ostream& os, const std::vector<IlpTerm>& terms,
                         const std::vector<std::string>& names) {
  if (terms.empty()) {
    os << "0";
    return;
  }
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const int c = terms[k].coef;
    if (k == 0) {
      if (c < 0) os << "- ";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (std::abs(c) != 1) os << std::abs(c) << ' ';
    os << names[terms[k].var];
  }
}

}  // namespace detail

inline std::string write_lp_text(const IlpModel& mod) {
  std::ostringstream os;
  os << "Maximize\n obj: ";
  std::vector<IlpTerm> obj;
  for (int v = 0; v < mod.num_vars(); ++v)
    if (mod.objective[v] != 0) obj.push_back({mod.objective[v], v});
  detail::render_terms(os, obj, mod.var_names);
  os << "\nSubject To\n";
  for (const auto& c : mod.constraints) {
    os << ' ' << c.name << ": ";
    detail::render_terms(os, c.terms, mod.var_names);
    os << " <= " << c.bound << "\n";
  }
  os << "Binaries\n";
  for (const auto& n : mod.var_names) os << ' ' << n;
  os << "\nEnd\n";
  return os.str();
}

// Exhaustive 0/1 search with per-constraint reachability pruning and an
// objective bound. Visits variables ordered by the first constraint that
// mentions them, which keeps violations close to the branch that caused
// them.
inline int brute_force_ilp(const IlpModel& mod, int cap = 30) {
  const int n = mod.num_vars();
  if (n > cap)
    throw std::invalid_argument("model too large for brute force cap");
  const int nc = static_cast<int>(mod.constraints.size());

  std::vector<long long> cur(nc, 0), minrest(nc, 0), bound(nc, 0);
  std::vector<std::vector<std::pair<int, int>>> inc(n);  // var -> (row, coef)
  for (int c = 0; c < nc; ++c) {
    bound[c] = mod.constraints[c].bound;
    for (const auto& t : mod.constraints[c].terms) {
      inc[t.var].push_back({c, t.coef});
      minrest[c] += std::min(0, t.coef);
    }
  }

  std::vector<int> first(n, INT_MAX);
  for (int c = 0; c < nc; ++c)
    for (const auto& t : mod.constraints[c].terms)
      first[t.var] = std::min(first[t.var], c);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return first[a] != first[b] ? first[a] < first[b] : a < b;
  });

  long long potential = 0;
  for (int v = 0; v < n; ++v) potential += std::max(0, mod.objective[v]);

  long long best = -1;
  auto dfs = [&](auto&& self, int depth, long long obj, long long rest) -> void {
    if (obj + rest <= best) return;
    if (depth == n) {
      best = obj;
      return;
    }
    const int v = order[depth];
    const long long gain = mod.objective[v];
    const long long slack = std::max(0LL, gain);
    for (int val : {1, 0}) {
      bool ok = true;
      for (auto [c, coef] : inc[v]) {
        cur[c] += static_cast<long long>(coef) * val;
        minrest[c] -= std::min(0, coef);
        if (cur[c] + minrest[c] > bound[c]) ok = false;
      }
      if (ok) self(self, depth + 1, obj + gain * val, rest - slack);
      for (auto [c, coef] : inc[v]) {
        cur[c] -= static_cast<long long>(coef) * val;
        minrest[c] += std::min(0, coef);
      }
    }
  };
  dfs(dfs, 0, 0, potential);
  return static_cast<int>(best);
}

}  // namespace vglcs
