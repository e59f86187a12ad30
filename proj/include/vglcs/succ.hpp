#pragma once

// Successor tables over one instance.
//
// succ(i, j, a): smallest position q >= j in sequence i with character a and
// q - j <= G_i(q), i.e. reachable from a previous match at j - 1. Because the
// bound depends on q, the nearest occurrence may be unusable while a later one
// is fine, so columns are built with a backward sweep that keeps the currently
// usable occurrences in an ordered set.
//
// plain_next(i, j, a): smallest occurrence q >= j, gap bounds ignored.

#include <set>
#include <string>
#include <vector>

#include "vglcs/instance.hpp"

namespace vglcs {

namespace detail {

// interleaved per-sequence table, entry (j, a) at j * sigma + a, j in [1, n+1]
inline std::vector<int> succ_rows(const std::string& s, const std::vector<int>& gaps,
                                  const Instance& inst) {
  const int n = static_cast<int>(s.size());
  const int sigma = inst.sigma();
  std::vector<int> rows((n + 2) * sigma, -1);
  for (int a = 0; a < sigma; ++a) {
    const char c = inst.alphabet[a];
    std::set<int> usable;
    // occurrence q is usable from start pointers j in [q - G(q), q]; bucket its
    // removal at the first j below that range
    std::vector<std::vector<int>> expire(n + 2);
    for (int j = n; j >= 1; --j) {
      if (s[j - 1] == c) {
        usable.insert(j);
        int cut = j - gaps[j - 1] - 1;
        if (cut >= 1) expire[cut].push_back(j);
      }
      for (int q : expire[j]) usable.erase(q);
      rows[j * sigma + a] = usable.empty() ? -1 : *usable.begin();
    }
  }
  return rows;
}

inline std::vector<int> plain_rows(const std::string& s, const Instance& inst) {
  const int n = static_cast<int>(s.size());
  const int sigma = inst.sigma();
  std::vector<int> rows((n + 2) * sigma, -1);
  for (int j = n; j >= 1; --j)
    for (int a = 0; a < sigma; ++a) {
      int here = (s[j - 1] == inst.alphabet[a]) ? j : -1;
      rows[j * sigma + a] = (here != -1) ? here : rows[(j + 1) * sigma + a];
    }
  return rows;
}

class NextTable {
 public:
  int at(int i, int j, int a) const { return rows_[i][j * sigma_ + a]; }
  int sigma() const { return sigma_; }
  char letter(int a) const { return alphabet_[a]; }
  const std::string& alphabet() const { return alphabet_; }
  int num_seqs() const { return static_cast<int>(lens_.size()); }
  int len(int i) const { return lens_[i]; }

 protected:
  int sigma_ = 0;
  std::string alphabet_;
  std::vector<int> lens_;
  std::vector<std::vector<int>> rows_;
};

}  // namespace detail

class SuccTable : public detail::NextTable {
 public:
  static SuccTable build(const Instance& inst) {
    SuccTable t;
    t.sigma_ = inst.sigma();
    t.alphabet_ = inst.alphabet;
    for (int i = 0; i < inst.num_seqs(); ++i) {
      t.lens_.push_back(inst.len(i));
      t.rows_.push_back(detail::succ_rows(inst.seqs[i], inst.gaps[i], inst));
    }
    return t;
  }
};

class PlainNextTable : public detail::NextTable {
 public:
  static PlainNextTable build(const Instance& inst) {
    PlainNextTable t;
    t.sigma_ = inst.sigma();
    t.alphabet_ = inst.alphabet;
    for (int i = 0; i < inst.num_seqs(); ++i) {
      t.lens_.push_back(inst.len(i));
      t.rows_.push_back(detail::plain_rows(inst.seqs[i], inst));
    }
    return t;
  }
};

}  // namespace vglcs
