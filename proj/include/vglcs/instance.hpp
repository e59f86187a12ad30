#pragma once

// Problem instance: m sequences, one nonnegative gap bound per character position.
// Positions are 1-based throughout; gaps[i][j-1] bounds how far back the previous
// matched position may lie when position j is matched (b - a <= G(b) + 1).

#include <array>
#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vglcs {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

class Instance {
 public:
  std::vector<std::string> seqs;
  std::vector<std::vector<int>> gaps;
  std::string alphabet;  // sorted distinct characters over all sequences

  Instance() = default;

  static Instance make(std::vector<std::string> seqs, std::vector<std::vector<int>> gaps) {
    if (seqs.empty()) throw std::invalid_argument("instance needs at least one sequence");
    if (seqs.size() != gaps.size())
      throw std::invalid_argument("sequence/gap array count mismatch");
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      if (seqs[i].empty()) throw std::invalid_argument("empty sequence");
      if (seqs[i].size() != gaps[i].size())
        throw std::invalid_argument("gap array length mismatch");
      for (int g : gaps[i])
        if (g < 0) throw std::invalid_argument("negative gap bound");
    }
    Instance inst;
    inst.seqs = std::move(seqs);
    inst.gaps = std::move(gaps);
    inst.index_alphabet();
    return inst;
  }

  int num_seqs() const { return static_cast<int>(seqs.size()); }
  int len(int i) const { return static_cast<int>(seqs[i].size()); }
  int max_len() const {
    std::size_t n = 0;
    for (auto& s : seqs) n = std::max(n, s.size());
    return static_cast<int>(n);
  }
  int sigma() const { return static_cast<int>(alphabet.size()); }

  char at(int i, int pos) const { return seqs[i][pos - 1]; }
  int gap(int i, int pos) const { return gaps[i][pos - 1]; }

  // alphabet index of c, or -1 if c never occurs
  int letter(char c) const { return letter_index_[static_cast<unsigned char>(c)]; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.seqs == b.seqs && a.gaps == b.gaps;
  }

 private:
  std::array<int, 256> letter_index_{};

  void index_alphabet() {
    std::array<bool, 256> seen{};
    for (auto& s : seqs)
      for (char c : s) seen[static_cast<unsigned char>(c)] = true;
    alphabet.clear();
    for (int c = 0; c < 256; ++c)
      if (seen[c]) alphabet.push_back(static_cast<char>(c));
    letter_index_.fill(-1);
    for (int a = 0; a < static_cast<int>(alphabet.size()); ++a)
      letter_index_[static_cast<unsigned char>(alphabet[a])] = a;
  }
};

// Text format: first line m, then per sequence two lines, the string itself and
// |s_i| space-separated gap bounds.
inline Instance parse_instance(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  // a trailing newline yields one empty trailing entry; drop it
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  if (lines.empty()) throw ParseError(1, "missing header");
  const std::string& head = lines[0];
  if (head.empty() || !std::all_of(head.begin(), head.end(),
                                   [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError(1, "malformed header, expected sequence count");
  int m = 0;
  try {
    m = std::stoi(head);
  } catch (const std::exception&) {
    throw ParseError(1, "malformed header, expected sequence count");
  }
  if (m < 1) throw ParseError(1, "sequence count must be positive");

  std::vector<std::string> seqs;
  std::vector<std::vector<int>> gaps;
  for (int i = 0; i < m; ++i) {
    int seq_line = 2 + 2 * i;
    int gap_line = seq_line + 1;
    if (static_cast<std::size_t>(seq_line) > lines.size())
      throw ParseError(seq_line, "missing sequence");
    const std::string& s = lines[seq_line - 1];
    if (s.empty()) throw ParseError(seq_line, "empty sequence");
    if (s.find_first_of(" \t\r") != std::string::npos)
      throw ParseError(seq_line, "whitespace inside sequence");
    if (static_cast<std::size_t>(gap_line) > lines.size())
      throw ParseError(gap_line, "missing gap line");
    std::istringstream gs(lines[gap_line - 1]);
    std::vector<int> g;
    long long v;
    while (gs >> v) {
      if (v < 0) throw ParseError(gap_line, "negative gap bound");
      g.push_back(static_cast<int>(v));
    }
    if (!gs.eof()) throw ParseError(gap_line, "malformed gap value");
    if (g.size() != s.size())
      throw ParseError(gap_line, "expected " + std::to_string(s.size()) +
                                     " gap bounds, got " + std::to_string(g.size()));
    seqs.push_back(s);
    gaps.push_back(std::move(g));
  }
  if (lines.size() > static_cast<std::size_t>(1 + 2 * m))
    throw ParseError(2 + 2 * m, "trailing content");
  return Instance::make(std::move(seqs), std::move(gaps));
}

inline Instance read_instance(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

inline std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << inst.num_seqs() << '\n';
  for (int i = 0; i < inst.num_seqs(); ++i) {
    out << inst.seqs[i] << '\n';
    for (std::size_t j = 0; j < inst.gaps[i].size(); ++j) {
      if (j) out << ' ';
      out << inst.gaps[i][j];
    }
    out << '\n';
  }
  return out.str();
}

// Mirror image: characters reversed, gap array reversed (bound follows its character).
inline Instance reverse_instance(const Instance& inst) {
  std::vector<std::string> seqs = inst.seqs;
  std::vector<std::vector<int>> gaps = inst.gaps;
  for (auto& s : seqs) std::reverse(s.begin(), s.end());
  for (auto& g : gaps) std::reverse(g.begin(), g.end());
  return Instance::make(std::move(seqs), std::move(gaps));
}

}  // namespace vglcs
