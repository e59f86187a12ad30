#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "vglcs/config.hpp"
#include "vglcs/exact.hpp"
#include "vglcs/imsbs.hpp"
#include "vglcs/instance.hpp"

namespace vglcs {

// counter-based 64 bit generator, stream layout frozen as version 1
struct Splitmix64 {
  std::uint64_t state = 0;

  explicit Splitmix64(std::uint64_t s) : state(s) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

struct GenSpec {
  int m = 2;
  int n = 50;
  int sigma_size = 2;
  int count = 10;
  std::uint64_t seed = 1;
};

namespace detail {

inline void check_gen_spec(const GenSpec& spec) {
  if (spec.m <= 0 || spec.n <= 0 || spec.sigma_size <= 0 || spec.count <= 0)
    throw std::invalid_argument("generator spec fields must be positive");
  if (spec.sigma_size > 26)
    throw std::invalid_argument("alphabet is limited to 26 letters");
}

inline std::uint64_t stream_key(const GenSpec& spec, int index) {
  std::uint64_t k = spec.seed;
  const std::uint64_t words[4] = {
      static_cast<std::uint64_t>(spec.m), static_cast<std::uint64_t>(spec.n),
      static_cast<std::uint64_t>(spec.sigma_size),
      static_cast<std::uint64_t>(index)};
  for (std::uint64_t w : words) k = Splitmix64(k ^ w).next();
  return k;
}

}  // namespace detail

inline std::string instance_id(const GenSpec& spec, int index) {
  return "rand_m" + std::to_string(spec.m) + "_n" + std::to_string(spec.n) +
         "_s" + std::to_string(spec.sigma_size) + "_i" + std::to_string(index);
}

inline std::string instance_filename(const GenSpec& spec, int index) {
  return instance_id(spec, index) + ".vglcs";
}

// index is 1 based; characters for all sequences are drawn before any gap
inline Instance generate_instance(const GenSpec& spec, int index) {
  detail::check_gen_spec(spec);
  if (index < 1) throw std::invalid_argument("instance index is 1 based");

  Splitmix64 rng(detail::stream_key(spec, index));
  std::vector<std::string> seqs(spec.m);
  for (int i = 0; i < spec.m; ++i) {
    seqs[i].reserve(spec.n);
    for (int j = 0; j < spec.n; ++j)
      seqs[i].push_back(
          static_cast<char>('A' + rng.next() % spec.sigma_size));
  }
  const int lo = spec.sigma_size / 2;
  const int hi = (3 * spec.sigma_size) / 2;
  std::vector<std::vector<int>> gaps(spec.m);
  for (int i = 0; i < spec.m; ++i) {
    gaps[i].reserve(spec.n);
    for (int j = 0; j < spec.n; ++j)
      gaps[i].push_back(lo + static_cast<int>(rng.next() % (hi - lo + 1)));
  }
  return Instance::make(seqs, gaps);
}

struct BenchRecord {
  std::string instance;
  std::string algorithm;
  std::uint64_t seed = 0;
  int m = 0;
  int n = 0;
  int sigma = 0;
  int objective = 0;
  double runtime_s = 0.0;
  std::string config;
};

namespace detail {

// stored runtimes round trip through their printed form so that summary
// rows can be re-derived from the raw csv without drift
inline double quantize_runtime(double seconds) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", seconds);
  return std::strtod(buf, nullptr);
}

inline std::string format_runtime(double seconds) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", seconds);
  return buf;
}

struct AlgoKind {
  bool preset = false;
  Preset which = Preset::bs;
  bool pair_only = false;  // dp variants need m == 2
};

inline AlgoKind algo_kind(const std::string& name) {
  if (name == "bs") return {true, Preset::bs, false};
  if (name == "imsbs") return {true, Preset::imsbs, false};
  if (name == "imsbs-greedy") return {true, Preset::imsbs_greedy, false};
  if (name == "dp" || name == "dp-ismq") return {false, Preset::bs, true};
  throw std::invalid_argument("unknown benchmark algorithm: " + name);
}

inline std::string config_fingerprint(const SolverConfig& cfg) {
  std::string out = "beta=" + std::to_string(cfg.beam_width);
  out += ";bwd=" + std::to_string(cfg.backward_beam_width);
  out += ";src=" + std::to_string(cfg.sources_per_iter);
  out += ";iters=" + std::to_string(cfg.beam_iters);
  out += ";h=" + std::string(to_string(cfg.guide));
  out += ";hp=" + std::string(to_string(cfg.root_guide));
  out += ";tlim=" + format_runtime(cfg.time_limit_s);
  out += ";sem=" + std::string(to_string(cfg.semantics));
  return out;
}

}  // namespace detail

// one record per runnable (instance, algorithm) cell, rows ordered by grid
// position, then instance index, then the given algorithm order; dp rows
// are dropped entirely when the group arity is not two
inline std::vector<BenchRecord> run_benchmark(
    const std::vector<GenSpec>& grid, const std::vector<std::string>& algos,
    int jobs = 1, double time_limit_override = 0.0) {
  struct Cell {
    const GenSpec* spec;
    int index;
    std::string algo;
  };
  std::vector<Cell> cells;
  for (const auto& spec : grid) {
    detail::check_gen_spec(spec);
    for (int index = 1; index <= spec.count; ++index)
      for (const auto& algo : algos) {
        const auto kind = detail::algo_kind(algo);
        if (kind.pair_only && spec.m != 2) continue;
        cells.push_back({&spec, index, algo});
      }
  }

  std::vector<BenchRecord> records(cells.size());
  auto run_cell = [&](std::size_t at) {
    const Cell& cell = cells[at];
    const auto kind = detail::algo_kind(cell.algo);
    const Instance inst = generate_instance(*cell.spec, cell.index);

    SolverConfig cfg;
    if (kind.preset) {
      cfg = preset(kind.which);
      if (time_limit_override > 0.0) cfg.time_limit_s = time_limit_override;
    }

    const auto t0 = std::chrono::steady_clock::now();
    int objective = 0;
    if (kind.preset) {
      objective = static_cast<int>(imsbs_solve(inst, cfg).solution.text.size());
    } else if (cell.algo == "dp") {
      objective = static_cast<int>(dp_basic(inst).text.size());
    } else {
      objective = static_cast<int>(dp_ismq(inst).text.size());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    BenchRecord rec;
    rec.instance = instance_id(*cell.spec, cell.index);
    rec.algorithm = cell.algo;
    rec.seed = cell.spec->seed;
    rec.m = cell.spec->m;
    rec.n = cell.spec->n;
    rec.sigma = cell.spec->sigma_size;
    rec.objective = objective;
    rec.runtime_s = detail::quantize_runtime(secs);
    rec.config = kind.preset ? detail::config_fingerprint(cfg) : "exact";
    records[at] = std::move(rec);
  };

  if (jobs <= 1 || cells.size() < 2) {
    for (std::size_t at = 0; at < cells.size(); ++at) run_cell(at);
  } else {
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      for (std::size_t at = cursor.fetch_add(1); at < cells.size();
           at = cursor.fetch_add(1))
        run_cell(at);
    };
    std::vector<std::thread> pool;
    const int width = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(jobs), cells.size()));
    for (int t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return records;
}

inline void write_bench_csv(std::ostream& os,
                            const std::vector<BenchRecord>& records) {
  os << "instance,algorithm,seed,m,n,sigma,objective,runtime_s,config\n";
  for (const auto& r : records)
    os << r.instance << ',' << r.algorithm << ',' << r.seed << ',' << r.m
       << ',' << r.n << ',' << r.sigma << ',' << r.objective << ','
       << detail::format_runtime(r.runtime_s) << ',' << r.config << '\n';
}

// group label derives from the record itself, groups appear in first-seen
// order and algorithms in first-seen order within each group
inline void write_summary_csv(std::ostream& os,
                              const std::vector<BenchRecord>& records) {
  os << "group,algorithm,mean_objective,mean_runtime_s\n";
  std::vector<std::pair<std::string, std::string>> keys;
  for (const auto& r : records) {
    const std::string group = "m" + std::to_string(r.m) + "_n" +
                              std::to_string(r.n) + "_s" +
                              std::to_string(r.sigma);
    std::pair<std::string, std::string> key{group, r.algorithm};
    bool known = false;
    for (const auto& k : keys) known = known || k == key;
    if (!known) keys.push_back(std::move(key));
  }
  for (const auto& [group, algo] : keys) {
    double obj = 0.0, rt = 0.0;
    int cnt = 0;
    for (const auto& r : records) {
      if (r.algorithm != algo) continue;
      const std::string g = "m" + std::to_string(r.m) + "_n" +
                            std::to_string(r.n) + "_s" +
                            std::to_string(r.sigma);
      if (g != group) continue;
      obj += r.objective;
      rt += r.runtime_s;
      ++cnt;
    }
    os << group << ',' << algo << ',' << detail::format_runtime(obj / cnt)
       << ',' << detail::format_runtime(rt / cnt) << '\n';
  }
}

}  // namespace vglcs
