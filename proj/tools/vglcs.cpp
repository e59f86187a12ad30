#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vglcs/config.hpp"
#include "vglcs/dot.hpp"
#include "vglcs/exact.hpp"
#include "vglcs/genbench.hpp"
#include "vglcs/ilp.hpp"
#include "vglcs/imsbs.hpp"
#include "vglcs/instance.hpp"
#include "vglcs/trace_io.hpp"
#include "vglcs/verify.hpp"

namespace {

vglcs::Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return vglcs::read_instance(in);
}

vglcs::Heuristic heuristic_from(const std::string& name) {
  if (name == "ub1") return vglcs::Heuristic::ub1;
  if (name == "ub2") return vglcs::Heuristic::ub2;
  return vglcs::Heuristic::hprob;
}

vglcs::Semantics semantics_from(const std::string& name) {
  return name == "existential" ? vglcs::Semantics::existential
                               : vglcs::Semantics::leftmost;
}

void print_solution(std::ostream& os, const vglcs::Solution& sol) {
  os << "text: " << sol.text << "\n";
  os << "length: " << sol.text.size() << "\n";
  for (std::size_t i = 0; i < sol.embeddings.size(); ++i) {
    os << "embedding " << i + 1 << ":";
    for (int p : sol.embeddings[i]) os << ' ' << p;
    os << "\n";
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variable gapped longest common subsequence toolkit"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "run a solver on an instance file");
  solve->set_help_flag("--help", "print help");  // frees --h for the guidance flag
  std::string solve_file, algo = "imsbs", h_name = "ub2", hp_name = "ub2";
  std::string sem_name = "leftmost", trace_path;
  int beta = 500, beta_bwd = 100, sources = 10, iters = 100, jobs = 1;
  double time_limit = 1800.0;
  solve->add_option("file", solve_file, "instance file")->required();
  solve->add_option("--algo", algo, "solver")
      ->check(CLI::IsMember({"bs", "imsbs", "imsbs-greedy", "dp", "dp-ismq",
                             "brute-ex", "brute-lm"}));
  solve->add_option("--beta", beta, "forward beam width");
  solve->add_option("--beta-bwd", beta_bwd, "backward beam width");
  solve->add_option("--sources", sources, "roots drawn per iteration");
  solve->add_option("--iters", iters, "beam iterations");
  solve->add_option("--h", h_name, "forward guidance")
      ->check(CLI::IsMember({"ub1", "ub2", "hprob"}));
  solve->add_option("--hprime", hp_name, "root and backward guidance")
      ->check(CLI::IsMember({"ub1", "ub2", "hprob"}));
  solve->add_option("--time-limit", time_limit, "wall clock budget in seconds");
  solve->add_option("--semantics", sem_name, "witness semantics")
      ->check(CLI::IsMember({"leftmost", "existential"}));
  solve->add_option("--trace", trace_path, "write per-iteration trace JSONL");
  solve->add_option("--jobs", jobs, "worker threads");

  // verify
  auto* verify = app.add_subcommand("verify", "check a text against an instance");
  std::string verify_file, verify_text, verify_sem = "leftmost";
  verify->add_option("file", verify_file, "instance file")->required();
  verify->add_option("--text", verify_text, "candidate subsequence")->required();
  verify->add_option("--semantics", verify_sem, "witness semantics")
      ->check(CLI::IsMember({"leftmost", "existential"}));

  // gen
  auto* gen = app.add_subcommand("gen", "write random instance files");
  int gen_m = 2, gen_n = 50, gen_sigma = 2, gen_count = 10;
  std::uint64_t gen_seed = 1;
  std::string out_dir;
  gen->add_option("--m", gen_m, "sequences per instance");
  gen->add_option("--n", gen_n, "sequence length");
  gen->add_option("--sigma", gen_sigma, "alphabet size");
  gen->add_option("--count", gen_count, "instances to write");
  gen->add_option("--seed", gen_seed, "stream seed");
  gen->add_option("--out-dir", out_dir, "target directory")->required();

  // graph
  auto* graph = app.add_subcommand("graph", "dump the rooted state graph as DOT");
  std::string graph_file, graph_out;
  int max_nodes = 200;
  graph->add_option("file", graph_file, "instance file")->required();
  graph->add_option("--max-nodes", max_nodes, "cap on dumped states");
  graph->add_option("-o,--out", graph_out, "output path, stdout when absent");

  // export-ilp
  auto* exilp = app.add_subcommand("export-ilp", "write the 0/1 model as LP text");
  std::string ilp_file, ilp_out;
  exilp->add_option("file", ilp_file, "instance file")->required();
  exilp->add_option("-o,--out", ilp_out, "output path, stdout when absent");

  // bench
  auto* bench = app.add_subcommand("bench", "run a generated benchmark grid");
  std::vector<int> bench_m = {2}, bench_n = {50}, bench_sigma = {2};
  int bench_count = 10, bench_jobs = 1;
  std::uint64_t bench_seed = 1;
  double bench_tlim = 0.0;
  std::vector<std::string> bench_algos;
  std::string bench_out, bench_summary;
  bench->add_option("--m", bench_m, "sequence counts")->delimiter(',');
  bench->add_option("--n", bench_n, "sequence lengths")->delimiter(',');
  bench->add_option("--sigma", bench_sigma, "alphabet sizes")->delimiter(',');
  bench->add_option("--count", bench_count, "instances per group");
  bench->add_option("--seed", bench_seed, "stream seed");
  bench->add_option("--algos", bench_algos, "algorithms to run")
      ->delimiter(',')
      ->required();
  bench->add_option("--time-limit", bench_tlim,
                    "per solve budget override in seconds, 0 keeps presets");
  bench->add_option("--jobs", bench_jobs, "parallel cells");
  bench->add_option("--out", bench_out, "raw CSV path, stdout when absent");
  bench->add_option("--summary", bench_summary, "summary CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) {
      const auto inst = load_instance(solve_file);

      vglcs::SolverConfig cfg;
      if (algo == "bs") cfg = vglcs::preset(vglcs::Preset::bs);
      if (algo == "imsbs") cfg = vglcs::preset(vglcs::Preset::imsbs);
      if (algo == "imsbs-greedy")
        cfg = vglcs::preset(vglcs::Preset::imsbs_greedy);
      if (solve->count("--beta")) cfg.beam_width = beta;
      if (solve->count("--beta-bwd")) cfg.backward_beam_width = beta_bwd;
      if (solve->count("--sources")) cfg.sources_per_iter = sources;
      if (solve->count("--iters")) cfg.beam_iters = iters;
      if (solve->count("--h")) cfg.guide = heuristic_from(h_name);
      if (solve->count("--hprime")) cfg.root_guide = heuristic_from(hp_name);
      if (solve->count("--time-limit")) cfg.time_limit_s = time_limit;
      cfg.semantics = semantics_from(sem_name);
      cfg.jobs = jobs;

      const auto t0 = std::chrono::steady_clock::now();
      vglcs::Solution sol;
      vglcs::RunTrace trace;
      if (algo == "dp") {
        sol = vglcs::dp_basic(inst);
      } else if (algo == "dp-ismq") {
        sol = vglcs::dp_ismq(inst);
      } else if (algo == "brute-ex") {
        sol = vglcs::brute_force_existential(inst);
      } else if (algo == "brute-lm") {
        sol = vglcs::brute_force_leftmost(inst);
      } else {
        auto res = vglcs::imsbs_solve(inst, cfg);
        sol = std::move(res.solution);
        trace = std::move(res.trace);
      }
      const double secs = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - t0)
                              .count();

      if (algo == "dp" || algo == "dp-ismq" || algo == "brute-ex" ||
          algo == "brute-lm") {
        const auto sem = algo == "brute-lm" ? vglcs::Semantics::leftmost
                                            : vglcs::Semantics::existential;
        if (!vglcs::verify_solution(inst, sol.text, sem).feasible)
          throw std::logic_error("solver returned an infeasible text");
      }

      print_solution(std::cout, sol);
      std::cerr << "runtime_s: " << vglcs::detail::format_runtime(secs) << "\n";
      if (!trace_path.empty()) {
        auto out = open_out(trace_path);
        vglcs::write_trace(out, trace);
      }
    } else if (verify->parsed()) {
      const auto inst = load_instance(verify_file);
      const auto report =
          vglcs::verify_solution(inst, verify_text, semantics_from(verify_sem));
      std::cout << "feasible: " << (report.feasible ? "yes" : "no") << "\n";
      for (std::size_t i = 0; i < report.per_sequence.size(); ++i) {
        const auto& chk = report.per_sequence[i];
        std::cout << "sequence " << i + 1 << ":";
        if (chk.ok) {
          for (int p : chk.embedding) std::cout << ' ' << p;
        } else {
          std::cout << " stuck at text index " << chk.stuck_at;
        }
        std::cout << "\n";
      }
    } else if (gen->parsed()) {
      vglcs::GenSpec spec{gen_m, gen_n, gen_sigma, gen_count, gen_seed};
      std::filesystem::create_directories(out_dir);
      for (int index = 1; index <= spec.count; ++index) {
        const auto path =
            std::filesystem::path(out_dir) / vglcs::instance_filename(spec, index);
        auto out = open_out(path.string());
        out << vglcs::write_instance(vglcs::generate_instance(spec, index));
        std::cout << path.string() << "\n";
      }
    } else if (graph->parsed()) {
      const auto inst = load_instance(graph_file);
      if (graph_out.empty()) {
        vglcs::write_dot(std::cout, inst, max_nodes);
      } else {
        auto out = open_out(graph_out);
        vglcs::write_dot(out, inst, max_nodes);
      }
    } else if (exilp->parsed()) {
      const auto inst = load_instance(ilp_file);
      const auto text = vglcs::write_lp_text(vglcs::build_ilp_model(inst));
      if (ilp_out.empty()) {
        std::cout << text;
      } else {
        auto out = open_out(ilp_out);
        out << text;
      }
    } else if (bench->parsed()) {
      std::vector<vglcs::GenSpec> grid;
      for (int m : bench_m)
        for (int n : bench_n)
          for (int s : bench_sigma)
            grid.push_back({m, n, s, bench_count, bench_seed});
      const auto records =
          vglcs::run_benchmark(grid, bench_algos, bench_jobs, bench_tlim);
      if (bench_out.empty()) {
        vglcs::write_bench_csv(std::cout, records);
      } else {
        auto out = open_out(bench_out);
        vglcs::write_bench_csv(out, records);
      }
      if (!bench_summary.empty()) {
        auto out = open_out(bench_summary);
        vglcs::write_summary_csv(out, records);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
