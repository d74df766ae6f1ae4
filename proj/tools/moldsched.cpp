// moldsched: moldable-task scheduling toolkit.
//
// Subcommands:
//   gen    generate a synthetic workload instance file
//   sched  schedule an instance with one of the six algorithms
//   bound  print a lower bound (makespan or minsum) for an instance
//   bench  run a ratio experiment sweep from a config file
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "moldsched/baselines.hpp"
#include "moldsched/bicriteria.hpp"
#include "moldsched/cmax_bound.hpp"
#include "moldsched/generator.hpp"
#include "moldsched/harness.hpp"
#include "moldsched/io.hpp"
#include "moldsched/lp_bound.hpp"

namespace {

int run_gen(int n, int m, const std::string& seq, const std::string& par, std::uint64_t seed,
            double min_seq_time, const std::string& out) {
  moldsched::WorkloadSpec spec;
  spec.n = n;
  spec.m = m;
  spec.seed = seed;
  spec.min_seq_time = min_seq_time;
  const auto workload = moldsched::parse_workload_tag(seq + "-" + par);
  spec.seq_model = workload.seq;
  spec.par_model = workload.par;
  moldsched::save_instance(out, moldsched::gen_instance(spec).instance);
  return 0;
}

int run_sched(const std::string& algo, const std::string& instance_path, std::string out,
              int shuffles, std::uint64_t seed, double cmax_scale, double work_stretch) {
  const auto instance = moldsched::load_instance(instance_path);
  if (out.empty()) out = instance_path + ".sched";

  moldsched::BicriteriaOptions options;
  options.shuffle_rounds = shuffles;
  options.seed = seed;
  options.cmax_scale = cmax_scale;
  options.work_stretch = work_stretch;

  const auto start = std::chrono::steady_clock::now();
  const auto schedule = moldsched::run_algorithm(algo, instance, options);
  const auto stop = std::chrono::steady_clock::now();
  const double runtime = std::chrono::duration<double>(stop - start).count();

  const auto report = moldsched::validate_schedule(instance, schedule);
  if (!report.ok) {
    std::cerr << "internal error: invalid schedule: " << report.violations.front() << '\n';
    return 1;
  }
  moldsched::save_schedule(out, schedule);
  const auto obj = moldsched::objectives_unchecked(instance, schedule);
  std::cout << moldsched::format_double(obj.makespan) << ' '
            << moldsched::format_double(obj.minsum) << ' ' << moldsched::format_double(runtime)
            << '\n';
  return 0;
}

int run_bound(const std::string& criterion, const std::string& instance_path,
              const std::string& dump_path) {
  const auto instance = moldsched::load_instance(instance_path);
  if (criterion == "makespan") {
    std::cout << moldsched::format_double(moldsched::cmax_lower_bound(instance).value) << '\n';
    return 0;
  }
  const auto detail = moldsched::minsum_lower_bound_detail(instance);
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) {
      std::cerr << "cannot open " << dump_path << " for writing\n";
      return 1;
    }
    moldsched::dump_lp(out, detail.model);
  }
  std::cout << moldsched::format_double(detail.value) << '\n';
  return 0;
}

int run_bench(const std::string& config_path, const std::string& out_dir, int jobs,
              bool gnuplot) {
  const auto config = moldsched::load_config(config_path);
  const auto rows = moldsched::run_experiment(config, jobs);
  const auto summary = moldsched::summarize(rows);
  moldsched::emit_outputs(out_dir, rows, summary, gnuplot);
  std::cout << "wrote " << rows.size() << " rows to " << out_dir << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moldable-task scheduling toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a workload instance");
  int gen_n = 25, gen_m = 200;
  std::string gen_seq = "uniform", gen_par = "high", gen_out;
  std::uint64_t gen_seed = 1;
  double gen_min_seq = 0.01;
  gen->add_option("--n", gen_n, "task count")->required();
  gen->add_option("--m", gen_m, "processor count")->required();
  gen->add_option("--seq", gen_seq, "sequential model: uniform|mixed")
      ->check(CLI::IsMember({"uniform", "mixed"}));
  gen->add_option("--par", gen_par, "parallelism model: high|weak|mixed")
      ->check(CLI::IsMember({"high", "weak", "mixed"}));
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--min-seq-time", gen_min_seq, "resampling floor for gaussian draws");
  gen->add_option("--out", gen_out, "output instance file")->required();

  // sched
  auto* sched = app.add_subcommand("sched", "schedule an instance");
  std::string sched_algo, sched_instance, sched_out;
  int sched_shuffles = 10;
  std::uint64_t sched_seed = 1;
  double sched_scale = 1.0;
  double sched_stretch = 1.5;
  sched->add_option("--algo", sched_algo, "algorithm")
      ->required()
      ->check(CLI::IsMember(moldsched::algorithm_names()));
  sched->add_option("--instance", sched_instance, "instance file")->required();
  sched->add_option("--out", sched_out, "schedule file (default: <instance>.sched)");
  sched->add_option("--shuffles", sched_shuffles, "batch-order shuffle rounds");
  sched->add_option("--seed", sched_seed, "shuffle seed");
  sched->add_option("--cmax-scale", sched_scale, "scale factor on the makespan reference");
  sched->add_option("--work-stretch", sched_stretch,
                    "batch admission guard: max work inflation before batch K");

  // bound
  auto* bound = app.add_subcommand("bound", "print a lower bound");
  std::string bound_criterion, bound_instance, bound_dump;
  bound->add_option("--criterion", bound_criterion, "makespan|minsum")
      ->required()
      ->check(CLI::IsMember({"makespan", "minsum"}));
  bound->add_option("--instance", bound_instance, "instance file")->required();
  bound->add_option("--dump-lp", bound_dump, "write the lp model to a file (minsum only)");

  // bench
  auto* bench = app.add_subcommand("bench", "run a ratio experiment sweep");
  std::string bench_config, bench_out;
  int bench_jobs = 1;
  bool bench_gnuplot = false;
  bench->add_option("--config", bench_config, "experiment config file")->required();
  bench->add_option("--out-dir", bench_out, "output directory")->required();
  bench->add_option("--jobs", bench_jobs, "worker threads");
  bench->add_flag("--gnuplot", bench_gnuplot, "also emit plots/render.gp");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return run_gen(gen_n, gen_m, gen_seq, gen_par, gen_seed, gen_min_seq, gen_out);
    if (sched->parsed())
      return run_sched(sched_algo, sched_instance, sched_out, sched_shuffles, sched_seed,
                       sched_scale, sched_stretch);
    if (bound->parsed()) return run_bound(bound_criterion, bound_instance, bound_dump);
    if (bench->parsed()) return run_bench(bench_config, bench_out, bench_jobs, bench_gnuplot);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
