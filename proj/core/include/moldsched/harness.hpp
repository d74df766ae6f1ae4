#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "moldsched/bicriteria.hpp"
#include "moldsched/generator.hpp"
#include "moldsched/model.hpp"

namespace moldsched {

struct WorkloadModel {
  SeqModel seq = SeqModel::Uniform1to10;
  ParModel par = ParModel::Highly;
};

// Tag format "<seq>-<par>" with seq in {uniform, mixed} and par in
// {high, weak, mixed}, e.g. "uniform-weak" or "mixed-mixed".
std::string workload_tag(const WorkloadModel& workload);
WorkloadModel parse_workload_tag(const std::string& tag);

// Scheduler registry shared by the CLI and the harness.
std::vector<std::string> algorithm_names();  // bicriteria gang seq-lptf list-*
Schedule run_algorithm(const std::string& name, const Instance& instance,
                       const BicriteriaOptions& options);

struct ExperimentConfig {
  int m = 200;
  std::vector<int> task_counts = {25, 50, 100, 200, 400};
  int runs_per_point = 40;
  std::vector<WorkloadModel> workloads;   // defaults set by default_config()
  std::vector<std::string> algorithms;    // defaults to all six
  std::uint64_t base_seed = 1;
  int shuffle_rounds = 10;
  double min_seq_time = 0.01;
};

ExperimentConfig default_config();

// Key-value text format, '#' comments:
//   m = 200
//   tasks = 25 50 100 200 400
//   runs = 40
//   workloads = uniform-weak uniform-high mixed-mixed uniform-mixed
//   algorithms = bicriteria gang seq-lptf list-shelf list-wlptf list-saf
//   base_seed = 1
//   shuffles = 10
//   min_seq_time = 0.01
// Omitted keys keep their defaults; unknown keys are errors.
ExperimentConfig read_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

struct ResultRow {
  std::string workload;
  int n = 0;
  std::string algorithm;
  int run = 0;
  std::uint64_t seed = 0;
  double makespan = 0.0;
  double minsum = 0.0;
  double cmax_bound = 0.0;
  double minsum_bound = 0.0;
  double runtime_seconds = 0.0;  // wall clock around the scheduler call only
  std::string status = "ok";     // "ok" or an error note
};

// Stable instance seed: splitmix64 chain over (base, fnv1a(workload), n,
// run), so adding algorithms or reordering points never changes instances.
std::uint64_t derive_seed(std::uint64_t base_seed, const std::string& workload, int n, int run);

// Runs every (workload, n, run) point: generates the instance, computes both
// bounds once, then times each scheduler.  A per-row failure is recorded in
// status and never aborts the sweep.  jobs > 1 distributes points over
// threads; row order and content (runtimes aside) stay deterministic.
std::vector<ResultRow> run_experiment(const ExperimentConfig& config, int jobs = 1);

struct RatioPoint {
  std::string workload;
  int n = 0;
  std::string algorithm;
  std::string criterion;  // "makespan" or "minsum"
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double avg_ratio = 0.0;  // ratio of sums: sum(objective) / sum(bound)
};

// Per (workload, n, algorithm, criterion): min and max of per-run ratios
// plus the ratio-of-sums average.  Rejects points whose bound sums to zero
// or whose rows carry errors.
std::vector<RatioPoint> summarize(const std::vector<ResultRow>& rows);

// results.csv: one line per row under the fixed header.  The runtime column
// is the only field that varies between reruns of the same config.
void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows);
std::vector<ResultRow> read_results_csv(std::istream& in);

void write_summary_csv(std::ostream& out, const std::vector<RatioPoint>& summary);

// Writes results.csv, summary.csv and plots/<workload>_<criterion>.dat
// (columns: n, then min/avg/max per algorithm).  With gnuplot_script, also
// plots/render.gp.
void emit_outputs(const std::string& out_dir, const std::vector<ResultRow>& rows,
                  const std::vector<RatioPoint>& summary, bool gnuplot_script = false);

}  // namespace moldsched
